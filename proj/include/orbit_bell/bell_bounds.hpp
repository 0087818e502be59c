#pragma once

// Quantum value and exact classical (local deterministic) bound of the Bell
// functional with coefficients c_ij = -v_i·w_j.
//
// With the singlet correlator <A_i B_j> = -v_i·w_j the quantum value is
// Σ_ij (v_i·w_j)². The classical bound is the maximum of the bilinear form
// Σ_ij A_i B_j (v_i·w_j) over sign vectors A, B; for fixed A the optimal B
// is the sign of each column sum, leaving
//
//     C = max_A Σ_j |Σ_i A_i (v_i·w_j)|.
//
// That maximum is found by walking a Gray code over A so that each step
// flips one sign and updates all column sums in O(N_B).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "orbit_bell/errors.hpp"
#include "orbit_bell/orbits.hpp"

namespace orbit_bell {

/// Largest strategy length the Gray-code search accepts.
inline constexpr std::size_t kMaxSearchSettings = 30;
/// Largest N_A + N_B the double-enumeration oracle accepts.
inline constexpr std::size_t kMaxOracleSettings = 26;

/// A deterministic ±1 outcome per measurement setting.
class Strategy {
 public:
  Strategy() = default;
  explicit Strategy(std::size_t n, int sign = 1) : signs_(n, static_cast<std::int8_t>(sign < 0 ? -1 : 1)) {}
  explicit Strategy(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
    for (auto s : signs_)
      if (s != 1 && s != -1) throw Error(ErrorKind::Parse, "strategy entries must be +1 or -1");
  }

  /// Bit i of `code`, counted from the most significant of n bits, is set
  /// iff sign i is -1.
  static Strategy from_code(std::uint64_t code, std::size_t n) {
    Strategy s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((code >> (n - 1 - i)) & 1u) s.signs_[i] = -1;
    return s;
  }

  /// Parses "+-+".
  static Strategy parse(std::string_view text) {
    std::vector<std::int8_t> s;
    for (char c : text) {
      if (c == '+') s.push_back(1);
      else if (c == '-') s.push_back(-1);
      else throw Error(ErrorKind::Parse, "bad strategy character '" + std::string(1, c) + "'");
    }
    return Strategy(std::move(s));
  }

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (auto s : signs_) c = (c << 1) | (s < 0 ? 1u : 0u);
    return c;
  }

  std::size_t plus_count() const {
    return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), std::int8_t{1}));
  }

  Strategy negated() const {
    Strategy r = *this;
    for (auto& s : r.signs_) s = static_cast<std::int8_t>(-s);
    return r;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (auto s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
  }

  friend bool operator==(const Strategy&, const Strategy&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

/// Σ_i A_i·v_i
inline Vec3 signed_sum(std::span<const Vec3> vertices, const Strategy& signs) {
  if (signs.size() != vertices.size())
    throw Error(ErrorKind::DimensionMismatch, "strategy length does not match the orbit size");
  Vec3 s;
  for (std::size_t i = 0; i < vertices.size(); ++i) s += static_cast<double>(signs[i]) * vertices[i];
  return s;
}

struct BoundResult {
  std::string alice_label;
  std::string bob_label;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  double classical_bound = 0.0;
  double quantum_value = 0.0;
  double ratio = 0.0;
  Strategy alice_strategy;
  Strategy bob_strategy;
};

inline double quantum_value(const GramMatrix& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (double e : g.row(i)) sum += e * e;
  return sum;
}

/// N_A·N_B/3, valid when both orbits come from the same real 3D irrep.
inline double quantum_value_closed_form(std::size_t n_a, std::size_t n_b) {
  return static_cast<double>(n_a) * static_cast<double>(n_b) / 3.0;
}

/// Quantum value for the |φ+> state, Σ_ij (v_i · I_y w_j)².
inline double phi_plus_quantum_value(const Orbit& alice, const Orbit& bob) {
  return quantum_value(gram(alice, reflect_y(bob)));
}

/// Σ_ij A_i B_j g_ij, summed row by row in index order.
inline double evaluate_strategies(const GramMatrix& g, const Strategy& a, const Strategy& b) {
  if (a.size() != g.rows() || b.size() != g.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "strategies " + std::to_string(a.size()) + "x" + std::to_string(b.size()) + " vs gram " +
                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  double total = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j) row += b[j] * g(i, j);
    total += a[i] * row;
  }
  return total;
}

namespace detail {

/// Column sums below this magnitude count as zero when recovering the
/// responding party's signs (which are then +1).
inline constexpr double kZeroColumn = 1e-12;

struct SearchCandidate {
  double value = -1.0;
  std::uint64_t code = 0;
  bool valid = false;
};

inline bool ties(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

/// Strictly better value, or a tie with a smaller sign code.
inline bool better(double value, std::uint64_t code, const SearchCandidate& best) {
  if (!best.valid) return true;
  if (ties(value, best.value)) return code < best.code;
  return value > best.value;
}

/// Σ_j |Σ_i s_i g_ij| from scratch, fixed summation order.
inline double abs_column_objective(const GramMatrix& g, const Strategy& s) {
  double total = 0.0;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i) col += s[i] * g(i, j);
    total += std::abs(col);
  }
  return total;
}

/// Signs of the column sums Σ_i s_i g_ij (zero -> +1).
inline Strategy respond(const GramMatrix& g, const Strategy& s) {
  std::vector<std::int8_t> out(g.cols(), 1);
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i) col += s[i] * g(i, j);
    if (col < -kZeroColumn) out[j] = -1;
  }
  return Strategy(std::move(out));
}

/// Searches one partition: sign 0 is +1, signs 1..prefix_bits are fixed by
/// `prefix`, and the remaining low bits are walked in Gray-code order.
inline SearchCandidate search_partition(const GramMatrix& g, std::size_t prefix_bits, std::uint64_t prefix) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  const std::size_t free_bits = n - 1 - prefix_bits;

  // Low `free_bits` bits of the code map to indices n-1, n-2, ...
  std::uint64_t code = prefix << free_bits;
  Strategy start = Strategy::from_code(code, n);
  std::vector<double> col(m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) col[j] += start[i] * g(i, j);
  std::vector<double> sign(n);
  for (std::size_t i = 0; i < n; ++i) sign[i] = start[i];

  SearchCandidate best;
  auto consider = [&] {
    double v = 0.0;
    for (double c : col) v += std::abs(c);
    if (better(v, code, best)) best = {v, code, true};
  };
  consider();
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  for (std::uint64_t t = 1; t < steps; ++t) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(t));
    const std::size_t idx = n - 1 - bit;
    sign[idx] = -sign[idx];
    const double twice = 2.0 * sign[idx];
    const auto row = g.row(idx);
    for (std::size_t j = 0; j < m; ++j) col[j] += twice * row[j];
    code ^= std::uint64_t{1} << bit;
    consider();
  }
  return best;
}

inline unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Exact classical bound by exhaustive search over the smaller party.
///
/// The first enumerated sign is pinned to +1 (the objective is invariant
/// under negating a whole strategy). The strategy space is split into a fixed
/// set of partitions by the next few sign bits; `threads` only decides how
/// partitions are scheduled, so the result does not depend on it. Among
/// maximizers the smallest sign code wins (+1 -> 0, -1 -> 1, index 0 most
/// significant), and the reported bound is re-evaluated on the winning pair.
inline BoundResult classical_bound(const GramMatrix& g, unsigned threads = 1) {
  BoundResult r;
  r.alice_label = g.alice_label();
  r.bob_label = g.bob_label();
  r.n_a = g.rows();
  r.n_b = g.cols();
  r.quantum_value = quantum_value(g);
  if (g.rows() == 0 || g.cols() == 0) {
    r.alice_strategy = Strategy(g.rows());
    r.bob_strategy = Strategy(g.cols());
    return r;
  }

  const bool swapped = g.cols() < g.rows();
  const GramMatrix work = swapped ? g.transposed() : g;
  const std::size_t n = work.rows();
  if (n > kMaxSearchSettings)
    throw Error(ErrorKind::BudgetExceeded, "smaller side has " + std::to_string(n) + " settings (max " +
                                               std::to_string(kMaxSearchSettings) + ")");

  const std::size_t prefix_bits = std::min<std::size_t>(n - 1, 6);
  const std::size_t partitions = std::size_t{1} << prefix_bits;
  std::vector<detail::SearchCandidate> found(partitions);
  const unsigned workers = std::min<unsigned>(detail::resolve_threads(threads), static_cast<unsigned>(partitions));
  if (workers <= 1) {
    for (std::size_t p = 0; p < partitions; ++p) found[p] = detail::search_partition(work, prefix_bits, p);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t p = w; p < partitions; p += workers)
          found[p] = detail::search_partition(work, prefix_bits, p);
      });
  }

  // Reduce on values recomputed from scratch so the winner does not depend
  // on the Gray-code path that reached it.
  detail::SearchCandidate best;
  for (const auto& c : found) {
    const double v = detail::abs_column_objective(work, Strategy::from_code(c.code, n));
    if (detail::better(v, c.code, best)) best = {v, c.code, true};
  }

  const Strategy enumerated = Strategy::from_code(best.code, n);
  const Strategy response = detail::respond(work, enumerated);
  r.alice_strategy = swapped ? response : enumerated;
  r.bob_strategy = swapped ? enumerated : response;
  r.classical_bound = evaluate_strategies(g, r.alice_strategy, r.bob_strategy);
  r.ratio = r.classical_bound > 0.0 ? r.quantum_value / r.classical_bound : 0.0;
  return r;
}

/// Independent check of the classical bound: every (A, B) pair, no sign
/// pinning, no absolute values, no response shortcut.
inline double classical_bound_oracle(const GramMatrix& g) {
  const std::size_t na = g.rows(), nb = g.cols();
  if (na + nb > kMaxOracleSettings)
    throw Error(ErrorKind::BudgetExceeded, "oracle limited to N_A + N_B <= " + std::to_string(kMaxOracleSettings));
  if (na == 0 || nb == 0) return 0.0;
  double best = -INFINITY;
  std::vector<double> weighted(nb);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << na); ++a) {
    // weighted_j = Σ_i A_i g_ij for this A; the inner loop then runs all B.
    std::fill(weighted.begin(), weighted.end(), 0.0);
    for (std::size_t i = 0; i < na; ++i) {
      const double s = ((a >> i) & 1u) ? -1.0 : 1.0;
      for (std::size_t j = 0; j < nb; ++j) weighted[j] += s * g(i, j);
    }
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << nb); ++b) {
      double v = 0.0;
      for (std::size_t j = 0; j < nb; ++j) v += ((b >> j) & 1u) ? -weighted[j] : weighted[j];
      best = std::max(best, v);
    }
  }
  return best;
}

}  // namespace orbit_bell
