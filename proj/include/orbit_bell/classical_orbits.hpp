#pragma once

// Decomposition of the 2^N "classical" vectors S = Σ_i A_i v_i into orbits of
// the generating group, grouped by the number N⁺ of +1 signs. G permutes the
// orbit vertices, so it maps each N⁺ class onto itself.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbit_bell/bell_bounds.hpp"
#include "orbit_bell/errors.hpp"
#include "orbit_bell/orbits.hpp"
#include "orbit_bell/representations.hpp"

namespace orbit_bell {

inline constexpr std::size_t kMaxClassifySettings = 24;

struct ClassicalOrbit {
  /// Vector reached by the smallest sign code in this orbit.
  Vec3 representative;
  Strategy representative_signs;
  /// Distinct vectors in the orbit (1 for the zero vector).
  std::size_t orbit_size = 0;
  /// Sign assignments whose vector lies in this orbit.
  std::uint64_t assignment_count = 0;
  double length = 0.0;
  std::vector<Vec3> members;
};

struct ClassicalOrbitDecomposition {
  std::string label;
  std::string rep_name;
  std::size_t n = 0;
  /// Indexed by N⁺ = 0..n.
  std::vector<std::vector<ClassicalOrbit>> by_plus_count;

  std::uint64_t total_assignments() const {
    std::uint64_t t = 0;
    for (const auto& level : by_plus_count)
      for (const auto& o : level) t += o.assignment_count;
    return t;
  }

  /// Index of the orbit containing v among the N⁺ = plus_count orbits.
  std::optional<std::size_t> find(std::size_t plus_count, Vec3 v, double eps = 1e-7) const {
    const auto& level = by_plus_count.at(plus_count);
    for (std::size_t k = 0; k < level.size(); ++k)
      if (find_vertex(level[k].members, v, eps)) return k;
    return std::nullopt;
  }
};

namespace detail {

// Vectors are bucketed on a 1e-7 grid; equal vectors (differing by rounding
// only) can straddle a cell boundary, so lookups probe the neighboring cells.
using GridKey = std::array<std::int64_t, 3>;

struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto c : k) h = (h ^ static_cast<std::uint64_t>(c)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

class VectorIndex {
 public:
  explicit VectorIndex(double match_eps) : eps_(match_eps) {}

  std::optional<std::size_t> lookup(Vec3 v) const {
    const GridKey k = key(v);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          auto it = map_.find({k[0] + dx, k[1] + dy, k[2] + dz});
          if (it != map_.end() && approx_equal(vectors_[it->second], v, eps_)) return it->second;
        }
    return std::nullopt;
  }

  /// Index of v, inserting it if new.
  std::size_t intern(Vec3 v, bool& inserted) {
    if (auto i = lookup(v)) {
      inserted = false;
      return *i;
    }
    inserted = true;
    vectors_.push_back(v);
    map_.emplace(key(v), vectors_.size() - 1);
    return vectors_.size() - 1;
  }

  const Vec3& operator[](std::size_t i) const { return vectors_[i]; }
  std::size_t size() const noexcept { return vectors_.size(); }

 private:
  static GridKey key(Vec3 v) {
    return {std::llround(v.x * 1e7), std::llround(v.y * 1e7), std::llround(v.z * 1e7)};
  }

  double eps_;
  std::vector<Vec3> vectors_;
  std::unordered_map<GridKey, std::size_t, GridKeyHash> map_;
};

}  // namespace detail

inline ClassicalOrbitDecomposition classify_classical_vectors(const Orbit& orbit, const FiniteGroupRep& rep) {
  const std::size_t n = orbit.size();
  if (n > kMaxClassifySettings)
    throw Error(ErrorKind::BudgetExceeded,
                orbit.label + ": " + std::to_string(n) + " settings (max " + std::to_string(kMaxClassifySettings) + ")");
  // Sums of up to n unit vectors; rounding grows roughly linearly in n.
  const double eps = kVectorEps * static_cast<double>(std::max<std::size_t>(n, 1));

  struct Distinct {
    std::uint64_t first_code = 0;
    std::uint64_t count = 0;
  };
  std::vector<detail::VectorIndex> index(n + 1, detail::VectorIndex(eps));
  std::vector<std::vector<Distinct>> distinct(n + 1);

  // Ascending code order, so the first hit of a vector is its smallest code.
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < total; ++code) {
    const Strategy signs = Strategy::from_code(code, n);
    const Vec3 s = signed_sum(orbit.vertices, signs);
    const std::size_t plus = signs.plus_count();
    bool inserted = false;
    const std::size_t k = index[plus].intern(s, inserted);
    if (inserted) distinct[plus].push_back({code, 0});
    ++distinct[plus][k].count;
  }

  ClassicalOrbitDecomposition out;
  out.label = orbit.label;
  out.rep_name = rep.name();
  out.n = n;
  out.by_plus_count.resize(n + 1);
  for (std::size_t plus = 0; plus <= n; ++plus) {
    const auto& idx = index[plus];
    std::vector<bool> assigned(idx.size(), false);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (assigned[k]) continue;
      ClassicalOrbit co;
      co.representative = idx[k];
      co.representative_signs = Strategy::from_code(distinct[plus][k].first_code, n);
      co.length = norm(idx[k]);
      std::vector<std::size_t> member_ids;
      for (const auto& g : rep.elements()) {
        const Vec3 image = g * idx[k];
        auto hit = idx.lookup(image);
        if (!hit)
          throw Error(ErrorKind::OrbitNotClosed,
                      orbit.label + ": image of a classical vector is not a classical vector of the same N+ under " +
                          rep.name());
        if (std::find(member_ids.begin(), member_ids.end(), *hit) == member_ids.end()) member_ids.push_back(*hit);
      }
      for (auto id : member_ids) {
        assigned[id] = true;
        co.assignment_count += distinct[plus][id].count;
        co.members.push_back(idx[id]);
      }
      co.orbit_size = member_ids.size();
      out.by_plus_count[plus].push_back(std::move(co));
    }
  }
  return out;
}

}  // namespace orbit_bell
