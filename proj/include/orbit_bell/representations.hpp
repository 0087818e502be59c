#pragma once

// Finite groups of real orthogonal 3x3 matrices: closure, multiplication
// tables, and the concrete representations of S4, O_h = S4 x S2 and Z4.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbit_bell/errors.hpp"
#include "orbit_bell/linalg.hpp"

namespace orbit_bell {

/// An immutable finite matrix group. Element 0 is the identity.
class FiniteGroupRep {
 public:
  /// Validates closure over an explicit element list and builds the tables.
  /// The identity must be present; it is moved to index 0 if needed.
  static FiniteGroupRep from_elements(std::string name, std::vector<Matrix3> elements) {
    auto id = std::find_if(elements.begin(), elements.end(),
                           [](const Matrix3& m) { return approx_equal(m, Matrix3::identity()); });
    if (id == elements.end()) throw Error(ErrorKind::OrderExceeded, name + ": identity missing");
    std::rotate(elements.begin(), id, id + 1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!is_orthogonal(elements[i]))
        throw Error(ErrorKind::NonOrthogonalGenerator, name + ": element " + std::to_string(i));
      for (std::size_t j = 0; j < i; ++j)
        if (approx_equal(elements[i], elements[j]))
          throw Error(ErrorKind::OrderExceeded, name + ": duplicate element " + std::to_string(i));
    }
    FiniteGroupRep g;
    g.name_ = std::move(name);
    g.elements_ = std::move(elements);
    g.build_tables();
    return g;
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const Matrix3> elements() const noexcept { return elements_; }
  const Matrix3& operator[](std::size_t i) const { return elements_[i]; }

  /// Index of a*b.
  std::size_t mult(std::size_t a, std::size_t b) const { return mult_table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_table_[a]; }

  std::optional<std::size_t> find(const Matrix3& m, double eps = kMatrixEps) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (approx_equal(elements_[i], m, eps)) return i;
    return std::nullopt;
  }

 private:
  void build_tables() {
    const std::size_t n = order();
    mult_table_.assign(n * n, 0);
    inverse_table_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto idx = find(elements_[a] * elements_[b]);
        if (!idx) throw Error(ErrorKind::OrderExceeded, name_ + ": element set is not closed");
        mult_table_[a * n + b] = *idx;
        if (*idx == 0) inverse_table_[a] = b;
      }
      if (inverse_table_[a] == n) throw Error(ErrorKind::OrderExceeded, name_ + ": missing inverse");
    }
  }

  std::string name_;
  std::vector<Matrix3> elements_;
  std::vector<std::size_t> mult_table_;
  std::vector<std::size_t> inverse_table_;
};

/// Smallest multiplicatively closed set containing the generators.
///
/// Breadth-first: starting from the identity, every discovered element is
/// right-multiplied by each generator in the listed order and new products
/// are appended. Element order is therefore a pure function of the
/// generator list.
inline FiniteGroupRep close_under_multiplication(std::span<const Matrix3> generators,
                                                 std::size_t max_order, std::string name = "G") {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_orthogonal(generators[i]))
      throw Error(ErrorKind::NonOrthogonalGenerator,
                  "generator " + std::to_string(i) + " fails MᵀM = I (defect " +
                      std::to_string(orthogonality_defect(generators[i])) + ")");

  std::vector<Matrix3> elements{Matrix3::identity()};
  std::deque<std::size_t> work{0};
  auto known = [&](const Matrix3& m) {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const Matrix3& e) { return approx_equal(e, m); });
  };
  while (!work.empty()) {
    const Matrix3 a = elements[work.front()];
    work.pop_front();
    for (const auto& g : generators) {
      Matrix3 p = a * g;
      if (known(p)) continue;
      if (elements.size() >= max_order)
        throw Error(ErrorKind::OrderExceeded, "closure passed " + std::to_string(max_order) + " elements");
      elements.push_back(p);
      work.push_back(elements.size() - 1);
    }
  }
  return FiniteGroupRep::from_elements(std::move(name), std::move(elements));
}

inline FiniteGroupRep close_under_multiplication(std::initializer_list<Matrix3> generators,
                                                 std::size_t max_order, std::string name = "G") {
  return close_under_multiplication(std::span<const Matrix3>(generators.begin(), generators.size()),
                                    max_order, std::move(name));
}

/// Matrices of the six transpositions (12), (13), (14), (23), (24), (34) in
/// the 3D irreducible representation of S4, in that order.
inline std::array<Matrix3, 6> s4_transpositions() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0), s8 = std::sqrt(8.0);
  std::array<Matrix3, 6> t;
  t[0].m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  t[1].m = {{{1, 0, 0}, {0, -0.5, -s3 / 2}, {0, -s3 / 2, 0.5}}};
  t[2].m = {{{-1.0 / 3, -s2 / 3, -s6 / 3}, {-s2 / 3, 5.0 / 6, -s3 / 6}, {-s6 / 3, -s3 / 6, 0.5}}};
  t[3].m = {{{1, 0, 0}, {0, -0.5, s3 / 2}, {0, s3 / 2, 0.5}}};
  t[4].m = {{{-1.0 / 3, -s2 / 3, s6 / 3}, {-s2 / 3, 5.0 / 6, s3 / 6}, {s6 / 3, s3 / 6, 0.5}}};
  t[5].m = {{{-1.0 / 3, s8 / 3, 0}, {s8 / 3, 1.0 / 3, 0}, {0, 0, 1}}};
  return t;
}

inline const FiniteGroupRep& s4_irrep() {
  static const FiniteGroupRep rep = [] {
    const auto t = s4_transpositions();
    return close_under_multiplication(t, 24, "S4");
  }();
  return rep;
}

/// O_h as {+M} followed by {-M} for M in s4_irrep(), in s4 order.
inline const FiniteGroupRep& oh_rep() {
  static const FiniteGroupRep rep = [] {
    const auto s4 = s4_irrep().elements();
    std::vector<Matrix3> els(s4.begin(), s4.end());
    for (const auto& m : s4) els.push_back(-1.0 * m);
    return FiniteGroupRep::from_elements("Oh", std::move(els));
  }();
  return rep;
}

/// The generator of the subduced Z4 representation in the basis where it is
/// block diagonal (1D block on x, 2D rotation block on y-z).
inline Matrix3 z4_generator() {
  Matrix3 g;
  g.m = {{{-1, 0, 0}, {0, 0, 1}, {0, -1, 0}}};
  return g;
}

/// {e, g, g², g³} in that order.
inline const FiniteGroupRep& z4_rep() {
  static const FiniteGroupRep rep = [] {
    const Matrix3 g = z4_generator();
    return FiniteGroupRep::from_elements("Z4", {Matrix3::identity(), g, g * g, g * g * g});
  }();
  return rep;
}

/// max over (a,b,c,d) of |Σ_g D_ab(g) D_cd(g) − (|G|/3) δ_ac δ_bd|.
///
/// Zero (to rounding) for a real 3D irreducible representation. Reducible
/// representations give a large residual; this only reports it.
inline double verify_orthogonality(const FiniteGroupRep& rep) {
  const double expected = static_cast<double>(rep.order()) / 3.0;
  double residual = 0.0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t d = 0; d < 3; ++d) {
          double sum = 0.0;
          for (const auto& g : rep.elements()) sum += g(a, b) * g(c, d);
          const double target = (a == c && b == d) ? expected : 0.0;
          residual = std::max(residual, std::abs(sum - target));
        }
  return residual;
}

}  // namespace orbit_bell
