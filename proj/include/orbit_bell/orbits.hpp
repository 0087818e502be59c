#pragma once

// Measurement-setting orbits {D(g)·v0}, the five canonical solids, Gram
// matrices between two orbits and the y-reflection.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbit_bell/errors.hpp"
#include "orbit_bell/linalg.hpp"
#include "orbit_bell/representations.hpp"

namespace orbit_bell {

struct Orbit {
  std::string label;
  std::string rep_name;
  Vec3 initial_vector;
  std::vector<Vec3> vertices;
  std::size_t stabilizer_order = 1;

  std::size_t size() const noexcept { return vertices.size(); }
};

inline std::optional<std::size_t> find_vertex(std::span<const Vec3> vertices, Vec3 u,
                                              double eps = kVectorEps) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (approx_equal(vertices[i], u, eps)) return i;
  return std::nullopt;
}

/// Set equality under eps matching; order is ignored.
inline bool same_vertex_set(std::span<const Vec3> a, std::span<const Vec3> b, double eps = kVectorEps) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](Vec3 u) { return find_vertex(b, u, eps).has_value(); }) &&
         std::all_of(b.begin(), b.end(), [&](Vec3 u) { return find_vertex(a, u, eps).has_value(); });
}

/// Number of g with D(g)·v = v.
inline std::size_t stabilizer_order(const FiniteGroupRep& rep, Vec3 v) {
  return static_cast<std::size_t>(std::count_if(rep.elements().begin(), rep.elements().end(),
                                                [&](const Matrix3& g) { return approx_equal(g * v, v); }));
}

/// Orbit of v0 in first-discovery order over the element order of `rep`.
inline Orbit generate_orbit(const FiniteGroupRep& rep, Vec3 v0, std::string label) {
  if (!is_unit(v0))
    throw Error(ErrorKind::NonUnitInitialVector, label + ": |v0| = " + std::to_string(norm(v0)));
  Orbit o;
  o.label = std::move(label);
  o.rep_name = rep.name();
  o.initial_vector = v0;
  for (const auto& g : rep.elements()) {
    const Vec3 u = g * v0;
    if (!find_vertex(o.vertices, u)) o.vertices.push_back(u);
  }
  const std::size_t fixed = stabilizer_order(rep, v0);
  if (rep.order() % o.vertices.size() != 0 || rep.order() / o.vertices.size() != fixed)
    throw Error(ErrorKind::StabilizerMismatch,
                o.label + ": |G|=" + std::to_string(rep.order()) + ", |orbit|=" +
                    std::to_string(o.vertices.size()) + ", fixed points=" + std::to_string(fixed));
  o.stabilizer_order = fixed;
  return o;
}

/// max over (g, u) of the distance from D(g)·u to the nearest orbit vertex.
inline double orbit_closure_residual(const FiniteGroupRep& rep, const Orbit& orbit) {
  double worst = 0.0;
  for (const auto& g : rep.elements())
    for (const auto& u : orbit.vertices) {
      const Vec3 gu = g * u;
      double best = INFINITY;
      for (const auto& w : orbit.vertices) best = std::min(best, norm(gu - w));
      worst = std::max(worst, best);
    }
  return worst;
}

enum class Solid { Tetrahedron, Octahedron, Cube, Cuboctahedron, TruncatedOctahedron };

inline constexpr std::array<Solid, 5> kAllSolids = {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube,
                                                    Solid::Cuboctahedron, Solid::TruncatedOctahedron};

constexpr std::string_view to_string(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Octahedron: return "octahedron";
    case Solid::Cube: return "cube";
    case Solid::Cuboctahedron: return "cuboctahedron";
    case Solid::TruncatedOctahedron: return "truncated_octahedron";
  }
  return "?";
}

/// Accepts the canonical names, with '-' or ' ' in place of '_'.
inline std::optional<Solid> parse_solid(std::string_view name) {
  std::string n(name);
  std::replace(n.begin(), n.end(), '-', '_');
  std::replace(n.begin(), n.end(), ' ', '_');
  for (Solid s : kAllSolids)
    if (n == to_string(s)) return s;
  return std::nullopt;
}

/// The group used to generate each solid. S4 wherever it suffices; the cube
/// needs O_h since (1,0,0) has an S4 orbit of only four points.
inline const FiniteGroupRep& generating_rep(Solid s) {
  return s == Solid::Cube ? oh_rep() : s4_irrep();
}

inline Vec3 initial_vector(Solid s) {
  switch (s) {
    case Solid::Tetrahedron:
    case Solid::Cube: return {1.0, 0.0, 0.0};
    case Solid::Octahedron: return {1.0 / std::sqrt(3.0), std::sqrt(2.0 / 3.0), 0.0};
    case Solid::Cuboctahedron: return {-std::sqrt(2.0 / 3.0), 1.0 / std::sqrt(3.0), 0.0};
    case Solid::TruncatedOctahedron: return {std::sqrt(3.0 / 5.0), 0.0, std::sqrt(2.0 / 5.0)};
  }
  return {};
}

inline Orbit canonical_solid(Solid s) {
  return generate_orbit(generating_rep(s), initial_vector(s), std::string(to_string(s)));
}

/// N_A x N_B matrix of raw inner products v_i·w_j. The Bell coefficients are
/// the negated entries; bound computations apply the sign themselves.
class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t rows, std::size_t cols, std::string alice_label = "alice",
             std::string bob_label = "bob")
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0),
        alice_label_(std::move(alice_label)), bob_label_(std::move(bob_label)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::string& alice_label() const noexcept { return alice_label_; }
  const std::string& bob_label() const noexcept { return bob_label_; }

  GramMatrix transposed() const {
    GramMatrix t(cols_, rows_, bob_label_, alice_label_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  GramMatrix negated() const {
    GramMatrix n = *this;
    for (auto& e : n.data_) e = -e;
    return n;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
  std::string alice_label_;
  std::string bob_label_;
};

inline GramMatrix gram(std::span<const Vec3> alice, std::span<const Vec3> bob,
                       std::string alice_label = "alice", std::string bob_label = "bob") {
  GramMatrix g(alice.size(), bob.size(), std::move(alice_label), std::move(bob_label));
  for (std::size_t i = 0; i < alice.size(); ++i)
    for (std::size_t j = 0; j < bob.size(); ++j) g(i, j) = dot(alice[i], bob[j]);
  return g;
}

inline GramMatrix gram(const Orbit& alice, const Orbit& bob) {
  return gram(alice.vertices, bob.vertices, alice.label, bob.label);
}

/// (x, y, z) -> (x, -y, z) on every vertex. The result is an orbit of the
/// conjugated representation I_y·D·I_y, hence the suffixed rep name.
inline Orbit reflect_y(const Orbit& orbit) {
  Orbit r = orbit;
  r.label += "/Iy";
  r.rep_name += "/Iy";
  r.initial_vector = kReflectY * orbit.initial_vector;
  for (auto& v : r.vertices) v = kReflectY * v;
  return r;
}

inline bool is_reflect_y_invariant(const Orbit& orbit) {
  return same_vertex_set(orbit.vertices, reflect_y(orbit).vertices);
}

}  // namespace orbit_bell
