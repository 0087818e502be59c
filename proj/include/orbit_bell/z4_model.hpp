#pragma once

// The cyclic group Z4 acting through the reducible 3D representation
// (1D block on x, 2D rotation block on y-z). Generic orbits have four
// vertices
//
//   v1 = (a, b, c), v2 = (-a, c, -b), v3 = (a, -b, -c), v4 = (-a, -c, b),
//
// and include the regular tetrahedron at a² = b² = c² = 1/3. Alice is fixed to
// that tetrahedron; Bob's orbit comes from an arbitrary unit (a, b, c).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "orbit_bell/bell_bounds.hpp"
#include "orbit_bell/errors.hpp"
#include "orbit_bell/orbits.hpp"
#include "orbit_bell/representations.hpp"

namespace orbit_bell {

struct Z4InitialVector {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  Vec3 vec() const { return {a, b, c}; }

  /// Throws NonUnitInitialVector unless a² + b² + c² = 1.
  static Z4InitialVector checked(double a, double b, double c) {
    const Z4InitialVector v{a, b, c};
    if (!is_unit(v.vec()))
      throw Error(ErrorKind::NonUnitInitialVector, "a²+b²+c² = " + std::to_string(dot(v.vec(), v.vec())));
    return v;
  }

  static Z4InitialVector regular_tetrahedron() {
    const double t = 1.0 / std::sqrt(3.0);
    return {t, t, t};
  }
};

struct Z4OrbitGeometry {
  /// v1·v2 = v1·v4 = v2·v3 = v3·v4
  double cos_psi = 0.0;
  /// v1·v3 = v2·v4
  double cos_phi = 0.0;
  /// (v2 - v4)·(v1 - v3)
  double diagonal_dot = 0.0;
};

/// Orbit of v under z4_rep() in the order v1..v4. Coincident images are
/// merged, so e.g. (1, 0, 0) yields two vertices with stabilizer order 2.
inline Orbit z4_orbit(const Z4InitialVector& v, std::string label = "z4") {
  return generate_orbit(z4_rep(), v.vec(), std::move(label));
}

/// Angle cosines from the four images g^k·v (taken with multiplicity).
inline Z4OrbitGeometry z4_geometry(const Z4InitialVector& v) {
  const auto& z4 = z4_rep();
  std::array<Vec3, 4> p;
  for (std::size_t k = 0; k < 4; ++k) p[k] = z4[k] * v.vec();
  return {dot(p[0], p[1]), dot(p[0], p[2]), dot(p[1] - p[3], p[0] - p[2])};
}

/// Throws DegenerateOrbit if the orbit has fewer than four distinct settings.
inline void require_generic(const Orbit& orbit) {
  if (orbit.size() != z4_rep().order())
    throw Error(ErrorKind::DegenerateOrbit,
                orbit.label + ": " + std::to_string(orbit.size()) + " distinct settings instead of 4");
}

/// Unitary change of basis that diagonalizes every element of z4_rep().
inline std::array<std::array<std::complex<double>, 3>, 3> z4_diagonalizer() {
  const double r = 1.0 / std::sqrt(2.0);
  using C = std::complex<double>;
  return {{{C(1), C(0), C(0)}, {C(0), C(r), C(r)}, {C(0), C(0, r), C(0, -r)}}};
}

/// U†·v
inline std::array<std::complex<double>, 3> z4_to_eigenbasis(Vec3 v) {
  const auto u = z4_diagonalizer();
  std::array<std::complex<double>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) out[i] += std::conj(u[k][i]) * v[k];
  return out;
}

/// 16·Σ_i |ṽ_i|²|w̃_i|² with ṽ = U†v, w̃ = U†w. Equals the sum of
/// (g_α v · g_β w)² over all 16 pairs of group elements.
inline double z4_quantum_value(const Z4InitialVector& v, const Z4InitialVector& w) {
  const auto vt = z4_to_eigenbasis(v.vec());
  const auto wt = z4_to_eigenbasis(w.vec());
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += std::norm(vt[i]) * std::norm(wt[i]);
  return 16.0 * s;
}

/// Σ_{α,β} (g_α v · g_β w)² by direct summation.
inline double z4_quantum_value_direct(const Z4InitialVector& v, const Z4InitialVector& w) {
  double s = 0.0;
  for (const auto& ga : z4_rep().elements())
    for (const auto& gb : z4_rep().elements()) {
      const double d = dot(ga * v.vec(), gb * w.vec());
      s += d * d;
    }
  return s;
}

/// Classical bound for Alice = regular tetrahedron, Bob = orbit of w:
/// (1/√3)·max(16|a|, 8(|b| + |c|)).
inline double z4_classical_closed_form(const Z4InitialVector& w) {
  return std::max(16.0 * std::abs(w.a), 8.0 * (std::abs(w.b) + std::abs(w.c))) / std::sqrt(3.0);
}

/// The same bound from the generic exhaustive search.
inline BoundResult z4_classical_search(const Z4InitialVector& w, unsigned threads = 1) {
  const Orbit alice = z4_orbit(Z4InitialVector::regular_tetrahedron(), "z4_tetrahedron");
  const Orbit bob = z4_orbit(w, "z4_bob");
  require_generic(bob);
  return classical_bound(gram(alice, bob), threads);
}

struct Z4Minimum {
  Z4InitialVector minimizer;
  double classical = 0.0;
  double quantum = 0.0;
  bool violated = false;
};

/// Minimum of the closed-form bound over the unit sphere.
///
/// For fixed |a| the smallest |b|+|c| on b² + c² = 1 - a² is √(1 - a²), with
/// one of b, c zero. The max of 16|a| and 8√(1 - a²) is smallest where they
/// balance, a = 1/√5, giving C = 16/√15. Minimizers form a continuum; the
/// representative (1/√5, 2/√5, 0) is returned.
inline Z4Minimum z4_minimize_classical() {
  Z4Minimum m;
  m.minimizer = {1.0 / std::sqrt(5.0), 2.0 / std::sqrt(5.0), 0.0};
  m.classical = z4_classical_closed_form(m.minimizer);
  m.quantum = z4_quantum_value(Z4InitialVector::regular_tetrahedron(), m.minimizer);
  m.violated = m.quantum > m.classical;
  return m;
}

/// i-th of `count` points of a Fibonacci lattice on the unit sphere.
inline Z4InitialVector fibonacci_sphere_point(std::size_t i, std::size_t count) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / golden;
  return {r * std::cos(theta), r * std::sin(theta), z};
}

struct SphereSampleMinimum {
  std::size_t index = 0;
  Z4InitialVector point;
  double value = std::numeric_limits<double>::infinity();
};

/// Smallest closed-form bound over a Fibonacci lattice (first index wins ties).
inline SphereSampleMinimum z4_sample_minimum(std::size_t count) {
  SphereSampleMinimum best;
  for (std::size_t i = 0; i < count; ++i) {
    const auto p = fibonacci_sphere_point(i, count);
    const double v = z4_classical_closed_form(p);
    if (v < best.value) best = {i, p, v};
  }
  return best;
}

struct Z4ScanRow {
  Z4InitialVector w;
  double closed_form = 0.0;
  /// NaN when Bob's orbit is degenerate.
  double search = std::numeric_limits<double>::quiet_NaN();
  double quantum = 0.0;
  double ratio = 0.0;
  bool degenerate = false;
  bool violated = false;
};

inline Z4ScanRow z4_scan_point(const Z4InitialVector& w, unsigned threads = 1) {
  Z4ScanRow row;
  row.w = w;
  row.closed_form = z4_classical_closed_form(w);
  row.quantum = z4_quantum_value(Z4InitialVector::regular_tetrahedron(), w);
  try {
    row.search = z4_classical_search(w, threads).classical_bound;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateOrbit) throw;
    row.degenerate = true;
  }
  const double c = row.degenerate ? row.closed_form : row.search;
  row.ratio = row.quantum / c;
  row.violated = !row.degenerate && row.quantum > c * (1.0 + 1e-12);
  return row;
}

/// a = cosθ, (b, c) = sinθ·(cosφ, sinφ), with θ over `polar_steps + 1`
/// values in [0, π] and φ over `azimuth_steps` values in [0, 2π). The poles
/// appear once each.
inline std::vector<Z4InitialVector> z4_scan_grid(std::size_t polar_steps, std::size_t azimuth_steps) {
  std::vector<Z4InitialVector> pts;
  for (std::size_t i = 0; i <= polar_steps; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(polar_steps, 1));
    const bool pole = i == 0 || i == polar_steps;
    const std::size_t n_phi = pole ? 1 : azimuth_steps;
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(azimuth_steps);
      // exact poles: the degenerate (±1, 0, 0) orbits
      const double a = pole ? (i == 0 ? 1.0 : -1.0) : std::cos(theta);
      const double s = pole ? 0.0 : std::sin(theta);
      pts.push_back({a, s * std::cos(phi), s * std::sin(phi)});
    }
  }
  return pts;
}

}  // namespace orbit_bell
