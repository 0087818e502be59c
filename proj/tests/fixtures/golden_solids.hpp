#pragma once

// Golden vertex lists typed in by hand. Kept independent of the orbit
// generator: nothing here is computed from a group.

#include <cmath>
#include <vector>

#include "orbit_bell/linalg.hpp"

namespace fixtures {

using orbit_bell::Vec3;

inline std::vector<Vec3> tetrahedron() {
  const double s2 = std::sqrt(2.0), r23 = std::sqrt(2.0 / 3.0);
  return {{1, 0, 0}, {-1.0 / 3, -s2 / 3, r23}, {-1.0 / 3, 2 * s2 / 3, 0}, {-1.0 / 3, -s2 / 3, -r23}};
}

inline std::vector<Vec3> octahedron() {
  const double i3 = 1 / std::sqrt(3.0), i6 = 1 / std::sqrt(6.0), i2 = 1 / std::sqrt(2.0), r23 = std::sqrt(2.0 / 3.0);
  return {{-i3, i6, i2}, {i3, -i6, -i2}, {i3, r23, 0}, {-i3, -r23, 0}, {-i3, i6, -i2}, {i3, -i6, i2}};
}

inline std::vector<Vec3> cube() {
  const double s2 = std::sqrt(2.0), r23 = std::sqrt(2.0 / 3.0);
  return {{1, 0, 0},          {-1.0 / 3, -s2 / 3, r23}, {-1.0 / 3, 2 * s2 / 3, 0}, {-1.0 / 3, -s2 / 3, -r23},
          {-1, 0, 0},         {1.0 / 3, s2 / 3, -r23},  {1.0 / 3, -2 * s2 / 3, 0}, {1.0 / 3, s2 / 3, r23}};
}

inline std::vector<Vec3> cuboctahedron() {
  const double r23 = std::sqrt(2.0 / 3.0), i3 = 1 / std::sqrt(3.0), h3 = std::sqrt(3.0) / 2, q = 1 / (2 * std::sqrt(3.0));
  return {{-r23, i3, 0},    {0, h3, 0.5},  {0, 0, 1},      {-r23, -q, 0.5}, {r23, -i3, 0},     {0, -h3, -0.5},
          {0, 0, -1},       {r23, q, -0.5}, {0, -h3, 0.5}, {0, h3, -0.5},  {r23, q, 0.5},     {-r23, -q, -0.5}};
}

inline std::vector<Vec3> truncated_octahedron() {
  const double a = std::sqrt(3.0 / 5), b = std::sqrt(3.0 / 10), c = 1 / std::sqrt(10.0), d = std::sqrt(2.0 / 5),
               e = 1 / std::sqrt(15.0), f = 2 * std::sqrt(2.0 / 15), g = std::sqrt(5.0 / 6), h = 1 / std::sqrt(30.0),
               k = 3 / std::sqrt(10.0);
  return {{a, 0, d},   {a, b, c},   {a, 0, -d},  {a, b, -c},  {a, -b, c},  {a, -b, -c},  {-a, 0, d},  {-a, b, c},
          {-a, 0, -d}, {-a, b, -c}, {-a, -b, c}, {-a, -b, -c}, {-e, f, -d}, {e, g, -c},  {-e, f, d},  {e, g, c},
          {e, -f, d},  {-e, -g, c}, {e, -f, -d}, {-e, -g, -c}, {-e, h, k},  {e, -h, k},  {e, -h, -k}, {-e, h, -k}};
}

/// Alice's maximizing classical vector for tetrahedron - octahedron.
inline Vec3 worked_alice_vector() { return {2.0 / 3, -4 * std::sqrt(2.0) / 3, 0}; }
/// Bob's maximizing classical vector for tetrahedron - octahedron.
inline Vec3 worked_bob_vector() { return {2 / std::sqrt(3.0), -4 * std::sqrt(2.0 / 3), 0}; }

}  // namespace fixtures
