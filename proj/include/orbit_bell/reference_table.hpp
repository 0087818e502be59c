#pragma once

// Reference classical bounds (4 decimals) and quantum values for pairs of
// canonical solids, followed by the two no-violation pairs involving the cube.

#include <array>

#include "orbit_bell/orbits.hpp"

namespace orbit_bell {

struct ReferencePair {
  Solid alice;
  Solid bob;
  double classical;
  double quantum;
};

inline constexpr double kReferenceTolerance = 5e-4;

inline constexpr std::array<ReferencePair, 13> kReferencePairs = {{
    {Solid::Cuboctahedron, Solid::Tetrahedron, 13.0639, 16},
    {Solid::Cuboctahedron, Solid::Octahedron, 16.9706, 24},
    {Solid::Cuboctahedron, Solid::Cube, 26.1279, 32},
    {Solid::Cuboctahedron, Solid::Cuboctahedron, 40, 48},
    {Solid::TruncatedOctahedron, Solid::Tetrahedron, 24.7871, 32},
    {Solid::TruncatedOctahedron, Solid::Octahedron, 42.9325, 48},
    {Solid::TruncatedOctahedron, Solid::Cube, 49.5742, 64},
    {Solid::TruncatedOctahedron, Solid::Cuboctahedron, 75.8947, 96},
    {Solid::TruncatedOctahedron, Solid::TruncatedOctahedron, 160, 192},
    {Solid::Tetrahedron, Solid::Octahedron, 6.9282, 8},
    {Solid::Cube, Solid::Octahedron, 13.8564, 16},
    {Solid::Tetrahedron, Solid::Cube, 32.0 / 3.0, 32.0 / 3.0},
    {Solid::Cube, Solid::Cube, 64.0 / 3.0, 64.0 / 3.0},
}};

}  // namespace orbit_bell
