// Alice measures along the tetrahedron, Bob along the octahedron.
// Prints the Gram matrix, the bound and the two maximizing classical vectors.

#include <cstdio>

#include "orbit_bell/orbit_bell.hpp"

using namespace orbit_bell;

int main() {
  const Orbit alice = canonical_solid(Solid::Tetrahedron);
  const Orbit bob = canonical_solid(Solid::Octahedron);
  const GramMatrix g = gram(alice, bob);

  std::printf("v_i . w_j\n");
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) std::printf(" %8.4f", g(i, j));
    std::printf("\n");
  }

  const BoundResult r = classical_bound(g);
  const Vec3 v = signed_sum(alice.vertices, r.alice_strategy);
  const Vec3 w = signed_sum(bob.vertices, r.bob_strategy);
  std::printf("\nC = %.10f  B = %.10f  B/C = %.6f\n", r.classical_bound, r.quantum_value, r.ratio);
  std::printf("A = %s  V = (%.6f, %.6f, %.6f)\n", r.alice_strategy.to_string().c_str(), v.x, v.y, v.z);
  std::printf("B = %s  W = (%.6f, %.6f, %.6f)\n", r.bob_strategy.to_string().c_str(), w.x, w.y, w.z);
  std::printf("V . W = %.10f\n", dot(v, w));
  return 0;
}
