#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fixtures/golden_solids.hpp"
#include "orbit_bell/bell_bounds.hpp"
#include "orbit_bell/classical_orbits.hpp"

using namespace orbit_bell;

namespace {

ClassicalOrbitDecomposition classify(Solid s) { return classify_classical_vectors(canonical_solid(s), generating_rep(s)); }

double max_length(const ClassicalOrbitDecomposition& d) {
  double m = 0.0;
  for (const auto& level : d.by_plus_count)
    for (const auto& o : level) m = std::max(m, o.length);
  return m;
}

}  // namespace

TEST(Classify, TetrahedronLevels) {
  const auto d = classify(Solid::Tetrahedron);
  ASSERT_EQ(d.by_plus_count.size(), 5u);
  const std::vector<std::size_t> sizes{1, 4, 6, 4, 1};
  const std::vector<double> lengths{0.0, 2.0, 4.0 / std::sqrt(3.0), 2.0, 0.0};
  for (std::size_t k = 0; k <= 4; ++k) {
    ASSERT_EQ(d.by_plus_count[k].size(), 1u) << k;
    const auto& o = d.by_plus_count[k][0];
    EXPECT_EQ(o.orbit_size, sizes[k]) << k;
    EXPECT_EQ(o.assignment_count, sizes[k]) << k;
    EXPECT_NEAR(o.length, lengths[k], 1e-12) << k;
    EXPECT_EQ(o.representative_signs.plus_count(), k);
  }
  EXPECT_EQ(d.total_assignments(), 16u);
}

TEST(Classify, OctahedronContainsZeroAndWorkedVector) {
  const auto d = classify(Solid::Octahedron);
  EXPECT_EQ(d.total_assignments(), 64u);
  EXPECT_EQ(d.n, 6u);
  // zero needs both members of every antipodal pair to share a sign
  for (std::size_t k : {0, 2, 4, 6}) EXPECT_TRUE(d.find(k, {0, 0, 0}).has_value()) << k;
  EXPECT_FALSE(d.find(3, {0, 0, 0}).has_value());
  const auto w = d.find(3, fixtures::worked_bob_vector());
  ASSERT_TRUE(w.has_value());
  EXPECT_NEAR(d.by_plus_count[3][*w].length, 2 * std::sqrt(3.0), 1e-12);
  // -W has the complementary plus count, which is again 3
  EXPECT_TRUE(d.find(3, -fixtures::worked_bob_vector()).has_value());
}

TEST(Classify, OrbitSizesDivideGroupOrder) {
  for (Solid s : {Solid::Tetrahedron, Solid::Octahedron, Solid::Cube, Solid::Cuboctahedron}) {
    const auto d = classify(s);
    const std::size_t order = generating_rep(s).order();
    std::uint64_t total = 0;
    for (const auto& level : d.by_plus_count)
      for (const auto& o : level) {
        EXPECT_EQ(order % o.orbit_size, 0u) << to_string(s);
        EXPECT_EQ(o.members.size(), o.orbit_size);
        EXPECT_EQ(o.assignment_count % o.orbit_size, 0u) << to_string(s);
        for (const auto& m : o.members) EXPECT_NEAR(norm(m), o.length, 1e-9);
        total += o.assignment_count;
      }
    EXPECT_EQ(total, std::uint64_t{1} << d.n);
  }
}

TEST(Classify, OrbitsAreClosedAndDisjoint) {
  const auto d = classify(Solid::Cuboctahedron);
  const auto& rep = s4_irrep();
  for (std::size_t k = 0; k < d.by_plus_count.size(); ++k)
    for (std::size_t i = 0; i < d.by_plus_count[k].size(); ++i) {
      const auto& o = d.by_plus_count[k][i];
      for (const auto& g : rep.elements()) EXPECT_EQ(d.find(k, g * o.representative), i);
    }
}

TEST(Classify, RepresentativeSignsReproduceVector) {
  const Orbit o = canonical_solid(Solid::Cube);
  const auto d = classify(Solid::Cube);
  for (const auto& level : d.by_plus_count)
    for (const auto& c : level) EXPECT_TRUE(approx_equal(signed_sum(o.vertices, c.representative_signs), c.representative));
}

TEST(Classify, SingleVector) {
  const std::vector<Matrix3> none;
  const auto trivial = close_under_multiplication(none, 1, "trivial");
  const Orbit y{"y", "trivial", {0, 1, 0}, {{0, 1, 0}}, 1};
  const auto d = classify_classical_vectors(y, trivial);
  ASSERT_EQ(d.by_plus_count.size(), 2u);
  EXPECT_TRUE(approx_equal(d.by_plus_count[0][0].representative, {0, -1, 0}));
  EXPECT_TRUE(approx_equal(d.by_plus_count[1][0].representative, {0, 1, 0}));
  EXPECT_EQ(d.total_assignments(), 2u);
}

TEST(Classify, LongestVectorGivesSelfPairBound) {
  // For these self pairs the bound is attained with V = W, so C = max |S|².
  EXPECT_NEAR(std::pow(max_length(classify(Solid::Tetrahedron)), 2), 16.0 / 3, 1e-9);
  EXPECT_NEAR(std::pow(max_length(classify(Solid::Cube)), 2), 64.0 / 3, 1e-9);
  EXPECT_NEAR(classical_bound(gram(canonical_solid(Solid::Cube), canonical_solid(Solid::Cube))).classical_bound,
              64.0 / 3, 1e-9);
}

TEST(Classify, RejectsNonClosedOrbit) {
  Orbit half = canonical_solid(Solid::Octahedron);
  half.vertices.resize(3);
  try {
    classify_classical_vectors(half, s4_irrep());
    FAIL() << "expected OrbitNotClosed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrbitNotClosed);
  }
}

TEST(Classify, BudgetExceeded) {
  Orbit big = canonical_solid(Solid::TruncatedOctahedron);
  big.vertices.push_back({0, 0, 1});
  try {
    classify_classical_vectors(big, oh_rep());
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}
