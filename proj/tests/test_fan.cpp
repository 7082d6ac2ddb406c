#include <gtest/gtest.h>

#include "chowmu/fan.hpp"
#include "chowmu/piecewise.hpp"
#include "suite.hpp"

using namespace chowmu;
using chowmu::testing::suite;

namespace {

FlagCone flag(std::vector<ElementSet> sets) { return FlagCone{std::move(sets)}; }

}  // namespace

TEST(BraidCone, Examples) {
  EXPECT_EQ(braid_cone_of(QuotientCoords::project(indicator(0b001, 3))), flag({0b001}));
  EXPECT_EQ(braid_cone_of(QuotientCoords::project({5, 2, -1})), flag({0b001, 0b011}));
  EXPECT_EQ(braid_cone_of(QuotientCoords::project({4, 4, 4})), flag({}));
}

TEST(BraidCone, RaysRecovered) {
  for (int n = 2; n <= 5; ++n)
    for (ElementSet s = 1; s < full_set(n); ++s)
      EXPECT_EQ(braid_cone_of(QuotientCoords::project(indicator(s, n))), flag({s}));
}

TEST(BraidCone, FacetsUnimodular) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      IntMatrix rays;
      ElementSet s = 0;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        s |= singleton(p[i]);
        rays.push_back(ray_vector(s, n));
      }
      EXPECT_EQ(lattice_index(rays, static_cast<std::size_t>(n - 1)), 1);
    }
}

TEST(MatroidFan, Examples) {
  const WeightedFan u = matroid_fan(Matroid::uniform(2, 3));
  EXPECT_EQ(u.weights.size(), 3u);
  for (ElementSet s : {0b001u, 0b010u, 0b100u}) EXPECT_EQ(u.weight(flag({s})), 1);
  const WeightedFan b = matroid_fan(Matroid::boolean(3));
  EXPECT_EQ(b.weights.size(), 6u);
  EXPECT_EQ(b, alpha_fan(3, 0));
  EXPECT_EQ(matroid_fan(Matroid::fano()).weights.size(), 21u);
}

TEST(MatroidFan, BalancedOnSuite) {
  for (auto& [name, m] : suite()) EXPECT_TRUE(is_balanced(matroid_fan(m))) << name;
}

TEST(Balancing, CorruptedWeightHasCertificate) {
  WeightedFan w{3, 1, {}};
  w.add(flag({0b001}), 2);
  w.add(flag({0b010}), 1);
  w.add(flag({0b100}), 1);
  const BalanceReport report = is_balanced(w);
  EXPECT_FALSE(report);
  ASSERT_TRUE(report.violation.has_value());
  EXPECT_EQ(*report.violation, flag({}));
}

TEST(SkeletonFans, AlphaCodimOne) {
  const WeightedFan a = alpha_fan(3, 1);
  EXPECT_EQ(a.weights.size(), 3u);
  for (ElementSet s : {0b001u, 0b010u, 0b100u}) EXPECT_EQ(a.weight(flag({s})), 1);
  const WeightedFan b = beta_fan(3, 1);
  for (ElementSet s : {0b011u, 0b101u, 0b110u}) EXPECT_EQ(b.weight(flag({s})), 1);
}

TEST(SkeletonFans, TopCodimIsOrigin) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(alpha_fan(n, n - 1).degree(), 1);
    EXPECT_EQ(beta_fan(n, n - 1).degree(), 1);
  }
}

TEST(SkeletonFans, BalancedAndNegated) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i <= n - 1; ++i) {
      EXPECT_TRUE(is_balanced(alpha_fan(n, i))) << n << " " << i;
      EXPECT_TRUE(is_balanced(beta_fan(n, i))) << n << " " << i;
      EXPECT_EQ(negate(alpha_fan(n, i)), beta_fan(n, i));
    }
}

TEST(SkeletonFans, Support) {
  // Interior points of alpha_fan(E, i) attain their minimum exactly i + 1 times.
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n - 1; ++i) {
      for (const auto& [cone, w] : alpha_fan(n, i).weights) {
        const RatVector v = interior_point(cone, n);
        EXPECT_EQ(extremum_multiplicity(v, false), i + 1);
        EXPECT_TRUE(skeleton_cone(full_set(n) & ~cone.sets.back()).contains(v, true));
      }
      for (const auto& [cone, w] : beta_fan(n, i).weights)
        EXPECT_EQ(extremum_multiplicity(interior_point(cone, n), true), i + 1);
    }
}
