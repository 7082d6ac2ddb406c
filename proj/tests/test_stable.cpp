#include <gtest/gtest.h>

#include <set>

#include "chowmu/stable.hpp"
#include "suite.hpp"

using namespace chowmu;
using chowmu::testing::suite;

TEST(Displacement, Monotone) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const auto [a, b] = displacement_vectors(5, seed);
    const RatVector al = a.lift(), bl = b.lift();
    for (std::size_t i = 1; i < al.size(); ++i) {
      EXPECT_LT(al[i], al[i - 1]);
      EXPECT_GT(bl[i], bl[i - 1]);
    }
  }
}

TEST(StableIntersection, BooleanWitnesses) {
  const auto s = stable_intersection(Matroid::boolean(3), 1, 1);
  EXPECT_EQ(s.degree, 2);
  ASSERT_EQ(s.points.size(), 2u);
  for (const auto& p : s.points) {
    EXPECT_EQ(p.index, 1);
    EXPECT_EQ(p.sum_index, 1);
  }
}

TEST(StableIntersection, UniformWitnesses) {
  const auto s = stable_intersection(Matroid::uniform(2, 3), 1, 1);
  EXPECT_EQ(s.degree, 2);
  EXPECT_EQ(s.points.size(), 2u);
}

TEST(StableIntersection, SharedPairIsEmpty) {
  const auto [a, b] = displacement_vectors(4, 3);
  const Matroid m = Matroid::boolean(4);
  for (const auto& chain : maximal_chains(FlatLattice(m)))
    for_each_k_subset(4, 2, [&](ElementSet i_set) {
      for_each_k_subset(4, 3, [&](ElementSet j_set) {
        if (set_size(i_set & j_set) >= 2) {
          EXPECT_FALSE(intersect_triple(4, FlagCone{chain}, i_set, j_set, a, b));
        }
      });
    });
}

TEST(StableIntersection, NonGenericDisplacementThrows) {
  const QuotientCoords zero{RatVector(2, 0)};
  bool threw = false;
  for (const auto& chain : maximal_chains(FlatLattice(Matroid::boolean(3)))) {
    try {
      intersect_triple(3, FlagCone{chain}, 0b011, 0b011, zero, zero);
    } catch (const DegenerateSystem&) {
      threw = true;
    }
  }
  EXPECT_TRUE(threw);
}

TEST(StableIntersection, SuiteDegreesAndIndices) {
  for (auto& [name, m] : suite()) {
    const int r = m.rank() - 1;
    const FlatLattice lattice(m);
    for (int k = 0; k <= r; ++k) {
      const auto s = stable_intersection(m, k, 1);
      EXPECT_EQ(s.degree, mu(m, k)) << name << " k=" << k;
      std::set<std::vector<ElementSet>> flags;
      for (const auto& p : s.points) {
        EXPECT_EQ(p.index, 1) << name;
        EXPECT_EQ(p.sum_index, 1) << name;
        // I and J meet exactly in the element 0.
        EXPECT_EQ(p.i_set & p.j_set, singleton(0)) << name;
        flags.insert(p.flag.sets);
      }
      EXPECT_EQ(flags.size(), s.points.size()) << name;
      const auto chains = chains_with_descent_set_list(lattice, initial_segment(k));
      EXPECT_EQ(flags, std::set<std::vector<ElementSet>>(chains.begin(), chains.end())) << name << " k=" << k;
    }
  }
}

TEST(StableIntersection, SeedInvariant) {
  for (auto& [name, m] : suite()) {
    const int r = m.rank() - 1;
    for (int k = 0; k <= r; ++k) {
      const Integer d = deg_stable(m, k, 1);
      for (std::uint64_t seed : {7u, 1234u}) EXPECT_EQ(deg_stable(m, k, seed), d) << name;
    }
  }
}
