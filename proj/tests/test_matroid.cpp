#include <gtest/gtest.h>

#include <map>
#include <set>

#include "chowmu/matroid.hpp"
#include "suite.hpp"

using namespace chowmu;
using chowmu::testing::suite;
using chowmu::testing::suite_mu;

namespace {

// Proper q-colourings of a graph by brute force, for q small.
long count_colourings(int vertices, const std::vector<std::pair<long, long>>& edges, int q) {
  long count = 0;
  std::vector<int> colour(static_cast<std::size_t>(vertices), 0);
  while (true) {
    bool proper = true;
    for (auto [u, v] : edges) proper = proper && colour[static_cast<std::size_t>(u)] != colour[static_cast<std::size_t>(v)];
    count += proper;
    std::size_t i = 0;
    while (i < colour.size() && ++colour[i] == q) colour[i++] = 0;
    if (i == colour.size()) return count;
  }
}

std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out;
  for (auto& [name, m] : suite()) out.push_back(m);
  out.push_back(Matroid::triangle_with_pendant());
  out.push_back(Matroid::uniform(1, 3));
  out.push_back(Matroid::uniform(3, 5));
  out.push_back(Matroid::from_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}));
  return out;
}

}  // namespace

TEST(Matroid, Construction) {
  EXPECT_EQ(Matroid::uniform(2, 3).bases(), (std::vector<ElementSet>{0b011, 0b101, 0b110}));
  EXPECT_THROW(Matroid::from_bases(4, std::vector<std::vector<int>>{{0, 1}, {2, 3}}), ExchangeViolation);
  EXPECT_THROW(Matroid::from_bases(3, std::vector<ElementSet>{}), EmptyBases);
  EXPECT_EQ(Matroid::k4().rank(), 3);
  EXPECT_EQ(Matroid::fano().bases().size(), 28u);
}

TEST(Matroid, Rank) {
  const Matroid u = Matroid::uniform(2, 3);
  EXPECT_EQ(u.rank(0b111), 2);
  EXPECT_EQ(u.rank(0), 0);
  const Matroid fano = Matroid::fano();
  // Lines of the Fano plane are exactly its rank-2 flats of size 3.
  int lines = 0;
  for_each_k_subset(7, 3, [&](ElementSet s) {
    if (fano.rank(s) == 2) {
      ++lines;
      EXPECT_EQ(fano.closure(s), s);
    }
  });
  EXPECT_EQ(lines, 7);
}

TEST(Matroid, RankAxiomsExhaustive) {
  for (const Matroid& m : small_matroids()) {
    const ElementSet limit = ElementSet{1} << m.size();
    for (ElementSet a = 0; a < limit; ++a) {
      ASSERT_GE(m.rank(a), 0);
      ASSERT_LE(m.rank(a), set_size(a));
      for (int e = 0; e < m.size(); ++e) {
        const int grow = m.rank(a | singleton(e)) - m.rank(a);
        ASSERT_TRUE(grow == 0 || grow == 1);
      }
      for (ElementSet b = 0; b < limit; b += 3) ASSERT_LE(m.rank(a | b) + m.rank(a & b), m.rank(a) + m.rank(b));
    }
  }
}

TEST(Matroid, FromGraphMatchesColourings) {
  const std::vector<std::pair<long, long>> edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  const Matroid m = Matroid::from_graph(edges);
  const CharPoly chi = char_poly(m);
  // chi_G(q) = q^{components} chi_M(q) for a connected graph.
  for (int q = 1; q <= 5; ++q) EXPECT_EQ(chi.eval(q) * q, count_colourings(4, edges, q)) << "q=" << q;
  EXPECT_EQ(chi.to_string(), "q^3 - 4q^2 + 5q - 2");
  EXPECT_EQ(reduced_char_poly(m).to_string(), "q^2 - 3q + 2");
}

TEST(FlatLattice, Counts) {
  EXPECT_EQ(FlatLattice(Matroid::k4()).size(), 15u);
  EXPECT_EQ(FlatLattice(Matroid::fano()).size(), 16u);
  EXPECT_EQ(FlatLattice(Matroid::boolean(3)).size(), 8u);
  const FlatLattice fig1(Matroid::triangle_with_pendant());
  EXPECT_EQ(fig1.size(), 10u);
  EXPECT_EQ(fig1.of_rank(2).size(), 4u);
}

TEST(FlatLattice, Mobius) {
  EXPECT_EQ(FlatLattice(Matroid::boolean(3)).top().mobius, -1);
  EXPECT_EQ(FlatLattice(Matroid::uniform(2, 3)).top().mobius, 2);
  for (auto& [name, m] : suite()) EXPECT_EQ(FlatLattice(m).bottom().mobius, 1) << name;
  const FlatLattice k4(Matroid::k4());
  std::multiset<long> rank2;
  for (std::size_t i : k4.of_rank(2)) rank2.insert(k4.flats()[i].mobius.get_si());
  EXPECT_EQ(rank2, (std::multiset<long>{1, 1, 1, 2, 2, 2, 2}));
}

TEST(CharPoly, WhitneyEqualsMobius) {
  for (const Matroid& m : small_matroids()) EXPECT_EQ(char_poly_whitney(m), char_poly_mobius(FlatLattice(m)));
}

TEST(CharPoly, VanishesAtOne) {
  for (const Matroid& m : small_matroids()) EXPECT_EQ(char_poly(m).eval(1), 0);
}

TEST(CharPoly, SuiteMuVectors) {
  const auto s = suite();
  const auto expected = suite_mu();
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<Integer> want(expected[i].begin(), expected[i].end());
    EXPECT_EQ(mu_vector(s[i].m), want) << s[i].name;
  }
  EXPECT_EQ(reduced_char_poly(Matroid::boolean(3)).to_string(), "q^2 - 2q + 1");
  EXPECT_EQ(reduced_char_poly(Matroid::k4()).to_string(), "q^2 - 5q + 6");
}

TEST(CharPoly, Loops) {
  const Matroid looped = Matroid::from_graph({{0, 1}, {1, 1}});
  EXPECT_TRUE(char_poly(looped).is_zero());
  EXPECT_THROW(reduced_char_poly(looped), LoopPresent);
  EXPECT_THROW(mu(looped, 0), LoopPresent);
}

TEST(Minors, Examples) {
  const Matroid u = Matroid::uniform(2, 3);
  EXPECT_EQ(delete_element(u, 2), Matroid::boolean(2));
  EXPECT_EQ(contract_element(u, 2), Matroid::uniform(1, 2));
  for (const Matroid& m : small_matroids()) {
    EXPECT_EQ(dual(dual(m)), m);
    if (m.rank() > 0) {
      EXPECT_EQ(truncate(m).rank(), m.rank() - 1);
    }
  }
}

TEST(Minors, DeletionContraction) {
  for (const Matroid& m : small_matroids()) {
    const int r = m.rank() - 1;
    const auto mu_m = mu_vector(m);
    for (int e = 0; e < m.size(); ++e) {
      if (contains(m.coloops() | m.loops(), e)) continue;
      const auto del = mu_vector(delete_element(m, e));
      const Matroid contracted = contract_element(m, e);
        // A contraction with loops has chi = 0.
        const auto con = contracted.is_loopless() ? mu_vector(contracted) : std::vector<Integer>(m.size(), 0);
      for (int k = 0; k <= r; ++k) {
        const Integer prev = k == 0 ? Integer(0) : con[static_cast<std::size_t>(k - 1)];
        EXPECT_EQ(mu_m[static_cast<std::size_t>(k)], prev + del[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST(Minors, TruncationIdentity) {
  for (const Matroid& m : small_matroids()) {
    const int r = m.rank() - 1;
    for (int k = 0; k <= r; ++k) {
      Matroid t = m;
      for (int i = 0; i < r - k; ++i) t = truncate(t);
      const Integer top = FlatLattice(t).top().mobius;
      EXPECT_EQ(mu(m, k), k % 2 == 1 ? top : Integer(-top));
    }
  }
}

TEST(FlatLattice, Weisner) {
  for (const Matroid& m : small_matroids()) {
    const FlatLattice lattice(m);
    const ElementSet top = lattice.top().set;
    for (std::size_t a : lattice.of_rank(1)) {
      Integer sum = 0;
      for (const auto& x : lattice.flats())
        if (lattice.join(x.set, lattice.flats()[a].set) == top) sum += x.mobius;
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(Chains, DescentSets) {
  EXPECT_EQ(descent_set({1, 0, 2}), (std::set<int>{1}));
  EXPECT_EQ(chains_with_descent_set(Matroid::boolean(3), {1}), 2);
  EXPECT_EQ(chains_with_descent_set(Matroid::triangle_with_pendant(), {1}), 3);
  for (const Matroid& m : small_matroids()) {
    EXPECT_EQ(chains_with_descent_set(m, {}), 1);
    for (int k = 0; k < m.rank(); ++k) EXPECT_EQ(chains_with_descent_set(m, initial_segment(k)), mu(m, k));
  }
}
