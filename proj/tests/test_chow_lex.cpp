#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "chowmu/chow_lex.hpp"
#include "suite.hpp"

using namespace chowmu;
using chowmu::testing::suite;

namespace {

std::set<std::vector<ElementSet>> flags_of(const std::vector<FlagMonomial>& monos) {
  std::set<std::vector<ElementSet>> out;
  for (const auto& m : monos) out.insert(m.flats);
  return out;
}

using Flags = std::set<std::vector<ElementSet>>;

}  // namespace

TEST(LexExpansion, BooleanExamples) {
  const FlatLattice b3(Matroid::boolean(3));
  EXPECT_EQ(flags_of(lex_expand_alpha(b3, {})), (Flags{{0b001}, {0b011}, {0b101}}));
  EXPECT_EQ(flags_of(lex_expand_beta(b3, {})), (Flags{{0b010}, {0b100}, {0b110}}));
  EXPECT_EQ(flags_of(lex_expand_alpha(b3, {{0b010}})), (Flags{{0b010, 0b011}}));
  EXPECT_EQ(flags_of(lex_expand_beta(b3, {{0b110}})), (Flags{{0b100, 0b110}}));
}

TEST(LexExpansion, VanishingAndBoundary) {
  const FlatLattice u34(Matroid::uniform(3, 4));
  EXPECT_TRUE(lex_expand_beta(u34, {{0b0010}}).empty());
  const FlatLattice u(Matroid::uniform(2, 3));
  EXPECT_THROW(lex_expand_alpha(u, {{0b001}}), PreconditionViolation);
  const FlatLattice k4(Matroid::k4());
  EXPECT_THROW(lex_expand_beta(k4, {{0b000001, 0b000111}}), PreconditionViolation);
}

TEST(LexExpansion, Degrees) {
  EXPECT_EQ(deg_lex(Matroid::boolean(3), 1), 2);
  EXPECT_EQ(deg_lex(Matroid::k4(), 2), 6);
  for (auto& [name, m] : suite()) {
    EXPECT_EQ(deg_lex(m, 0), 1) << name;
    for (int k = 0; k < m.rank(); ++k) EXPECT_EQ(deg_lex(m, k), mu(m, k)) << name << " k=" << k;
  }
  EXPECT_THROW(deg_lex(Matroid::k4(), 3), KOutOfRange);
}

TEST(LexExpansion, FlagsAreDescentChains) {
  for (auto& [name, m] : suite()) {
    const FlatLattice lattice(m);
    const int r = m.rank() - 1;
    for (int k = 0; k <= r; ++k) {
      const auto terms = lex_expansion(lattice, r - k, k);
      const Flags got = flags_of(terms);
      EXPECT_EQ(got.size(), terms.size()) << "repeated monomial";
      const auto chains = chains_with_descent_set_list(lattice, initial_segment(k));
      EXPECT_EQ(got, Flags(chains.begin(), chains.end())) << name << " k=" << k;
    }
  }
}

TEST(LexExpansion, IntermediateMonomialsAreFlags) {
  for (auto& [name, m] : suite()) {
    const FlatLattice lattice(m);
    const int r = m.rank() - 1;
    for (int k = 0; k <= r; ++k) {
      std::vector<FlagMonomial> current = {FlagMonomial{}};
      for (int i = 0; i < r; ++i) {
        std::vector<FlagMonomial> next;
        for (const auto& mono : current) {
          const bool beta = i < k;
          for (auto& t : beta ? lex_expand_beta(lattice, mono) : lex_expand_alpha(lattice, mono)) {
            ASSERT_EQ(t.degree(), mono.degree() + 1);
            for (std::size_t j = 0; j < t.flats.size(); ++j) {
              ASSERT_TRUE(lattice.is_flat(t.flats[j]));
              if (j > 0) {
                ASSERT_TRUE(t.flats[j - 1] != t.flats[j] && is_subset(t.flats[j - 1], t.flats[j]));
              }
            }
            // beta prepends a new minimal flat, alpha appends a new maximal one.
            if (beta) {
              ASSERT_TRUE(std::equal(mono.flats.begin(), mono.flats.end(), t.flats.begin() + 1));
            } else {
              ASSERT_TRUE(std::equal(mono.flats.begin(), mono.flats.end(), t.flats.begin()));
            }
            next.push_back(std::move(t));
          }
        }
        current = std::move(next);
      }
    }
  }
}
