#include <gtest/gtest.h>

#include <random>

#include "chowmu/poly.hpp"

using namespace chowmu;

TEST(MultiPoly, Eval) {
  const MultiPoly d01 = MultiPoly::difference(3, 0, 1);
  const RatVector p = {3, 1, 0};
  EXPECT_EQ(d01.eval(p), 2);
  const RatVector q = {1, 0, 0};
  EXPECT_EQ((d01 * MultiPoly::difference(3, 1, 2)).eval(q), 0);
  EXPECT_EQ(MultiPoly::constant(3, 5).eval(p), 5);
}

TEST(MultiPoly, Degree) {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  EXPECT_EQ(pow(x - y, 3).total_degree(), 3u);
  EXPECT_TRUE((x * y - y * x).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
}

TEST(MultiPoly, RingAxiomsOnRandomInstances) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3), var(0, 2), deg(0, 2);
  auto random_poly = [&] {
    MultiPoly p(3);
    for (int t = 0; t < 4; ++t) {
      MultiPoly::Exponent e(3, 0);
      e[static_cast<std::size_t>(var(rng))] = static_cast<unsigned>(deg(rng));
      p.add_term(e, coef(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly p = random_poly(), q = random_poly(), r = random_poly();
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    const RatVector pt = {make_rational(coef(rng), 7), make_rational(coef(rng) + 5, 3), Rational(coef(rng))};
    EXPECT_EQ(((p + q) * r).eval(pt), p.eval(pt) * r.eval(pt) + q.eval(pt) * r.eval(pt));
  }
}
