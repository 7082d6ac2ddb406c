#pragma once

// Piecewise polynomials on the braid fan and the chamber-sum degree formula
//   deg f = sum over permutations s of f_s(t) / t_s,
//   t_s = (t_{s(0)} - t_{s(1)}) ... (t_{s(n-1)} - t_{s(n)}).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"
#include "chowmu/matroid.hpp"
#include "chowmu/poly.hpp"

namespace chowmu {

/// One-line notation s(0) s(1) ... s(n); the chamber t_{s(0)} >= ... >= t_{s(n)}.
using Permutation = std::vector<int>;

inline std::vector<Permutation> all_permutations(int n_elements) {
  Permutation p(static_cast<std::size_t>(n_elements));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::string permutation_label(const Permutation& p) {
  std::string s;
  for (int e : p) s += std::to_string(e);
  return s;
}

/// A polynomial on every chamber of the braid fan, zero polynomials included.
struct FacetPolynomial {
  int n_elements = 0;
  std::map<Permutation, MultiPoly> chambers;

  const MultiPoly& at(const Permutation& p) const { return chambers.at(p); }

  static FacetPolynomial constant(int n_elements, const Rational& c) {
    FacetPolynomial f{n_elements, {}};
    for (auto& p : all_permutations(n_elements)) f.chambers.emplace(p, MultiPoly::constant(n_elements, c));
    return f;
  }
};

/// Lexicographically smallest basis for the order given by the permutation.
inline ElementSet greedy_basis(const Matroid& m, const Permutation& order) {
  ElementSet basis = 0;
  int rank = 0;
  for (int e : order) {
    if (rank == m.rank()) break;
    const ElementSet trial = basis | singleton(e);
    if (m.rank(trial) > rank) {
      basis = trial;
      ++rank;
    }
  }
  return basis;
}

/// alpha on chamber s: t_f - t_{s(n)}.
inline FacetPolynomial rep_alpha(int n_elements, int f = 0) {
  FacetPolynomial out{n_elements, {}};
  for (auto& p : all_permutations(n_elements))
    out.chambers.emplace(p, MultiPoly::difference(n_elements, f, p.back()));
  return out;
}

/// beta on chamber s: t_{s(0)} - t_f.
inline FacetPolynomial rep_beta(int n_elements, int f = 0) {
  FacetPolynomial out{n_elements, {}};
  for (auto& p : all_permutations(n_elements))
    out.chambers.emplace(p, MultiPoly::difference(n_elements, p.front(), f));
  return out;
}

/// Sigma_M on chamber s: product over i outside the greedy basis B_s of (t_f - t_i).
inline FacetPolynomial rep_bergman(const Matroid& m, int f = 0) {
  const int n_elements = m.size();
  FacetPolynomial out{n_elements, {}};
  for (auto& p : all_permutations(n_elements)) {
    const ElementSet basis = greedy_basis(m, p);
    MultiPoly poly = MultiPoly::constant(n_elements, 1);
    for (int i : elements_of(m.ground() & ~basis)) poly = poly * MultiPoly::difference(n_elements, f, i);
    out.chambers.emplace(p, std::move(poly));
  }
  return out;
}

inline FacetPolynomial pp_product(const FacetPolynomial& a, const FacetPolynomial& b) {
  if (a.n_elements != b.n_elements) throw PreconditionViolation("piecewise polynomials on different fans");
  FacetPolynomial out{a.n_elements, {}};
  for (const auto& [p, poly] : a.chambers) out.chambers.emplace(p, poly * b.at(p));
  return out;
}

inline FacetPolynomial pp_sum(const FacetPolynomial& a, const FacetPolynomial& b, const Rational& scale_b = 1) {
  if (a.n_elements != b.n_elements) throw PreconditionViolation("piecewise polynomials on different fans");
  FacetPolynomial out{a.n_elements, {}};
  for (const auto& [p, poly] : a.chambers)
    out.chambers.emplace(p, poly + MultiPoly::constant(a.n_elements, scale_b) * b.at(p));
  return out;
}

inline FacetPolynomial pp_power(const FacetPolynomial& a, unsigned k) {
  FacetPolynomial out = FacetPolynomial::constant(a.n_elements, 1);
  for (unsigned i = 0; i < k; ++i) out = pp_product(out, a);
  return out;
}

/// t_s evaluated at a point.
inline Rational chamber_denominator(const Permutation& p, const RatVector& t) {
  Rational d = 1;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) d *= t[p[i]] - t[p[i + 1]];
  return d;
}

/// sum_s f_s(t) / t_s at one point. Throws DegeneratePoint if some t_s vanishes.
inline Rational brion_sum(const FacetPolynomial& f, const RatVector& t) {
  Rational total = 0;
  for (const auto& [p, poly] : f.chambers) {
    if (poly.is_zero()) continue;
    const Rational d = chamber_denominator(p, t);
    if (sgn(d) == 0) throw DegeneratePoint("sample point lies on a wall of chamber " + permutation_label(p));
    total += poly.eval(t) / d;
  }
  return total;
}

/// Deterministic sample point with rational coordinates drawn from the seed.
inline RatVector generic_point(int n_elements, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000);
  RatVector t;
  for (int i = 0; i < n_elements; ++i) t.push_back(make_rational(num(rng), den(rng)));
  return t;
}

inline bool has_distinct_coordinates(RatVector t) {
  std::sort(t.begin(), t.end());
  return std::adjacent_find(t.begin(), t.end()) == t.end();
}

/// Evaluates the chamber sum at two independent generic points and checks they agree.
/// Points with repeated coordinates are redrawn with the next seed.
inline Rational degree_of(const FacetPolynomial& f, std::uint64_t seed, int attempts = 64) {
  std::vector<Rational> values;
  for (int i = 0; i < attempts && values.size() < 2; ++i) {
    const RatVector t = generic_point(f.n_elements, seed + static_cast<std::uint64_t>(i));
    if (!has_distinct_coordinates(t)) continue;
    try {
      values.push_back(brion_sum(f, t));
    } catch (const DegeneratePoint&) {
    }
  }
  if (values.size() < 2) throw DegeneratePoint("no generic sample point found");
  if (values[0] != values[1]) {
    throw CrossCheckFailure("chamber sum is not constant: " + values[0].get_str() + " vs " + values[1].get_str());
  }
  return values[0];
}

/// alpha^{r-k} beta^k Sigma_M as a piecewise polynomial, reference element f.
inline FacetPolynomial mixed_class(const Matroid& m, int k, int f = 0) {
  const int r = m.rank() - 1;
  const int n = m.size();
  return pp_product(pp_product(pp_power(rep_alpha(n, f), static_cast<unsigned>(r - k)),
                               pp_power(rep_beta(n, f), static_cast<unsigned>(k))),
                    rep_bergman(m, f));
}

inline Rational deg_pp(const Matroid& m, int k, std::uint64_t seed = 1) {
  m.require_loopless("deg_pp");
  const int r = m.rank() - 1;
  if (k < 0 || k > r) throw KOutOfRange("k must lie in [0, " + std::to_string(r) + "]");
  return degree_of(mixed_class(m, k), seed);
}

}  // namespace chowmu
