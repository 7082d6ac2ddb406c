#pragma once

// Degrees through stable intersection: Sigma_M meets the translated skeleton
// fans a + Sigma_{E,r-k} and b - Sigma_{E,k} transversally in finitely many
// points, each counted with its lattice index.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"
#include "chowmu/fan.hpp"
#include "chowmu/matroid.hpp"

namespace chowmu {

/// a strictly decreasing and b strictly increasing, with random rational gaps.
inline std::pair<QuotientCoords, QuotientCoords> displacement_vectors(int n_elements, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 1000000);
  std::uniform_int_distribution<long> den(1, 997);
  RatVector a(static_cast<std::size_t>(n_elements), 0), b(static_cast<std::size_t>(n_elements), 0);
  for (int i = 1; i < n_elements; ++i) {
    a[i] = a[i - 1] - make_rational(num(rng), den(rng));
    b[i] = b[i - 1] + make_rational(num(rng), den(rng));
  }
  return {QuotientCoords::project(a), QuotientCoords::project(b)};
}

struct IntersectionPoint {
  QuotientCoords point;
  FlagCone flag;
  ElementSet i_set = 0;
  ElementSet j_set = 0;
  /// [Z^n : L1 + L2] * [Z^n : (L1 cap L2) + L3], the iterated pairwise multiplicity.
  Integer index = 0;
  /// [Z^n : L1 + L2 + L3].
  Integer sum_index = 0;
};

namespace detail {

// Equations x_p = x_q within each block of the flag, in quotient coordinates.
inline IntMatrix block_equations(const FlagCone& cone, int n_elements) {
  IntMatrix rows;
  for (ElementSet block : cone.blocks(n_elements)) {
    auto eqs = SkeletonCone{block, false}.span_equations(n_elements);
    rows.insert(rows.end(), eqs.begin(), eqs.end());
  }
  return rows;
}

// Row enforcing x_p - x_q = rhs over unknowns x in R^E.
inline void add_difference(RatMatrix& a, RatVector& rhs, int n_elements, int p, int q, const Rational& value) {
  RatVector row(static_cast<std::size_t>(n_elements), 0);
  row[p] += 1;
  row[q] -= 1;
  a.push_back(std::move(row));
  rhs.push_back(value);
}

inline void add_chain(RatMatrix& a, RatVector& rhs, int n_elements, ElementSet s, const RatVector* offset) {
  const auto elems = elements_of(s);
  for (std::size_t i = 1; i < elems.size(); ++i) {
    const int p = elems[i - 1], q = elems[i];
    add_difference(a, rhs, n_elements, p, q, offset ? (*offset)[p] - (*offset)[q] : Rational(0));
  }
}

enum class Strict { kHolds, kBoundary, kFails };

inline Strict combine(Strict acc, int c, int want) {
  if (c == want) return acc;
  if (c == 0) return acc == Strict::kFails ? acc : Strict::kBoundary;
  return Strict::kFails;
}

}  // namespace detail

/// Intersection of sigma_F, a + Sigma_{E,I} and b - Sigma_{E,J} in their relative interiors.
/// Returns nothing when empty; throws DegenerateSystem when the intersection is not a
/// transversal point (non-generic a, b).
inline std::optional<IntersectionPoint> intersect_triple(int n_elements, const FlagCone& flag, ElementSet i_set,
                                                         ElementSet j_set, const QuotientCoords& a_q,
                                                         const QuotientCoords& b_q) {
  const RatVector a = a_q.lift();
  const RatVector b = b_q.lift();
  RatMatrix eqs;
  RatVector rhs;
  RatVector pin(static_cast<std::size_t>(n_elements), 0);
  pin[0] = 1;
  eqs.push_back(pin);
  rhs.push_back(0);
  for (ElementSet block : flag.blocks(n_elements)) detail::add_chain(eqs, rhs, n_elements, block, nullptr);
  detail::add_chain(eqs, rhs, n_elements, i_set, &a);
  detail::add_chain(eqs, rhs, n_elements, j_set, &b);

  const auto sol = solve_linear(eqs, rhs, static_cast<std::size_t>(n_elements));
  if (sol.kind == LinearSolution::Kind::kInconsistent) return std::nullopt;
  if (sol.kind == LinearSolution::Kind::kUnderdetermined) {
    throw DegenerateSystem("intersection is not a point for flag " + flag.to_string() + ", I=" +
                           set_label(i_set) + ", J=" + set_label(j_set));
  }
  const RatVector& x = sol.x;

  // Relative interiors: blocks strictly decreasing; x - a minimal exactly on I; x - b maximal exactly on J.
  detail::Strict state = detail::Strict::kHolds;
  const auto blocks = flag.blocks(n_elements);
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    state = detail::combine(state, compare(x[min_element(blocks[j])], x[min_element(blocks[j + 1])]), 1);
  }
  const int ii = min_element(i_set), jj = min_element(j_set);
  for (int t = 0; t < n_elements; ++t) {
    if (!contains(i_set, t)) state = detail::combine(state, compare(x[t] - a[t], x[ii] - a[ii]), 1);
    if (!contains(j_set, t)) state = detail::combine(state, compare(x[t] - b[t], x[jj] - b[jj]), -1);
  }
  if (state == detail::Strict::kFails) return std::nullopt;
  if (state == detail::Strict::kBoundary) {
    throw DegenerateSystem("intersection point on a cone boundary for flag " + flag.to_string());
  }

  const std::size_t n = static_cast<std::size_t>(n_elements - 1);
  IntMatrix l1;
  for (ElementSet s : flag.sets) l1.push_back(ray_vector(s, n_elements));
  const IntMatrix eq_i = SkeletonCone{i_set, false}.span_equations(n_elements);
  const IntMatrix eq_j = SkeletonCone{j_set, true}.span_equations(n_elements);
  const IntMatrix l2 = integer_kernel(eq_i, n);
  const IntMatrix l3 = integer_kernel(eq_j, n);

  IntMatrix l12 = l1;
  l12.insert(l12.end(), l2.begin(), l2.end());
  IntMatrix eq_12 = detail::block_equations(flag, n_elements);
  eq_12.insert(eq_12.end(), eq_i.begin(), eq_i.end());
  IntMatrix meet_then_3 = integer_kernel(eq_12, n);
  meet_then_3.insert(meet_then_3.end(), l3.begin(), l3.end());
  IntMatrix all = l12;
  all.insert(all.end(), l3.begin(), l3.end());

  IntersectionPoint pt;
  pt.point = QuotientCoords::project(x);
  pt.flag = flag;
  pt.i_set = i_set;
  pt.j_set = j_set;
  pt.index = lattice_index(l12, n) * lattice_index(meet_then_3, n);
  pt.sum_index = lattice_index(all, n);
  return pt;
}

struct StableIntersection {
  Integer degree = 0;
  std::uint64_t seed_used = 0;
  std::vector<IntersectionPoint> points;
};

/// All transversal intersection points of Sigma_M, a + Sigma_{E,r-k} and b - Sigma_{E,k}.
/// Resamples (a, b) with the next seed whenever an intersection is degenerate.
inline StableIntersection stable_intersection(const Matroid& m, int k, std::uint64_t seed = 1,
                                              int attempts = 32) {
  m.require_loopless("deg_stable");
  const int r = m.rank() - 1;
  if (k < 0 || k > r) throw KOutOfRange("k must lie in [0, " + std::to_string(r) + "]");
  const int n_elements = m.size();
  const auto facets = maximal_chains(FlatLattice(m));
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    const auto [a, b] = displacement_vectors(n_elements, s);
    StableIntersection result;
    result.seed_used = s;
    try {
      for (const auto& chain : facets) {
        const FlagCone flag{chain};
        for_each_k_subset(n_elements, r - k + 1, [&](ElementSet i_set) {
          for_each_k_subset(n_elements, k + 1, [&](ElementSet j_set) {
            if (auto pt = intersect_triple(n_elements, flag, i_set, j_set, a, b)) {
              result.degree += pt->index;
              result.points.push_back(std::move(*pt));
            }
          });
        });
      }
      return result;
    } catch (const DegenerateSystem&) {
    }
  }
  throw DegenerateSystem("no generic displacement found after " + std::to_string(attempts) + " attempts");
}

inline Integer deg_stable(const Matroid& m, int k, std::uint64_t seed = 1) {
  return stable_intersection(m, k, seed).degree;
}

}  // namespace chowmu
