#pragma once

// Fans in N_E = R^E / R e_E that refine the braid fan.
//
// Points are stored in quotient coordinates: a representative v in R^E maps to
// (v_1 - v_0, ..., v_n - v_0). This identifies Z^E / Z e_E with Z^n.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"
#include "chowmu/matroid.hpp"

namespace chowmu {

/// A point of N_E with the coordinate of element 0 normalized to 0.
struct QuotientCoords {
  RatVector coords;  // indexed by elements 1..n

  std::size_t dim() const { return coords.size(); }

  /// Representative in R^E with x_0 = 0.
  RatVector lift() const {
    RatVector full(coords.size() + 1, 0);
    std::copy(coords.begin(), coords.end(), full.begin() + 1);
    return full;
  }

  static QuotientCoords project(const RatVector& full) {
    QuotientCoords q;
    for (std::size_t i = 1; i < full.size(); ++i) q.coords.push_back(full[i] - full[0]);
    return q;
  }

  friend bool operator==(const QuotientCoords&, const QuotientCoords&) = default;
};

/// Lattice image of e_S in Z^n.
inline IntVector ray_vector(ElementSet s, int n_elements) {
  IntVector v(static_cast<std::size_t>(n_elements - 1));
  const int base = contains(s, 0) ? 1 : 0;
  for (int i = 1; i < n_elements; ++i) v[i - 1] = (contains(s, i) ? 1 : 0) - base;
  return v;
}

inline RatVector indicator(ElementSet s, int n_elements) {
  RatVector v(static_cast<std::size_t>(n_elements), 0);
  for (int e : elements_of(s)) v[e] = 1;
  return v;
}

/// sigma_F = cone(e_{S_1}, ..., e_{S_k}) for a strict chain of nonempty proper subsets.
struct FlagCone {
  std::vector<ElementSet> sets;

  int dim() const { return static_cast<int>(sets.size()); }

  bool is_valid(int n_elements) const {
    const ElementSet ground = full_set(n_elements);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i] == 0 || sets[i] == ground || !is_subset(sets[i], ground)) return false;
      if (i > 0 && (sets[i - 1] == sets[i] || !is_subset(sets[i - 1], sets[i]))) return false;
    }
    return true;
  }

  /// Blocks S_1, S_2 - S_1, ..., E - S_k of the ordered set partition.
  std::vector<ElementSet> blocks(int n_elements) const {
    std::vector<ElementSet> out;
    ElementSet prev = 0;
    for (ElementSet s : sets) {
      out.push_back(s & ~prev);
      prev = s;
    }
    out.push_back(full_set(n_elements) & ~prev);
    return out;
  }

  /// The face spanned by all rays except the i-th.
  FlagCone without(std::size_t i) const {
    FlagCone f = *this;
    f.sets.erase(f.sets.begin() + static_cast<std::ptrdiff_t>(i));
    return f;
  }

  std::string to_string() const {
    if (sets.empty()) return "{origin}";
    std::string s;
    for (ElementSet x : sets) s += (s.empty() ? "" : " < ") + set_label(x);
    return s;
  }

  friend auto operator<=>(const FlagCone&, const FlagCone&) = default;
};

/// Whether a representative in R^E lies in span(sigma_F) + R e_E, i.e. is constant on every block.
inline bool in_linear_span(const FlagCone& cone, const RatVector& v, int n_elements) {
  for (ElementSet block : cone.blocks(n_elements)) {
    const int first = min_element(block);
    for (int e : elements_of(block))
      if (v[e] != v[first]) return false;
  }
  return true;
}

/// Coefficients c with v = sum_j c_j e_{S_j} (mod e_E); v must lie in the linear span.
inline RatVector span_coefficients(const FlagCone& cone, const RatVector& v, int n_elements) {
  if (!in_linear_span(cone, v, n_elements)) {
    throw PreconditionViolation("vector not in the linear span of cone " + cone.to_string());
  }
  const auto blocks = cone.blocks(n_elements);
  RatVector c;
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    c.push_back(v[min_element(blocks[j])] - v[min_element(blocks[j + 1])]);
  }
  return c;
}

/// The smallest braid cone containing the point.
inline FlagCone braid_cone_of(const QuotientCoords& point) {
  const RatVector full = point.lift();
  const int n_elements = static_cast<int>(full.size());
  RatVector values = full;
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  FlagCone cone;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    ElementSet s = 0;
    for (int e = 0; e < n_elements; ++e)
      if (full[e] >= values[i]) s |= singleton(e);
    cone.sets.push_back(s);
  }
  return cone;
}

/// A Minkowski-weight candidate: rational weights on k-dimensional braid cones.
struct WeightedFan {
  int n_elements = 0;
  int dim = 0;
  std::map<FlagCone, Rational> weights;  // zero weights never stored

  void add(const FlagCone& cone, const Rational& w) {
    if (cone.dim() != dim) throw PreconditionViolation("cone dimension differs from fan dimension");
    if (!cone.is_valid(n_elements)) throw PreconditionViolation("not a flag cone: " + cone.to_string());
    Rational& slot = weights[cone];
    slot += w;
    if (sgn(slot) == 0) weights.erase(cone);
  }

  Rational weight(const FlagCone& cone) const {
    auto it = weights.find(cone);
    return it == weights.end() ? Rational(0) : it->second;
  }

  bool empty() const { return weights.empty(); }

  /// Weight at the origin of a 0-dimensional fan.
  Rational degree() const {
    if (dim != 0) throw PreconditionViolation("degree needs a 0-dimensional weight");
    return weight(FlagCone{});
  }

  friend bool operator==(const WeightedFan&, const WeightedFan&) = default;
};

/// Bergman fan with unit weights on flags of proper flats.
inline WeightedFan matroid_fan(const Matroid& m, const FlatLattice& lattice) {
  m.require_loopless("matroid fan");
  WeightedFan fan{m.size(), m.rank() - 1, {}};
  for (auto& chain : maximal_chains(lattice)) fan.add(FlagCone{std::move(chain)}, 1);
  return fan;
}

inline WeightedFan matroid_fan(const Matroid& m) { return matroid_fan(m, FlatLattice(m)); }

/// Codimension-one faces of the fan's cones, each with its adjacent cones and the
/// extra ray separating them.
struct Star {
  struct Arm {
    FlagCone cone;
    ElementSet extra_ray;
    Rational weight;
  };
  std::vector<Arm> arms;
};

inline std::map<FlagCone, Star> codim_one_stars(const WeightedFan& fan) {
  std::map<FlagCone, Star> stars;
  for (const auto& [cone, w] : fan.weights) {
    for (std::size_t i = 0; i < cone.sets.size(); ++i) {
      stars[cone.without(i)].arms.push_back({cone, cone.sets[i], w});
    }
  }
  return stars;
}

struct BalanceReport {
  bool balanced = true;
  std::optional<FlagCone> violation;

  explicit operator bool() const { return balanced; }
};

/// Balancing at every codimension-one face: sum_sigma w(sigma) e_{sigma/tau} in span(tau).
inline BalanceReport is_balanced(const WeightedFan& fan) {
  for (const auto& [tau, star] : codim_one_stars(fan)) {
    RatVector sum(static_cast<std::size_t>(fan.n_elements), 0);
    for (const auto& arm : star.arms)
      for (int e : elements_of(arm.extra_ray)) sum[e] += arm.weight;
    if (!in_linear_span(tau, sum, fan.n_elements)) return {false, tau};
  }
  return {};
}

/// Cone of N_E where the coordinates in `equal` coincide and are minimal
/// (or maximal, for the negated cone).
struct SkeletonCone {
  ElementSet equal = 0;
  bool negated = false;

  int dim(int n_elements) const { return n_elements - set_size(equal); }

  /// Membership of a representative in R^E; `strict` asks for the relative interior.
  bool contains(const RatVector& v, bool strict) const {
    const int first = min_element(equal);
    for (int e : elements_of(equal))
      if (v[e] != v[first]) return false;
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (chowmu::contains(equal, static_cast<int>(t))) continue;
      const int c = compare(v[t], v[first]);
      const int want = negated ? -1 : 1;
      if (strict ? c != want : c == -want) return false;
    }
    return true;
  }

  /// Integer equations, in quotient coordinates, cutting out the linear span.
  IntMatrix span_equations(int n_elements) const {
    IntMatrix rows;
    const auto elems = elements_of(equal);
    for (std::size_t i = 1; i < elems.size(); ++i) {
      IntVector row(static_cast<std::size_t>(n_elements - 1), 0);
      if (elems[0] > 0) row[elems[0] - 1] += 1;
      if (elems[i] > 0) row[elems[i] - 1] -= 1;
      rows.push_back(std::move(row));
    }
    return rows;
  }
};

inline SkeletonCone skeleton_cone(ElementSet equal, bool negated = false) {
  if (equal == 0) throw PreconditionViolation("skeleton cone needs a nonempty set");
  return SkeletonCone{equal, negated};
}

/// Unit weights on braid cones sigma_{i0 < i0 i1 < ... } with |S_j| = j, j = 1..n - codim.
/// Support: points whose minimum coordinate is attained at least codim + 1 times.
inline WeightedFan alpha_fan(int n_elements, int codim) {
  const int n = n_elements - 1;
  if (codim < 0 || codim > n) throw RangeError("alpha fan codimension out of range");
  WeightedFan fan{n_elements, n - codim, {}};
  std::vector<ElementSet> chain;
  auto grow = [&](auto&& self, ElementSet current) -> void {
    if (static_cast<int>(chain.size()) == n - codim) {
      fan.add(FlagCone{chain}, 1);
      return;
    }
    for (int e = 0; e < n_elements; ++e) {
      if (chowmu::contains(current, e)) continue;
      chain.push_back(current | singleton(e));
      self(self, chain.back());
      chain.pop_back();
    }
  };
  grow(grow, 0);
  return fan;
}

/// Negation of alpha_fan: flags with |S_j| running from codim + 1 to n.
inline WeightedFan beta_fan(int n_elements, int codim) {
  const int n = n_elements - 1;
  if (codim < 0 || codim > n) throw RangeError("beta fan codimension out of range");
  WeightedFan fan{n_elements, n - codim, {}};
  if (codim == n) {
    fan.add(FlagCone{}, 1);
    return fan;
  }
  std::vector<ElementSet> chain;
  auto grow = [&](auto&& self) -> void {
    if (set_size(chain.back()) == n) {
      fan.add(FlagCone{chain}, 1);
      return;
    }
    for (int e = 0; e < n_elements; ++e) {
      if (chowmu::contains(chain.back(), e)) continue;
      chain.push_back(chain.back() | singleton(e));
      self(self);
      chain.pop_back();
    }
  };
  for_each_k_subset(n_elements, codim + 1, [&](ElementSet s) {
    chain = {s};
    grow(grow);
  });
  return fan;
}

/// Pointwise negation of a fan: e_S -> -e_S = e_{E - S}.
inline WeightedFan negate(const WeightedFan& fan) {
  WeightedFan out{fan.n_elements, fan.dim, {}};
  const ElementSet ground = full_set(fan.n_elements);
  for (const auto& [cone, w] : fan.weights) {
    FlagCone neg;
    for (auto it = cone.sets.rbegin(); it != cone.sets.rend(); ++it) neg.sets.push_back(ground & ~*it);
    out.add(neg, w);
  }
  return out;
}

/// Number of coordinates attaining the minimum (or maximum).
inline int extremum_multiplicity(const RatVector& v, bool maximum) {
  const auto it = maximum ? std::max_element(v.begin(), v.end()) : std::min_element(v.begin(), v.end());
  return static_cast<int>(std::count(v.begin(), v.end(), *it));
}

/// Interior point sum_j (j + 1) e_{S_j} of a flag cone, as a representative in R^E.
inline RatVector interior_point(const FlagCone& cone, int n_elements, const RatVector& coeffs = {}) {
  RatVector v(static_cast<std::size_t>(n_elements), 0);
  for (std::size_t j = 0; j < cone.sets.size(); ++j) {
    const Rational c = coeffs.empty() ? Rational(static_cast<long>(j) + 1) : coeffs.at(j);
    for (int e : elements_of(cone.sets[j])) v[e] += c;
  }
  return v;
}

}  // namespace chowmu
