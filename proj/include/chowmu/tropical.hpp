#pragma once

// Tropical divisors of piecewise linear functions on balanced fans, and the
// truncation weights Sigma_{M,[r1,r2]}.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"
#include "chowmu/fan.hpp"
#include "chowmu/matroid.hpp"

namespace chowmu {

/// A function on N_E that is linear on every braid cone, given by its values on the rays e_S.
struct PLFunction {
  int n_elements = 0;
  std::map<ElementSet, Rational> ray_values;  // missing rays have value 0

  Rational at_ray(ElementSet s) const {
    auto it = ray_values.find(s);
    return it == ray_values.end() ? Rational(0) : it->second;
  }

  /// Value at a representative v in R^E.
  Rational operator()(const RatVector& v) const {
    const FlagCone cone = braid_cone_of(QuotientCoords::project(v));
    return on_span(cone, v);
  }

  /// The linear function agreeing with this one on `cone`, evaluated at v in span(cone).
  Rational on_span(const FlagCone& cone, const RatVector& v) const {
    const RatVector c = span_coefficients(cone, v, n_elements);
    Rational total = 0;
    for (std::size_t j = 0; j < c.size(); ++j) total += c[j] * at_ray(cone.sets[j]);
    return total;
  }

  friend PLFunction operator+(const PLFunction& a, const PLFunction& b) {
    PLFunction out = a;
    for (const auto& [s, v] : b.ray_values) out.ray_values[s] += v;
    return out;
  }
};

/// alpha_0: value 1 on e_S exactly when 0 is in S.
inline PLFunction pl_alpha(int n_elements, int i = 0) {
  PLFunction f{n_elements, {}};
  const ElementSet ground = full_set(n_elements);
  for (ElementSet s = 1; s < ground; ++s)
    if (contains(s, i)) f.ray_values[s] = 1;
  return f;
}

/// beta_0: value 1 on e_S exactly when 0 is not in S.
inline PLFunction pl_beta(int n_elements, int i = 0) {
  PLFunction f{n_elements, {}};
  const ElementSet ground = full_set(n_elements);
  for (ElementSet s = 1; s < ground; ++s)
    if (!contains(s, i)) f.ray_values[s] = 1;
  return f;
}

/// Ray table of the global linear function t -> sum_i c_i t_i (requires sum_i c_i = 0).
inline PLFunction linear_ray_table(const RatVector& c) {
  Rational total = 0;
  for (const auto& x : c) total += x;
  if (sgn(total) != 0) throw PreconditionViolation("linear form must vanish on e_E");
  const int n_elements = static_cast<int>(c.size());
  PLFunction f{n_elements, {}};
  const ElementSet ground = full_set(n_elements);
  for (ElementSet s = 1; s < ground; ++s) {
    Rational v = 0;
    for (int e : elements_of(s)) v += c[e];
    if (sgn(v) != 0) f.ray_values[s] = v;
  }
  return f;
}

/// Representative offset u (in span tau) added to the extra ray of sigma over tau.
using RepresentativeShift = std::function<RatVector(const FlagCone& tau, const FlagCone& sigma)>;

/// The divisor f . w. At each codimension-one face tau the weight is
///   sum_sigma f_sigma(w(sigma) e_{sigma/tau}) - f_tau(sum_sigma w(sigma) e_{sigma/tau})
/// where f_sigma is the linear function agreeing with f on sigma. The extra ray
/// e_S of sigma over tau serves as e_{sigma/tau}, optionally shifted by `shift`.
inline WeightedFan divisor(const PLFunction& f, const WeightedFan& w, const RepresentativeShift& shift = {}) {
  if (const auto report = is_balanced(w); !report) {
    throw Unbalanced("divisor of an unbalanced fan; violation at " + report.violation->to_string());
  }
  if (w.dim == 0) throw PreconditionViolation("divisor of a 0-dimensional weight");
  WeightedFan out{w.n_elements, w.dim - 1, {}};
  for (const auto& [tau, star] : codim_one_stars(w)) {
    Rational first = 0;
    RatVector sum(static_cast<std::size_t>(w.n_elements), 0);
    for (const auto& arm : star.arms) {
      RatVector v = indicator(arm.extra_ray, w.n_elements);
      if (shift) {
        const RatVector u = shift(tau, arm.cone);
        if (!in_linear_span(tau, u, w.n_elements)) throw PreconditionViolation("shift leaves span(tau)");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += u[i];
      }
      for (auto& x : v) x *= arm.weight;
      first += f.on_span(arm.cone, v);
      for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
    }
    out.add(tau, first - f.on_span(tau, sum));
  }
  return out;
}

/// The divisor with f evaluated as a function on N_E: sum f(w e_rho) - f(sum w e_rho).
/// Agrees with `divisor` whenever the weights are positive and the sum lands in tau.
inline WeightedFan divisor_pointwise(const PLFunction& f, const WeightedFan& w) {
  WeightedFan out{w.n_elements, w.dim - 1, {}};
  for (const auto& [tau, star] : codim_one_stars(w)) {
    Rational first = 0;
    RatVector sum(static_cast<std::size_t>(w.n_elements), 0);
    for (const auto& arm : star.arms) {
      RatVector v = indicator(arm.extra_ray, w.n_elements);
      for (auto& x : v) x *= arm.weight;
      first += f(v);
      for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
    }
    out.add(tau, first - f(sum));
  }
  return out;
}

/// Sigma_{M,[r1,r2]}: flags of flats of ranks r1, ..., r2 weighted by |mu(F_{r1})|.
struct TruncationWeight {
  int r1 = 0;
  int r2 = 0;
  WeightedFan fan;
};

inline TruncationWeight truncation_weight(const Matroid& m, const FlatLattice& lattice, int r1, int r2) {
  m.require_loopless("truncation weight");
  const int r = m.rank() - 1;
  if (r1 < 1 || r1 > r2 || r2 > r) {
    throw RangeError("truncation range [" + std::to_string(r1) + ", " + std::to_string(r2) +
                     "] outside 1 <= r1 <= r2 <= " + std::to_string(r));
  }
  TruncationWeight t{r1, r2, WeightedFan{m.size(), r2 - r1 + 1, {}}};
  const auto& fl = lattice.flats();
  std::vector<ElementSet> chain;
  auto climb = [&](auto&& self, std::size_t i, const Integer& weight) -> void {
    chain.push_back(fl[i].set);
    if (fl[i].rank == r2) {
      t.fan.add(FlagCone{chain}, Rational(weight));
    } else {
      for (std::size_t j : fl[i].upper_covers) self(self, j, weight);
    }
    chain.pop_back();
  };
  for (std::size_t i : lattice.of_rank(r1)) climb(climb, i, abs(fl[i].mobius));
  if (const auto report = is_balanced(t.fan); !report) {
    throw CrossCheckFailure("truncation weight unbalanced at " + report.violation->to_string());
  }
  return t;
}

inline TruncationWeight truncation_weight(const Matroid& m, int r1, int r2) {
  return truncation_weight(m, FlatLattice(m), r1, r2);
}

/// Applies beta k times and then alpha r - k times to Sigma_M; returns the weight at the origin.
inline Rational deg_tropical(const Matroid& m, int k) {
  m.require_loopless("deg_tropical");
  const int r = m.rank() - 1;
  if (k < 0 || k > r) throw KOutOfRange("k must lie in [0, " + std::to_string(r) + "]");
  WeightedFan w = matroid_fan(m);
  const PLFunction alpha = pl_alpha(m.size());
  const PLFunction beta = pl_beta(m.size());
  for (int i = 0; i < r; ++i) w = divisor(i < k ? beta : alpha, w);
  return w.degree();
}

}  // namespace chowmu
