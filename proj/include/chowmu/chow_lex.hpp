#pragma once

// Degrees of alpha^{r-k} beta^k in the Chow ring A(M) through lexicographic
// expansion into square-free flag monomials.

#include <cstddef>
#include <string>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"
#include "chowmu/matroid.hpp"

namespace chowmu {

/// x_F for a flag F_1 < ... < F_k of nonempty proper flats.
struct FlagMonomial {
  std::vector<ElementSet> flats;

  int degree() const { return static_cast<int>(flats.size()); }

  friend auto operator<=>(const FlagMonomial&, const FlagMonomial&) = default;
};

namespace detail {

inline void require_expandable(const FlatLattice& lattice, const FlagMonomial& mono) {
  const int r = lattice.rank() - 1;
  if (mono.degree() >= r) {
    throw PreconditionViolation("cannot expand a flag monomial of degree " + std::to_string(mono.degree()) +
                                " past top degree " + std::to_string(r));
  }
}

}  // namespace detail

/// x_F * alpha_e with e = min(E - F_k): one term per proper flat F containing F_k + e.
inline std::vector<FlagMonomial> lex_expand_alpha(const FlatLattice& lattice, const FlagMonomial& mono) {
  detail::require_expandable(lattice, mono);
  const ElementSet ground = full_set(lattice.n_elements());
  const ElementSet top = mono.flats.empty() ? lattice.bottom().set : mono.flats.back();
  const ElementSet need = top | singleton(min_element(ground & ~top));
  std::vector<FlagMonomial> out;
  for (const auto& f : lattice.flats()) {
    if (f.set == ground || !is_subset(need, f.set)) continue;
    FlagMonomial next = mono;
    next.flats.push_back(f.set);
    out.push_back(std::move(next));
  }
  return out;
}

/// x_F * beta_e with e = min(F_1): one term per nonempty flat F inside F_1 - e.
inline std::vector<FlagMonomial> lex_expand_beta(const FlatLattice& lattice, const FlagMonomial& mono) {
  detail::require_expandable(lattice, mono);
  const ElementSet first = mono.flats.empty() ? full_set(lattice.n_elements()) : mono.flats.front();
  const ElementSet allowed = first & ~singleton(min_element(first));
  std::vector<FlagMonomial> out;
  for (const auto& f : lattice.flats()) {
    if (f.set == lattice.bottom().set || !is_subset(f.set, allowed)) continue;
    FlagMonomial next;
    next.flats.push_back(f.set);
    next.flats.insert(next.flats.end(), mono.flats.begin(), mono.flats.end());
    out.push_back(std::move(next));
  }
  return out;
}

/// Lexicographic expansion of alpha^s beta^t, multiplying by beta t times and then by alpha s times.
inline std::vector<FlagMonomial> lex_expansion(const FlatLattice& lattice, int s, int t) {
  std::vector<FlagMonomial> current = {FlagMonomial{}};
  for (int i = 0; i < t + s; ++i) {
    std::vector<FlagMonomial> next;
    for (const auto& mono : current) {
      auto terms = i < t ? lex_expand_beta(lattice, mono) : lex_expand_alpha(lattice, mono);
      next.insert(next.end(), std::make_move_iterator(terms.begin()), std::make_move_iterator(terms.end()));
    }
    current = std::move(next);
  }
  return current;
}

/// deg(alpha^{r-k} beta^k): every term of the expansion is a full flag of degree 1.
inline Integer deg_lex(const Matroid& m, int k) {
  m.require_loopless("deg_lex");
  const int r = m.rank() - 1;
  if (k < 0 || k > r) throw KOutOfRange("k must lie in [0, " + std::to_string(r) + "]");
  const FlatLattice lattice(m);
  return static_cast<unsigned long>(lex_expansion(lattice, r - k, k).size());
}

}  // namespace chowmu
