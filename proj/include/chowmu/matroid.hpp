#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"

namespace chowmu {

/// Subset of the ground set {0, ..., n}, bit i standing for element i.
using ElementSet = std::uint32_t;

inline constexpr int kMaxElements = 24;

inline int set_size(ElementSet s) { return std::popcount(s); }
inline bool contains(ElementSet s, int e) { return (s >> e) & 1U; }
inline ElementSet singleton(int e) { return ElementSet{1} << e; }
inline ElementSet full_set(int n_elements) {
  return n_elements == 32 ? ~ElementSet{0} : (ElementSet{1} << n_elements) - 1;
}
inline bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }
/// Smallest element; the set must be nonempty.
inline int min_element(ElementSet s) { return std::countr_zero(s); }

inline std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

inline ElementSet set_of(const std::vector<int>& elems) {
  ElementSet s = 0;
  for (int e : elems) s |= singleton(e);
  return s;
}

/// Elements written as a digit string, e.g. {0,2} -> "02".
inline std::string set_label(ElementSet s) {
  std::string out;
  for (int e : elements_of(s)) out += (e < 10 ? std::to_string(e) : "(" + std::to_string(e) + ")");
  return out.empty() ? "{}" : out;
}

/// Calls f(mask) for every k-subset of an n-element ground set.
template <class F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(ElementSet{0});
    return;
  }
  ElementSet s = (ElementSet{1} << k) - 1;
  const ElementSet limit = ElementSet{1} << n;
  while (s < limit) {
    f(s);
    const ElementSet c = s & -s;
    const ElementSet r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// A matroid on {0, ..., n_elements - 1}, stored by its bases.
class Matroid {
 public:
  /// Validates the basis-exchange axiom.
  static Matroid from_bases(int n_elements, std::vector<ElementSet> bases) {
    if (n_elements < 0 || n_elements > kMaxElements) {
      throw PreconditionViolation("ground set size out of range: " + std::to_string(n_elements));
    }
    if (bases.empty()) throw EmptyBases("a matroid needs at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const int rank = set_size(bases.front());
    for (ElementSet b : bases) {
      if (!is_subset(b, full_set(n_elements))) throw PreconditionViolation("basis element outside ground set");
      if (set_size(b) != rank) throw ExchangeViolation("bases of different cardinality");
    }
    Matroid m(n_elements, rank, std::move(bases));
    for (ElementSet b1 : m.bases_) {
      for (ElementSet b2 : m.bases_) {
        for (int x : elements_of(b1 & ~b2)) {
          bool found = false;
          for (int y : elements_of(b2 & ~b1)) {
            if (m.is_basis((b1 & ~singleton(x)) | singleton(y))) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw ExchangeViolation("exchange fails for B1=" + set_label(b1) + ", B2=" + set_label(b2) +
                                    ", x=" + std::to_string(x));
          }
        }
      }
    }
    return m;
  }

  static Matroid from_bases(int n_elements, const std::vector<std::vector<int>>& bases) {
    std::vector<ElementSet> masks;
    for (const auto& b : bases) {
      for (int e : b) {
        if (e < 0 || e >= n_elements) throw PreconditionViolation("basis element outside ground set");
      }
      masks.push_back(set_of(b));
    }
    return from_bases(n_elements, std::move(masks));
  }

  /// Cycle matroid; edge i of the list is element i. Self-loops are loops.
  static Matroid from_graph(const std::vector<std::pair<long, long>>& edges) {
    const int n = static_cast<int>(edges.size());
    if (n > kMaxElements) throw PreconditionViolation("too many edges");
    std::map<long, int> vertex_id;
    for (const auto& [u, v] : edges) {
      vertex_id.try_emplace(u, static_cast<int>(vertex_id.size()));
      vertex_id.try_emplace(v, static_cast<int>(vertex_id.size()));
    }
    std::vector<std::pair<int, int>> e;
    for (const auto& [u, v] : edges) e.emplace_back(vertex_id[u], vertex_id[v]);
    const auto forest_rank = [&](ElementSet s) {
      std::vector<int> parent(vertex_id.size());
      std::iota(parent.begin(), parent.end(), 0);
      const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int rank = 0;
      for (int i : elements_of(s)) {
        const int a = find(e[i].first), b = find(e[i].second);
        if (a != b) {
          parent[a] = b;
          ++rank;
        }
      }
      return rank;
    };
    const int rank = forest_rank(full_set(n));
    std::vector<ElementSet> bases;
    for_each_k_subset(n, rank, [&](ElementSet s) {
      if (forest_rank(s) == rank) bases.push_back(s);
    });
    return Matroid(n, rank, std::move(bases));
  }

  static Matroid uniform(int rank, int n_elements) {
    if (rank < 0 || rank > n_elements || n_elements > kMaxElements) {
      throw PreconditionViolation("uniform matroid needs 0 <= rank <= n_elements");
    }
    std::vector<ElementSet> bases;
    for_each_k_subset(n_elements, rank, [&](ElementSet s) { bases.push_back(s); });
    return Matroid(n_elements, rank, std::move(bases));
  }

  static Matroid boolean(int n_elements) { return uniform(n_elements, n_elements); }

  /// Fano plane with lines 012, 034, 056, 135, 146, 236, 245.
  static Matroid fano() {
    const std::set<ElementSet> lines = {set_of({0, 1, 2}), set_of({0, 3, 4}), set_of({0, 5, 6}),
                                        set_of({1, 3, 5}), set_of({1, 4, 6}), set_of({2, 3, 6}),
                                        set_of({2, 4, 5})};
    std::vector<ElementSet> bases;
    for_each_k_subset(7, 3, [&](ElementSet s) {
      if (!lines.contains(s)) bases.push_back(s);
    });
    return Matroid(7, 3, std::move(bases));
  }

  /// M(K4) with edges 01, 12, 02, 03, 13, 23; elements 0, 1, 2 form a triangle.
  static Matroid k4() { return from_graph({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}); }

  /// Triangle abc with pendant edge cd: edges ab, bc, ac, cd.
  static Matroid triangle_with_pendant() { return from_graph({{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

  int size() const { return n_; }
  ElementSet ground() const { return full_set(n_); }
  /// Rank of the whole matroid (r + 1 in the Chow-ring grading).
  int rank() const { return rank_; }
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_basis(ElementSet s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

  int rank(ElementSet s) const {
    int best = 0;
    for (ElementSet b : bases_) {
      best = std::max(best, set_size(s & b));
      if (best == set_size(s) || best == rank_) break;
    }
    return best;
  }

  bool is_independent(ElementSet s) const { return rank(s) == set_size(s); }

  ElementSet closure(ElementSet s) const {
    const int r = rank(s);
    ElementSet out = s;
    for (int e = 0; e < n_; ++e) {
      if (!contains(s, e) && rank(s | singleton(e)) == r) out |= singleton(e);
    }
    return out;
  }

  ElementSet loops() const {
    ElementSet covered = 0;
    for (ElementSet b : bases_) covered |= b;
    return ground() & ~covered;
  }
  ElementSet coloops() const {
    ElementSet all = ground();
    for (ElementSet b : bases_) all &= b;
    return all;
  }
  bool is_loopless() const { return loops() == 0; }

  void require_loopless(const char* what) const {
    if (!is_loopless()) {
      throw LoopPresent(std::string(what) + ": matroid has loop(s) " + set_label(loops()));
    }
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int rank, std::vector<ElementSet> bases) : n_(n), rank_(rank), bases_(std::move(bases)) {
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (bases_.empty()) throw EmptyBases("a matroid needs at least one basis");
  }

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
};

namespace detail {

// Removes element e and shifts higher elements down by one.
inline ElementSet drop_element(ElementSet s, int e) {
  const ElementSet low = s & (singleton(e) - 1);
  const ElementSet high = (s >> (e + 1)) << e;
  return low | high;
}

}  // namespace detail

/// M \ e on E - e, elements above e relabeled down by one. Deleting a coloop
/// keeps B - e for every basis B.
inline Matroid delete_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw PreconditionViolation("element out of range");
  std::vector<ElementSet> bases;
  if (contains(m.coloops(), e)) {
    for (ElementSet b : m.bases()) bases.push_back(detail::drop_element(b, e));
  } else {
    for (ElementSet b : m.bases())
      if (!contains(b, e)) bases.push_back(detail::drop_element(b, e));
  }
  return Matroid::from_bases(m.size() - 1, std::move(bases));
}

/// M / e on E - e, elements above e relabeled down by one.
inline Matroid contract_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw PreconditionViolation("element out of range");
  if (contains(m.loops(), e)) throw LoopContract("cannot contract loop " + std::to_string(e));
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases())
    if (contains(b, e)) bases.push_back(detail::drop_element(b & ~singleton(e), e));
  return Matroid::from_bases(m.size() - 1, std::move(bases));
}

/// Truncation: bases are the independent sets of size rank - 1.
inline Matroid truncate(const Matroid& m) {
  if (m.rank() == 0) throw PreconditionViolation("cannot truncate a rank-0 matroid");
  std::set<ElementSet> bases;
  for (ElementSet b : m.bases())
    for (int e : elements_of(b)) bases.insert(b & ~singleton(e));
  return Matroid::from_bases(m.size(), std::vector<ElementSet>(bases.begin(), bases.end()));
}

inline Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::from_bases(m.size(), std::move(bases));
}

/// One flat of the lattice, with its Möbius value mu(0^, F).
struct Flat {
  ElementSet set = 0;
  int rank = 0;
  Integer mobius = 0;
  std::vector<std::size_t> upper_covers;
};

/// The lattice of flats, flats ordered by (rank, set).
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m) : n_elements_(m.size()), rank_(m.rank()) {
    by_rank_.resize(static_cast<std::size_t>(rank_) + 1);
    std::set<ElementSet> current = {m.closure(0)};
    for (int k = 0; k <= rank_; ++k) {
      std::set<ElementSet> next;
      for (ElementSet f : current) {
        by_rank_[k].push_back(flats_.size());
        flats_.push_back(Flat{f, k, 0, {}});
        for (int e = 0; e < n_elements_; ++e) {
          if (!contains(f, e)) next.insert(m.closure(f | singleton(e)));
        }
      }
      current = std::move(next);
    }
    for (std::size_t i = 0; i < flats_.size(); ++i) index_[flats_[i].set] = i;
    for (auto& flat : flats_) {
      if (flat.rank == rank_) continue;
      for (std::size_t j : by_rank_[flat.rank + 1]) {
        if (is_subset(flat.set, flats_[j].set)) flat.upper_covers.push_back(j);
      }
    }
    assign_mobius();
  }

  int n_elements() const { return n_elements_; }
  /// Rank of the top flat.
  int rank() const { return rank_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<std::size_t>& of_rank(int k) const { return by_rank_.at(static_cast<std::size_t>(k)); }
  const Flat& bottom() const { return flats_.front(); }
  const Flat& top() const { return flats_.back(); }
  std::size_t size() const { return flats_.size(); }

  bool is_flat(ElementSet s) const { return index_.contains(s); }
  const Flat& flat(ElementSet s) const { return flats_.at(index_.at(s)); }

  /// Join: smallest flat containing both.
  ElementSet join(ElementSet a, ElementSet b) const {
    for (const auto& f : flats_)
      if (is_subset(a | b, f.set)) return f.set;
    return top().set;
  }

  /// Flats strictly between lo and hi of the given rank, or all of that rank when unbounded.
  std::vector<ElementSet> flats_between(ElementSet lo, ElementSet hi, int rank) const {
    std::vector<ElementSet> out;
    if (rank < 0 || rank > rank_) return out;
    for (std::size_t i : of_rank(rank)) {
      const ElementSet s = flats_[i].set;
      if (is_subset(lo, s) && is_subset(s, hi)) out.push_back(s);
    }
    return out;
  }

 private:
  void assign_mobius() {
    for (auto& f : flats_) {
      if (f.rank == 0) {
        f.mobius = 1;
        continue;
      }
      Integer below = 0;
      for (const auto& g : flats_) {
        if (g.rank < f.rank && is_subset(g.set, f.set)) below += g.mobius;
      }
      f.mobius = -below;
    }
  }

  int n_elements_;
  int rank_;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> by_rank_;
  std::map<ElementSet, std::size_t> index_;
};

inline FlatLattice flats(const Matroid& m) { return FlatLattice(m); }

/// Möbius values mu(0^, F), recomputed from the defining recursion.
inline std::map<ElementSet, Integer> mobius(const FlatLattice& lattice) {
  std::map<ElementSet, Integer> mu;
  for (const auto& f : lattice.flats()) {
    if (f.set == lattice.bottom().set) {
      mu[f.set] = 1;
      continue;
    }
    Integer sum = 0;
    for (const auto& g : lattice.flats())
      if (g.set != f.set && is_subset(g.set, f.set)) sum += mu.at(g.set);
    mu[f.set] = -sum;
  }
  return mu;
}

/// Univariate integer polynomial; coeffs[i] multiplies q^i.
struct CharPoly {
  std::vector<Integer> coeffs;

  int degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
      if (sgn(coeffs[i]) != 0) return i;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }

  Integer eval(const Integer& q) const {
    Integer v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * q + *it;
    return v;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs[i];
      if (sgn(c) == 0) continue;
      const Integer a = abs(c);
      if (s.empty()) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      if (a != 1 || i == 0) s += a.get_str();
      if (i >= 1) s += "q";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const CharPoly& a, const CharPoly& b) {
    const int d = a.degree();
    if (d != b.degree()) return false;
    for (int i = 0; i <= d; ++i)
      if (a.coeffs[i] != b.coeffs[i]) return false;
    return true;
  }
};

/// Whitney's subset expansion sum_A (-1)^|A| q^{rk E - rk A}.
inline CharPoly char_poly_whitney(const Matroid& m) {
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(m.rank()) + 1, 0);
  const ElementSet limit = m.size() == 32 ? 0 : ElementSet{1} << m.size();
  for (ElementSet a = 0; a < limit; ++a) {
    const int power = m.rank() - m.rank(a);
    if (set_size(a) % 2 == 0) {
      p.coeffs[power] += 1;
    } else {
      p.coeffs[power] -= 1;
    }
  }
  return p;
}

/// sum_F mu(F) q^{rk E - rk F}.
inline CharPoly char_poly_mobius(const FlatLattice& lattice) {
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(lattice.rank()) + 1, 0);
  for (const auto& f : lattice.flats()) p.coeffs[lattice.rank() - f.rank] += f.mobius;
  return p;
}

/// Characteristic polynomial; both expansions are computed and must agree.
/// A matroid with loops has the zero polynomial.
inline CharPoly char_poly(const Matroid& m) {
  CharPoly whitney = char_poly_whitney(m);
  if (!m.is_loopless()) {
    if (!whitney.is_zero()) throw CrossCheckFailure("Whitney sum nonzero for a matroid with loops");
    return whitney;
  }
  const CharPoly by_flats = char_poly_mobius(FlatLattice(m));
  if (!(whitney == by_flats)) {
    throw CrossCheckFailure("Whitney sum " + whitney.to_string() + " != Mobius sum " + by_flats.to_string());
  }
  return whitney;
}

/// chi_M(q) / (q - 1); the division must be exact.
inline CharPoly reduced_char_poly(const Matroid& m) {
  m.require_loopless("reduced characteristic polynomial");
  if (m.rank() == 0) throw PreconditionViolation("reduced polynomial needs rank >= 1");
  const CharPoly chi = char_poly(m);
  // Synthetic division by (q - 1), from the top coefficient down.
  const int d = chi.degree();
  CharPoly quotient;
  quotient.coeffs.assign(static_cast<std::size_t>(d), 0);
  Integer carry = 0;
  for (int i = d; i >= 1; --i) {
    carry = chi.coeffs[i] + carry;
    quotient.coeffs[i - 1] = carry;
  }
  if (chi.coeffs[0] + carry != 0) throw CrossCheckFailure("chi_M(1) != 0");
  return quotient;
}

/// mu^k: the absolute value of the q^{r-k} coefficient of the reduced polynomial.
inline Integer mu(const Matroid& m, int k) {
  const CharPoly reduced = reduced_char_poly(m);
  const int r = m.rank() - 1;
  if (k < 0 || k > r) throw KOutOfRange("k must lie in [0, " + std::to_string(r) + "]");
  return abs(reduced.coeffs[r - k]);
}

inline std::vector<Integer> mu_vector(const Matroid& m) {
  const CharPoly reduced = reduced_char_poly(m);
  const int r = m.rank() - 1;
  std::vector<Integer> out;
  for (int k = 0; k <= r; ++k) out.push_back(abs(reduced.coeffs[r - k]));
  return out;
}

/// Descent positions of a word, 1-based: i is a descent when w_i > w_{i+1}.
inline std::set<int> descent_set(const std::vector<int>& word) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

/// Maximal chains of the flat lattice from bottom to top, as the list of flats
/// strictly between bottom and top.
inline std::vector<std::vector<ElementSet>> maximal_chains(const FlatLattice& lattice) {
  std::vector<std::vector<ElementSet>> out;
  std::vector<ElementSet> chain;
  const auto& fl = lattice.flats();
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (fl[i].rank == lattice.rank()) {
      out.push_back(chain);
      return;
    }
    for (std::size_t j : fl[i].upper_covers) {
      const bool inner = fl[j].rank < lattice.rank();
      if (inner) chain.push_back(fl[j].set);
      self(self, j);
      if (inner) chain.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

/// Jordan-Hölder word of a flag of flats F_1 < ... < F_k: letters min(F_i - F_{i-1})
/// with F_0 = bottom, F_{k+1} = ground set.
inline std::vector<int> flag_word(ElementSet bottom, const std::vector<ElementSet>& flag, ElementSet ground) {
  std::vector<int> word;
  ElementSet prev = bottom;
  for (ElementSet f : flag) {
    word.push_back(min_element(f & ~prev));
    prev = f;
  }
  word.push_back(min_element(ground & ~prev));
  return word;
}

/// Maximal chains whose Jordan-Hölder word has descent set exactly `descents`.
inline std::vector<std::vector<ElementSet>> chains_with_descent_set_list(const FlatLattice& lattice,
                                                                         const std::set<int>& descents) {
  std::vector<std::vector<ElementSet>> out;
  const ElementSet ground = full_set(lattice.n_elements());
  for (auto& chain : maximal_chains(lattice)) {
    if (descent_set(flag_word(lattice.bottom().set, chain, ground)) == descents) out.push_back(std::move(chain));
  }
  return out;
}

inline Integer chains_with_descent_set(const Matroid& m, const std::set<int>& descents) {
  return static_cast<unsigned long>(chains_with_descent_set_list(FlatLattice(m), descents).size());
}

/// The set {1, ..., k}.
inline std::set<int> initial_segment(int k) {
  std::set<int> s;
  for (int i = 1; i <= k; ++i) s.insert(i);
  return s;
}

}  // namespace chowmu
