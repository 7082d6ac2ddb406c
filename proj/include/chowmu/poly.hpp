#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chowmu/errors.hpp"
#include "chowmu/exact.hpp"

namespace chowmu {

/// Sparse multivariate polynomial with rational coefficients in variables
/// t_0, ..., t_{n_vars - 1}. Exponent vectors are dense; zero terms are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MultiPoly(std::size_t n_vars = 0) : n_vars_(n_vars) {}

  static MultiPoly constant(std::size_t n_vars, const Rational& c) {
    MultiPoly p(n_vars);
    p.add_term(Exponent(n_vars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t n_vars, std::size_t i) {
    MultiPoly p(n_vars);
    Exponent e(n_vars, 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
  }

  /// t_i - t_j
  static MultiPoly difference(std::size_t n_vars, std::size_t i, std::size_t j) {
    return variable(n_vars, i) - variable(n_vars, j);
  }

  std::size_t n_vars() const { return n_vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (e.size() != n_vars_) throw PreconditionViolation("exponent length mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational eval(std::span<const Rational> point) const {
    if (point.size() != n_vars_) throw PreconditionViolation("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < n_vars_; ++i) {
        for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
      }
      total += term;
    }
    return total;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    MultiPoly out(a.n_vars_);
    Exponent e(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.n_vars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly out = constant(p.n_vars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * p;
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.get_str();
      for (std::size_t i = 0; i < n_vars_; ++i) {
        if (e[i] == 0) continue;
        s += "*t" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
    }
    return s;
  }

 private:
  void require_same_ring(const MultiPoly& o) const {
    if (o.n_vars_ != n_vars_) throw PreconditionViolation("polynomials over different variable sets");
  }

  std::size_t n_vars_;
  std::map<Exponent, Rational> terms_;
};

}  // namespace chowmu
