#pragma once

// Exact integer and rational linear algebra over GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chowmu/errors.hpp"

namespace chowmu {

using Integer = mpz_class;
using Rational = mpq_class;

/// A lattice point of Z^n.
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Three-way comparison normalized to -1, 0, 1.
inline int compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline void check_width(std::span<const IntVector> rows, std::size_t width) {
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw PreconditionViolation("integer matrix rows have inconsistent length");
    }
  }
}

// Unimodular row reduction of `rows` to row echelon form. Rows appended to
// `companions` receive the same row operations. Returns the number of nonzero
// rows, which come first; pivots are positive.
inline std::size_t echelonize(IntMatrix& rows, std::size_t width, IntMatrix* companions = nullptr) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    // Euclid on the column: repeatedly move the smallest nonzero entry up.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = pivot_row; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      if (companions) std::swap((*companions)[pivot_row], (*companions)[best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
        for (std::size_t j = col; j < width; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (companions) {
          auto& dst = (*companions)[i];
          const auto& src = (*companions)[pivot_row];
          for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
        }
        if (sgn(rows[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[pivot_row][col]) == 0) continue;
    if (sgn(rows[pivot_row][col]) < 0) {
      for (auto& x : rows[pivot_row]) x = -x;
      if (companions) for (auto& x : (*companions)[pivot_row]) x = -x;
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace detail

/// Hermite normal form (row style) of the lattice spanned by `rows`.
/// Zero rows are dropped; entries above each pivot are reduced into [0, pivot).
inline IntMatrix hermite_normal_form(std::span<const IntVector> rows, std::size_t width) {
  detail::check_width(rows, width);
  IntMatrix h(rows.begin(), rows.end());
  const std::size_t rank = detail::echelonize(h, width);
  h.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t col = static_cast<std::size_t>(
        std::find_if(h[i].begin(), h[i].end(), [](const Integer& x) { return sgn(x) != 0; }) - h[i].begin());
    for (std::size_t k = 0; k < i; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[k][col].get_mpz_t(), h[i][col].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = col; j < width; ++j) h[k][j] -= q * h[i][j];
    }
  }
  return h;
}

inline std::size_t integer_rank(std::span<const IntVector> rows, std::size_t width) {
  return hermite_normal_form(rows, width).size();
}

/// Index [Z^n : L] of the lattice L generated by `generators`.
/// Throws NotFullRank when L has rank below `ambient_dim`.
inline Integer lattice_index(std::span<const IntVector> generators, std::size_t ambient_dim) {
  const IntMatrix h = hermite_normal_form(generators, ambient_dim);
  if (h.size() < ambient_dim) {
    throw NotFullRank("generators span a lattice of rank " + std::to_string(h.size()) + " < " +
                      std::to_string(ambient_dim));
  }
  Integer index = 1;
  for (std::size_t i = 0; i < ambient_dim; ++i) index *= h[i][i];
  return index;
}

/// Basis of the saturated lattice {x in Z^n : A x = 0}. Empty for a trivial kernel.
inline IntMatrix integer_kernel(std::span<const IntVector> matrix, std::size_t n_columns) {
  detail::check_width(matrix, n_columns);
  // Row-reduce [A^T | I]; rows whose left half vanishes carry kernel vectors.
  IntMatrix left(n_columns, IntVector(matrix.size()));
  IntMatrix right(n_columns, IntVector(n_columns, 0));
  for (std::size_t i = 0; i < n_columns; ++i) {
    for (std::size_t r = 0; r < matrix.size(); ++r) left[i][r] = matrix[r][i];
    right[i][i] = 1;
  }
  const std::size_t rank = detail::echelonize(left, matrix.size(), &right);
  IntMatrix basis(right.begin() + static_cast<std::ptrdiff_t>(rank), right.end());
  return hermite_normal_form(basis, n_columns);
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
inline std::vector<Integer> smith_invariants(std::span<const IntVector> matrix, std::size_t width) {
  detail::check_width(matrix, width);
  IntMatrix a(matrix.begin(), matrix.end());
  const std::size_t m = a.size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < m && t < width) {
    // Pick the smallest nonzero entry of the remaining block as pivot.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < width; ++j)
        if (sgn(a[i][j]) != 0 && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) piv = {{i, j}};
    if (!piv) break;
    std::swap(a[t], a[piv->first]);
    for (auto& row : a) std::swap(row[t], row[piv->second]);
    bool clean = true;
    for (std::size_t i = t + 1; i < m; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t j = t; j < width; ++j) a[i][j] -= q * a[t][j];
      if (sgn(a[i][t]) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < width; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (sgn(a[t][j]) != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold any entry not divisible by the pivot back into row t.
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < width; ++j)
        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
          for (std::size_t k = t; k < width; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

/// Outcome of solving a rational linear system exactly.
struct LinearSolution {
  enum class Kind { kUnique, kInconsistent, kUnderdetermined };
  Kind kind;
  RatVector x;  // set only for kUnique
};

/// Solves A x = b by exact Gaussian elimination.
inline LinearSolution solve_linear(RatMatrix a, RatVector b, std::size_t n_unknowns) {
  const std::size_t m = a.size();
  std::size_t row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t col = 0; col < n_unknowns && row < m; ++col) {
    std::size_t p = row;
    while (p < m && sgn(a[p][col]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[row], a[p]);
    std::swap(b[row], b[p]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < n_unknowns; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < n_unknowns; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (sgn(b[i]) != 0) return {LinearSolution::Kind::kInconsistent, {}};
  }
  if (row < n_unknowns) return {LinearSolution::Kind::kUnderdetermined, {}};
  RatVector x(n_unknowns);
  for (std::size_t i = 0; i < row; ++i) x[pivot_cols[i]] = b[i];
  return {LinearSolution::Kind::kUnique, std::move(x)};
}

}  // namespace chowmu
