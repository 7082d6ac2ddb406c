#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chowmu/chow_lex.hpp"
#include "chowmu/errors.hpp"
#include "chowmu/matroid.hpp"
#include "chowmu/piecewise.hpp"
#include "chowmu/stable.hpp"
#include "chowmu/tropical.hpp"

namespace chowmu {

enum class Method { kLex, kPiecewise, kStable, kTropical };

inline const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = {Method::kLex, Method::kPiecewise, Method::kStable,
                                              Method::kTropical};
  return methods;
}

inline std::string method_name(Method m) {
  switch (m) {
    case Method::kLex:
      return "lex";
    case Method::kPiecewise:
      return "pp";
    case Method::kStable:
      return "stable";
    case Method::kTropical:
      return "tropical";
  }
  return "?";
}

inline std::optional<Method> parse_method(const std::string& name) {
  for (Method m : all_methods())
    if (method_name(m) == name) return m;
  return std::nullopt;
}

inline Integer require_integer(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw CrossCheckFailure(what + " returned non-integer " + q.get_str());
  return q.get_num();
}

/// deg(alpha^{r-k} beta^k) by one engine.
inline Integer run_method(const Matroid& m, int k, Method method, std::uint64_t seed) {
  switch (method) {
    case Method::kLex:
      return deg_lex(m, k);
    case Method::kPiecewise:
      return require_integer(deg_pp(m, k, seed), "pp");
    case Method::kStable:
      return deg_stable(m, k, seed);
    case Method::kTropical:
      return require_integer(deg_tropical(m, k), "tropical");
  }
  throw PreconditionViolation("unknown method");
}

struct Cell {
  std::string column;  // method or oracle name
  Integer value = 0;
  double elapsed_ms = 0;
};

struct CrosscheckRow {
  int k = 0;
  std::vector<Cell> cells;

  bool agree() const {
    for (const auto& c : cells)
      if (c.value != cells.front().value) return false;
    return true;
  }
};

struct CrosscheckReport {
  std::uint64_t seed = 0;
  std::vector<CrosscheckRow> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.agree()) return false;
    return !rows.empty();
  }
};

template <class F>
Cell timed_cell(const std::string& column, F&& compute) {
  const auto start = std::chrono::steady_clock::now();
  Integer value = compute();
  const auto stop = std::chrono::steady_clock::now();
  return {column, std::move(value), std::chrono::duration<double, std::milli>(stop - start).count()};
}

/// Every method not in `skip` plus the Whitney and descent-chain oracles, for each 0 <= k <= r.
inline CrosscheckReport crosscheck(const Matroid& m, std::uint64_t seed, const std::set<Method>& skip = {}) {
  m.require_loopless("crosscheck");
  std::vector<Method> methods;
  for (Method x : all_methods())
    if (!skip.contains(x)) methods.push_back(x);
  if (methods.size() < 2) throw PreconditionViolation("crosscheck needs at least two methods");
  const int r = m.rank() - 1;
  const std::vector<Integer> whitney = mu_vector(m);
  const FlatLattice lattice(m);
  CrosscheckReport report;
  report.seed = seed;
  for (int k = 0; k <= r; ++k) {
    CrosscheckRow row;
    row.k = k;
    for (Method x : methods) row.cells.push_back(timed_cell(method_name(x), [&] { return run_method(m, k, x, seed); }));
    row.cells.push_back(timed_cell("whitney", [&] { return whitney[k]; }));
    row.cells.push_back(timed_cell("chains", [&] {
      return Integer(static_cast<unsigned long>(chains_with_descent_set_list(lattice, initial_segment(k)).size()));
    }));
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace chowmu
