// chowmu: invariants and mixed degrees deg(alpha^{r-k} beta^k) of matroids.

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chowmu/crosscheck.hpp"
#include "chowmu/errors.hpp"
#include "chowmu/fan.hpp"
#include "chowmu/matroid.hpp"
#include "chowmu/matroid_spec.hpp"
#include "chowmu/tropical.hpp"

using namespace chowmu;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kPass = 0, kOther = 1, kParse = 2, kAxioms = 3, kLoops = 4, kMismatch = 5 };

struct Source {
  std::string bases_file;
  std::string graph_file;
  std::vector<int> uniform;
  std::string builtin;

  void attach(CLI::App* cmd) {
    cmd->add_option("--bases", bases_file, "JSON matroid file");
    cmd->add_option("--graph", graph_file, "graph file: JSON or \"u v\" edge lines");
    cmd->add_option("--uniform", uniform, "uniform matroid U(R, N)")->expected(2);
    cmd->add_option("--builtin", builtin, "fano, k4 or fig1");
  }

  MatroidSpec resolve() const {
    const int given = !bases_file.empty() + !graph_file.empty() + !uniform.empty() + !builtin.empty();
    if (given != 1) throw ParseError("give exactly one of --bases, --graph, --uniform, --builtin");
    if (!bases_file.empty()) return load_spec_file(bases_file);
    if (!graph_file.empty()) return load_graph_file(graph_file);
    if (!uniform.empty()) return UniformSpec{uniform[0], uniform[1]};
    return BuiltinSpec{builtin};
  }
};

std::string ms(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << x;
  return out.str();
}

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
  return s;
}

int cmd_invariants(const MatroidSpec& spec, bool json) {
  const Matroid m = build(spec);
  m.require_loopless("invariants");
  const FlatLattice lattice(m);
  const CharPoly chi = char_poly(m);
  const CharPoly reduced = reduced_char_poly(m);
  const std::vector<Integer> mus = mu_vector(m);

  std::vector<std::size_t> by_rank;
  std::vector<std::vector<std::string>> mobius_by_rank;
  for (int k = 0; k <= m.rank(); ++k) {
    by_rank.push_back(lattice.of_rank(k).size());
    std::vector<std::string> values;
    for (std::size_t i : lattice.of_rank(k)) values.push_back(lattice.flats()[i].mobius.get_str());
    mobius_by_rank.push_back(std::move(values));
  }

  if (json) {
    ordered_json out;
    out["matroid"] = describe(spec);
    out["n_elements"] = m.size();
    out["rank"] = m.rank();
    out["flats_by_rank"] = by_rank;
    out["mobius_by_rank"] = mobius_by_rank;
    out["chi"] = chi.to_string();
    out["reduced_chi"] = reduced.to_string();
    std::vector<std::string> mu_strings;
    for (const auto& x : mus) mu_strings.push_back(x.get_str());
    out["mu"] = mu_strings;
    std::cout << out.dump(2) << "\n";
    return kPass;
  }
  std::cout << "matroid      " << describe(spec) << "\n";
  std::cout << "n, rank      " << m.size() << ", " << m.rank() << "\n";
  std::cout << "flats        " << lattice.size() << " (by rank:";
  for (auto c : by_rank) std::cout << " " << c;
  std::cout << ")\n";
  for (int k = 0; k <= m.rank(); ++k) {
    std::cout << "  mobius r=" << k << ":";
    for (const auto& v : mobius_by_rank[static_cast<std::size_t>(k)]) std::cout << " " << v;
    std::cout << "\n";
  }
  std::cout << "chi          " << chi.to_string() << "\n";
  std::cout << "reduced chi  " << reduced.to_string() << "\n";
  std::cout << "mu           " << join(mus) << "\n";
  return kPass;
}

int cmd_deg(const MatroidSpec& spec, int k, const std::string& method_name_arg, std::uint64_t seed, bool json) {
  const auto method = parse_method(method_name_arg);
  if (!method) throw ParseError("unknown method '" + method_name_arg + "' (expected lex, pp, stable, tropical)");
  const Matroid m = build(spec);
  const Cell cell = timed_cell(method_name_arg, [&] { return run_method(m, k, *method, seed); });
  if (json) {
    ordered_json out;
    out["matroid"] = describe(spec);
    out["k"] = k;
    out["method"] = method_name_arg;
    out["value"] = cell.value.get_str();
    out["seed"] = seed;
    out["elapsed_ms"] = cell.elapsed_ms;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << cell.value.get_str() << "\n";
  }
  return kPass;
}

void print_table(const CrosscheckReport& report, std::ostream& out) {
  if (report.rows.empty()) return;
  out << std::left << std::setw(4) << "k";
  for (const auto& c : report.rows.front().cells) out << std::setw(12) << c.column;
  out << "status\n";
  for (const auto& row : report.rows) {
    out << std::setw(4) << row.k;
    for (const auto& c : row.cells) out << std::setw(12) << c.value.get_str();
    out << (row.agree() ? "ok" : "MISMATCH") << "\n";
  }
}

int cmd_crosscheck(const MatroidSpec& spec, std::uint64_t seed, const std::vector<std::string>& skip_names,
                   bool json) {
  std::set<Method> skip;
  for (const auto& name : skip_names) {
    const auto x = parse_method(name);
    if (!x) throw ParseError("unknown method in --skip: " + name);
    skip.insert(*x);
  }
  if (all_methods().size() - skip.size() < 2) throw ParseError("--skip must leave at least two methods");
  const Matroid m = build(spec);
  const CrosscheckReport report = crosscheck(m, seed, skip);
  if (json) {
    ordered_json out;
    out["matroid"] = describe(spec);
    out["seed"] = seed;
    out["pass"] = report.pass();
    ordered_json results = ordered_json::array();
    for (const auto& row : report.rows)
      for (const auto& c : row.cells) {
        ordered_json cell;
        cell["matroid"] = describe(spec);
        cell["k"] = row.k;
        cell["method"] = c.column;
        cell["value"] = c.value.get_str();
        cell["seed"] = seed;
        cell["elapsed_ms"] = c.elapsed_ms;
        results.push_back(std::move(cell));
      }
    out["results"] = std::move(results);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << describe(spec) << "  seed " << seed << "\n";
    print_table(report, std::cout);
    double total = 0;
    for (const auto& row : report.rows)
      for (const auto& c : row.cells) total += c.elapsed_ms;
    std::cout << (report.pass() ? "PASS" : "FAIL") << "  (" << ms(total) << " ms)\n";
  }
  if (!report.pass()) {
    if (json) print_table(report, std::cerr);
    return kMismatch;
  }
  return kPass;
}

int cmd_balancing(const MatroidSpec& spec, bool json) {
  const Matroid m = build(spec);
  m.require_loopless("balancing");
  const FlatLattice lattice(m);
  const int r = m.rank() - 1;
  struct Line {
    std::string fan;
    std::size_t cones;
    bool balanced;
  };
  std::vector<Line> lines;
  const WeightedFan bergman = matroid_fan(m, lattice);
  lines.push_back({"Sigma_M", bergman.weights.size(), static_cast<bool>(is_balanced(bergman))});
  for (int r1 = 1; r1 <= r; ++r1)
    for (int r2 = r1; r2 <= r; ++r2) {
      const std::string name = "[" + std::to_string(r1) + "," + std::to_string(r2) + "]";
      try {
        const auto t = truncation_weight(m, lattice, r1, r2);
        lines.push_back({name, t.fan.weights.size(), true});
      } catch (const CrossCheckFailure&) {
        lines.push_back({name, 0, false});
      }
    }
  bool all = true;
  for (const auto& l : lines) all = all && l.balanced;
  if (json) {
    ordered_json out;
    out["matroid"] = describe(spec);
    out["pass"] = all;
    ordered_json fans = ordered_json::array();
    for (const auto& l : lines) fans.push_back({{"fan", l.fan}, {"cones", l.cones}, {"balanced", l.balanced}});
    out["fans"] = std::move(fans);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& l : lines)
      std::cout << std::left << std::setw(10) << l.fan << std::setw(8) << l.cones
                << (l.balanced ? "balanced" : "UNBALANCED") << "\n";
    std::cout << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? kPass : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow ring degrees of matroids"};
  app.require_subcommand(1);

  Source source;
  bool json = false;
  std::uint64_t seed = 1;
  int k = 0;
  std::string method = "lex";
  std::vector<std::string> skip;

  auto* inv = app.add_subcommand("invariants", "flats, Mobius numbers, chi, reduced chi, mu");
  auto* deg = app.add_subcommand("deg", "deg(alpha^{r-k} beta^k) by one method");
  auto* cross = app.add_subcommand("crosscheck", "every method and both oracles for each k");
  auto* bal = app.add_subcommand("balancing", "balancing of Sigma_M and its truncation weights");
  for (auto* cmd : {inv, deg, cross, bal}) {
    source.attach(cmd);
    cmd->add_flag("--json", json, "machine-readable output");
  }
  deg->add_option("--k", k, "power of beta")->required();
  deg->add_option("--method", method, "lex, pp, stable or tropical")
      ->check(CLI::IsMember({"lex", "pp", "stable", "tropical"}));
  for (auto* cmd : {deg, cross}) cmd->add_option("--seed", seed, "random seed for pp and stable");
  cross->add_option("--skip", skip, "methods to leave out")->check(CLI::IsMember({"lex", "pp", "stable", "tropical"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    const MatroidSpec spec = source.resolve();
    if (*inv) return cmd_invariants(spec, json);
    if (*deg) return cmd_deg(spec, k, method, seed, json);
    if (*cross) return cmd_crosscheck(spec, seed, skip, json);
    return cmd_balancing(spec, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const KOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const ExchangeViolation& e) {
    std::cerr << "not a matroid: " << e.what() << "\n";
    return kAxioms;
  } catch (const EmptyBases& e) {
    std::cerr << "not a matroid: " << e.what() << "\n";
    return kAxioms;
  } catch (const LoopPresent& e) {
    std::cerr << "loops: " << e.what() << "\n";
    return kLoops;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const Unbalanced& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
