// Copyright 2026 The noisecut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "noisecut/baselines.hpp"
#include "noisecut/errors.hpp"
#include "noisecut/exact.hpp"
#include "noisecut/generators.hpp"
#include "noisecut/pipeline.hpp"
#include "noisecut/report.hpp"
#include "noisecut/text_format.hpp"

namespace noisecut::cli {
namespace {

struct CheckArgs {
  std::string circuit;
  std::string marks;
  int level = 0;
};

struct SolveArgs {
  std::string circuit;
  int level = 0;
  std::vector<std::string> methods;
  std::uint64_t seed = 1;
  bool randomized = false;
  std::string out;
  std::string trace;
  std::size_t max_exact_subsets = kDefaultMaxSubsets;
};

struct ReduceArgs {
  std::string dvd;
  int level = 0;
  std::string out;
  std::string map;
};

struct GenArgs {
  std::string kind;
  std::size_t width = 10;
  std::size_t depth = 10;
  std::size_t gates = 20;
  std::size_t length = 4;
  double red_fraction = 0.3;
  std::uint64_t seed = 1;
  std::string out;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  return f;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Circuit circuit = read_circuit_file(a.circuit);
  const MarkSet marks = read_marks_file(a.marks, circuit);
  require_budget(a.level);
  const LevelAssignment levels = eval_levels(circuit, marks);
  const bool ok = levels.max() <= a.level;

  out << (ok ? "feasible" : "infeasible") << "  (L=" << a.level
      << ", max level " << levels.max() << ", " << marks.size()
      << " marks)\n";
  std::map<int, std::size_t> histogram;
  for (int l : levels.levels) ++histogram[l];
  out << "level histogram:\n";
  for (const auto& [l, c] : histogram) {
    out << "  " << l << ": " << c << (l > a.level ? "  over budget" : "")
        << '\n';
  }
  if (!ok) {
    out << "violating vertices:";
    for (VertexId v = 0; v < circuit.size(); ++v) {
      if (levels[v] > a.level) {
        out << ' ' << circuit.name(v) << "(" << levels[v] << ")";
      }
    }
    out << '\n';
  }
  return ok ? kOk : kInfeasible;
}

MethodReport finish(const Circuit& circuit, int level, std::string method,
                    const MarkSet& marks, double seconds) {
  MethodReport m;
  m.method = std::move(method);
  m.cardinality = marks.size();
  m.wall_seconds = seconds;
  // Never trust the solver: re-check with the integer level recursion.
  m.verified_feasible = is_feasible_by_levels(circuit, marks, level);
  for (VertexId v : marks.members()) m.marks.push_back(circuit.name(v));
  std::sort(m.marks.begin(), m.marks.end());
  return m;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const Circuit circuit = read_circuit_file(a.circuit);
  require_budget(a.level);
  RunReport report;
  report.instance = std::filesystem::path(a.circuit).stem().string();
  report.vertices = circuit.size();
  report.edges = circuit.edge_count();
  report.budget = a.level;

  std::vector<std::string> methods = a.methods;
  if (methods.empty()) methods.push_back("lp-round");
  std::optional<std::ofstream> trace;
  if (!a.trace.empty()) trace.emplace(open_out(a.trace));

  using Clock = std::chrono::steady_clock;
  for (const std::string& method : methods) {
    const auto start = Clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(Clock::now() - start).count();
    };
    if (method == "lp-round") {
      LpRoundOptions opt;
      if (trace) opt.relaxation.trace = &*trace;
      if (a.randomized) opt.random_seed = a.seed;
      const LpRoundResult r = lp_round(circuit, a.level, opt);
      report.lp_objective = r.lp.objective;
      report.lp_rows = r.lp.constraints_generated;
      report.lp_iterations = r.lp.iterations;
      MethodReport m =
          finish(circuit, a.level, method, r.rounding.marks, elapsed());
      m.threshold = r.rounding.t_used;
      report.methods.push_back(std::move(m));
    } else if (method == "exact") {
      ExactOptions opt;
      opt.max_subsets = a.max_exact_subsets;
      const auto r = exact_bootstrap(circuit, a.level, opt);
      report.exact_optimum = r->optimum;
      report.methods.push_back(finish(circuit, a.level, method,
                                      MarkSet(circuit.size(), r->witness),
                                      elapsed()));
    } else if (method == "after-red") {
      report.methods.push_back(
          finish(circuit, a.level, method, after_every_red(circuit), elapsed()));
    } else if (method == "greedy") {
      report.methods.push_back(finish(circuit, a.level, method,
                                      greedy_topological(circuit, a.level),
                                      elapsed()));
    }
  }

  write_table(out, report);
  if (!a.out.empty()) {
    auto f = open_out(a.out);
    write_key_values(f, report);
  }
  const bool all_ok =
      std::all_of(report.methods.begin(), report.methods.end(),
                  [](const MethodReport& m) { return m.verified_feasible; });
  return all_ok ? kOk : kInfeasible;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const DvdInstance h = read_dvd_file(a.dvd, a.level);
  const ReductionMap map = reduce(h);
  if (a.out.empty()) {
    print_circuit(out, map.circuit);
  } else {
    auto f = open_out(a.out);
    print_circuit(f, map.circuit);
  }
  std::string map_path = a.map;
  if (map_path.empty() && !a.out.empty()) map_path = a.out + ".map";
  if (!map_path.empty()) {
    auto f = open_out(map_path);
    print_provenance(f, map, h);
  }
  return kOk;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Circuit c;
  if (a.kind == "layered") {
    c = layered({a.width, a.depth, a.red_fraction, a.seed});
  } else if (a.kind == "series-parallel") {
    c = series_parallel({a.gates, a.red_fraction, a.seed});
  } else {
    c = red_chain(a.length);
  }
  if (a.out.empty()) {
    print_circuit(out, c);
  } else {
    auto f = open_out(a.out);
    print_circuit(f, c);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bootstrap placement for levelled homomorphic circuits",
               "noisecut"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Verify a mark set against a budget");
  c->add_option("circuit", check.circuit, "Circuit file")->required();
  c->add_option("marks", check.marks, "Marks file (vertex names)")->required();
  c->add_option("--level,-L", check.level, "Noise budget L")->required();

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Choose bootstrap positions");
  s->add_option("circuit", solve.circuit, "Circuit file")->required();
  s->add_option("--level,-L", solve.level, "Noise budget L")->required();
  s->add_option("--method,-m", solve.methods,
                "lp-round (default), exact, after-red, greedy; repeatable")
      ->check(CLI::IsMember({"lp-round", "exact", "after-red", "greedy"}));
  s->add_option("--seed", solve.seed, "Seed for --randomized");
  s->add_flag("--randomized", solve.randomized,
              "Round at one random threshold instead of all candidates");
  s->add_option("--out", solve.out, "Write a key=value report here");
  s->add_option("--trace", solve.trace, "Write the row-generation trace here");
  s->add_option("--max-exact-subsets", solve.max_exact_subsets,
                "Subset cap for the exact method");

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce-dvd",
                               "Build the bootstrap instance of a DVD instance");
  r->add_option("dvd", red.dvd, "DVD file")->required();
  r->add_option("--level,-L", red.level, "Path-length budget L (>= 2)")
      ->required();
  r->add_option("--out", red.out, "Circuit output (default: stdout)");
  r->add_option("--map", red.map, "Provenance output (default: <out>.map)");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a circuit");
  g->add_option("kind", gen.kind, "layered | series-parallel | red-chain")
      ->required()
      ->check(CLI::IsMember({"layered", "series-parallel", "red-chain"}));
  g->add_option("--width", gen.width, "layered: gates per layer");
  g->add_option("--depth", gen.depth, "layered: number of layers");
  g->add_option("--gates", gen.gates, "series-parallel: gate count");
  g->add_option("--length", gen.length, "red-chain: number of red gates");
  g->add_option("--red-fraction", gen.red_fraction, "Probability of red")
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "Generator seed");
  g->add_option("--out", gen.out, "Output file (default: stdout)");

  std::vector<std::string> storage{"noisecut"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*c) return cmd_check(check, out);
    if (*s) return cmd_solve(solve, out);
    if (*r) return cmd_reduce(red, out);
    if (*g) return cmd_gen(gen, out);
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace noisecut::cli
