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

#include "noisecut/relaxation.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <unordered_map>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

// Surplus above which a row is considered slack and leaves the master.
constexpr double kSlackRowThreshold = 1e-6;

}  // namespace


LpResult solve_relaxation(const Circuit& circuit, int budget,
                          const RelaxationOptions& options) {
  require_budget(budget);
  const std::size_t n = circuit.size();
  const std::size_t cap =
      options.max_iterations.value_or(10 * std::max<std::size_t>(n, 1) *
                                      static_cast<std::size_t>(budget));
  const auto started = std::chrono::steady_clock::now();
  LpResult result;
  result.weights = FractionalWeights::zeros(n);
  CoveringMaster master(n, options.simplex);

  // Every generated row, keyed by its sorted vertex set. A row leaves the
  // master once it is slack and comes back if it is violated again.
  std::map<std::vector<VertexId>, std::size_t> known;  // row -> index in rows
  std::vector<bool> active;
  std::unordered_map<std::size_t, std::size_t> by_master_id;
  if (options.trace) *options.trace << "iteration\tobjective\trows_added\n";

  LevelTables tables;
  while (true) {
    tables = level_lengths(circuit, budget, result.weights);
    const std::vector<VertexId> ends =
        violated_endpoints(tables, circuit, options.tolerance);
    if (ends.empty()) break;
    if (result.iterations == cap) {
      throw IterationLimitExceeded("row generation did not converge within " +
                                   std::to_string(cap) + " iterations");
    }
    if (options.time_limit &&
        std::chrono::steady_clock::now() - started > *options.time_limit) {
      throw IterationLimitExceeded(
          "row generation exceeded the time limit after " +
          std::to_string(result.iterations) + " iterations");
    }
    ++result.iterations;

    std::vector<std::vector<VertexId>> found(ends.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(ends.size());
         ++k) {
      InterestingPath p = shortest_interesting_path(tables, circuit, ends[k]);
      const auto nf = p.non_final();
      std::vector<VertexId> row(nf.begin(), nf.end());
      std::sort(row.begin(), row.end());
      found[k] = std::move(row);
    }
    std::size_t added = 0, revived = 0;
    for (auto& row : found) {
      auto [it, fresh] = known.try_emplace(row, result.rows.size());
      if (!fresh && active[it->second]) continue;
      by_master_id[master.add_row(row)] = it->second;
      if (fresh) {
        result.rows.push_back(std::move(row));
        active.push_back(true);
        ++added;
      } else {
        active[it->second] = true;
        ++revived;
      }
    }
    if (added + revived == 0) {
      // Every violated path is a row the master claims to satisfy.
      throw NumericalFailure(
          "separation returned only active rows; master solution is "
          "inconsistent with its constraints");
    }

    master.solve();
    for (std::size_t id : master.drop_slack_rows(kSlackRowThreshold)) {
      active[by_master_id.at(id)] = false;
      by_master_id.erase(id);
    }
    result.weights = master.weights();
    const double objective = result.weights.sum();
    result.objective_history.push_back(objective);
    if (options.trace) {
      *options.trace << result.iterations << '\t' << objective << '\t'
                     << added << '\n';
    }
  }

  // Paths never added as rows may sit within the tolerance below 1. Scaling
  // by the shortest one lifts all of them to >= 1 so rounding at t = 1 is
  // still covered.
  double shortest = 1.0;
  for (VertexId v : circuit.red_vertices()) {
    const ExtReal f = tables.f(budget + 1, v);
    if (f.is_finite()) shortest = std::min(shortest, f.value());
  }
  if (shortest < 1.0 && shortest > 0.0) {
    for (double& v : result.weights.x) v = std::min(1.0, v / shortest);
  }

  result.constraints_generated = result.rows.size();
  result.objective = result.weights.sum();
  return result;
}

}  // namespace noisecut
