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

#ifndef NOISECUT_RELAXATION_HPP_
#define NOISECUT_RELAXATION_HPP_

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/paths.hpp"
#include "noisecut/simplex.hpp"
#include "noisecut/weights.hpp"

namespace noisecut {

struct RelaxationOptions {
  double tolerance = kViolationTolerance;
  // Defaults to 10 * |V| * L.
  std::optional<std::size_t> max_iterations;
  // Wall-clock budget, checked once per round.
  std::optional<std::chrono::duration<double>> time_limit;
  // Receives "iteration\tobjective\trows_added" lines when set.
  std::ostream* trace = nullptr;
  SimplexOptions simplex;
};

struct LpResult {
  FractionalWeights weights;
  double objective = 0.0;
  std::size_t constraints_generated = 0;
  std::size_t iterations = 0;
  // Non-final vertex sets of the generated paths, in generation order.
  std::vector<std::vector<VertexId>> rows;
  // Master objective after each re-solve.
  std::vector<double> objective_history;
};

// Row generation over interesting-path constraints: solve the restricted
// master, separate with the level DP, add the shortest violated path for every
// violated red endpoint, repeat. On return every red v has f(L+1, v) >= 1 up
// to floating-point rounding.
//
// Throws IterationLimitExceeded if the iteration cap or the time limit is hit.
LpResult solve_relaxation(const Circuit& circuit, int budget,
                          const RelaxationOptions& options = {});

}  // namespace noisecut

#endif  // NOISECUT_RELAXATION_HPP_
