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

#ifndef NOISECUT_ROUNDING_HPP_
#define NOISECUT_ROUNDING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/paths.hpp"

namespace noisecut {

// Slack on both ends of every interval [f_i(v), f_i(v) + x_v].
inline constexpr double kIntervalTolerance = 1e-9;

struct RoundingOutcome {
  MarkSet marks;
  double t_used = 0.0;
  std::size_t cardinality = 0;
  // Candidate thresholds considered / verified with the exact level check.
  std::size_t candidates = 0;
  std::size_t verified = 0;
};

// Marks v iff f_i(v) <= t <= f_i(v) + x_v for some i in 1..L.
MarkSet round_at(const LevelTables& tables, int budget, double t);

// Sorted, deduplicated finite values f_i(v) and f_i(v) + x_v (i = 1..L)
// clamped to [0, 1], plus 0 and 1.
std::vector<double> breakpoints(const LevelTables& tables, int budget);

// Breakpoints together with the midpoint of every gap between consecutive
// breakpoints, ascending.
std::vector<double> candidate_thresholds(const LevelTables& tables, int budget);

// Best threshold over all candidates: the feasible rounding of smallest
// cardinality, smallest t on ties. Cardinalities come from one sweep over the
// vertex intervals; candidates are then verified in (cardinality, t) order
// with the exact level recursion until one passes.
//
// Throws NoFeasibleCandidate if none passes, which means `tables` were not
// computed at an LP-feasible point.
RoundingOutcome derandomized_round(const Circuit& circuit, int budget,
                                   const LevelTables& tables);

// One uniform t in [0, 1] from a 64-bit Mersenne twister seeded with `seed`.
// Throws NoFeasibleCandidate if the result fails verification.
RoundingOutcome randomized_round(const Circuit& circuit, int budget,
                                 const LevelTables& tables,
                                 std::uint64_t seed);

// The threshold randomized_round would draw for `seed`.
double draw_threshold(std::uint64_t seed);

namespace serial {

// Reference: round and verify at every candidate, keep the best.
RoundingOutcome derandomized_round(const Circuit& circuit, int budget,
                                   const LevelTables& tables);

}  // namespace serial

}  // namespace noisecut

#endif  // NOISECUT_ROUNDING_HPP_
