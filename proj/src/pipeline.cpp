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

#include "noisecut/pipeline.hpp"

namespace noisecut {

LpRoundResult lp_round(const Circuit& circuit, int budget,
                       const LpRoundOptions& options) {
  LpRoundResult out;
  out.lp = solve_relaxation(circuit, budget, options.relaxation);
  const LevelTables tables = level_lengths(circuit, budget, out.lp.weights);
  out.rounding = options.random_seed
                     ? randomized_round(circuit, budget, tables,
                                        *options.random_seed)
                     : derandomized_round(circuit, budget, tables);
  return out;
}

}  // namespace noisecut
