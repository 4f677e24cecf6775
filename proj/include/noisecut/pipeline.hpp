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

#ifndef NOISECUT_PIPELINE_HPP_
#define NOISECUT_PIPELINE_HPP_

#include <cstdint>
#include <optional>

#include "noisecut/circuit.hpp"
#include "noisecut/relaxation.hpp"
#include "noisecut/rounding.hpp"

namespace noisecut {

struct LpRoundOptions {
  RelaxationOptions relaxation;
  // Draw a single threshold instead of trying all candidates.
  std::optional<std::uint64_t> random_seed;
};

struct LpRoundResult {
  LpResult lp;
  RoundingOutcome rounding;
};

// Relaxation, level tables at the LP point, then rounding.
LpRoundResult lp_round(const Circuit& circuit, int budget,
                       const LpRoundOptions& options = {});

}  // namespace noisecut

#endif  // NOISECUT_PIPELINE_HPP_
