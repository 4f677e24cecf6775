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

#ifndef NOISECUT_EXACT_HPP_
#define NOISECUT_EXACT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/dvd.hpp"

namespace noisecut {

inline constexpr std::size_t kDefaultMaxSubsets = std::size_t{1} << 24;

struct ExactOptions {
  // Largest subset size to try; unlimited when unset.
  std::optional<std::size_t> max_size;
  // TooLarge is thrown before starting a cardinality whose subsets would push
  // the examined total past this.
  std::size_t max_subsets = kDefaultMaxSubsets;
};

struct ExactResult {
  std::size_t optimum = 0;
  std::vector<VertexId> witness;  // ascending
  std::size_t explored = 0;       // subsets examined
};

// Minimum feasible mark set by enumerating subsets of non-white vertices in
// order of size, then lexicographically; the first feasible one is returned.
// Empty only when `max_size` is set and nothing that small is feasible.
std::optional<ExactResult> exact_bootstrap(const Circuit& circuit, int budget,
                                           const ExactOptions& options = {});

// Vertex count of the longest path avoiding `deleted`.
std::size_t longest_surviving_path(const DvdInstance& h,
                                   std::span<const VertexId> deleted);

// True iff no path with L vertices survives the deletion.
bool dvd_is_feasible(const DvdInstance& h, std::span<const VertexId> deleted);

std::optional<ExactResult> exact_dvd(const DvdInstance& h,
                                     const ExactOptions& options = {});

}  // namespace noisecut

#endif  // NOISECUT_EXACT_HPP_
