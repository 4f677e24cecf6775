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

#ifndef NOISECUT_BASELINES_HPP_
#define NOISECUT_BASELINES_HPP_

#include "noisecut/circuit.hpp"

namespace noisecut {

// Bootstrap after every non-linear gate. Feasible for any L >= 1.
MarkSet after_every_red(const Circuit& circuit);

// Topological sweep marking every vertex whose level reaches L, so nothing
// downstream can exceed it. Whites are never marked.
MarkSet greedy_topological(const Circuit& circuit, int budget);

}  // namespace noisecut

#endif  // NOISECUT_BASELINES_HPP_
