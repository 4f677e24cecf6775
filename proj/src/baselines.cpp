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

#include "noisecut/baselines.hpp"

#include <algorithm>
#include <vector>

namespace noisecut {

MarkSet after_every_red(const Circuit& circuit) {
  return MarkSet(circuit.size(), circuit.red_vertices());
}

MarkSet greedy_topological(const Circuit& circuit, int budget) {
  require_budget(budget);
  MarkSet marks(circuit.size());
  std::vector<int> level(circuit.size(), 0);
  for (VertexId v : circuit.topological_order()) {
    if (circuit.is_white(v)) continue;
    int in = 0;
    for (const Arc& a : circuit.predecessors(v)) {
      if (!marks.contains(a.vertex)) in = std::max(in, level[a.vertex]);
    }
    level[v] = circuit.is_red(v) ? in + 1 : in;
    // A mark on a sink changes no level, so it is never placed.
    if (level[v] == budget && !circuit.successors(v).empty()) marks.insert(v);
  }
  return marks;
}

}  // namespace noisecut
