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

#ifndef NOISECUT_DVD_HPP_
#define NOISECUT_DVD_HPP_

#include <cstddef>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "noisecut/circuit.hpp"

namespace noisecut {

// DAG vertex deletion instance: remove the fewest vertices so that no path
// with `budget` vertices survives. Uncoloured, arbitrary indegree, budget >= 2.
class DvdInstance {
 public:
  std::size_t size() const { return names_.size(); }
  int budget() const { return budget_; }
  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }

  // Sorted, duplicate-free.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }
  // Ascending ids.
  const std::vector<VertexId>& predecessors(VertexId v) const {
    return preds_[v];
  }
  const std::vector<VertexId>& successors(VertexId v) const {
    return succs_[v];
  }
  const std::vector<VertexId>& topological_order() const { return topo_; }

 private:
  friend DvdInstance make_dvd_instance(
      std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
      int budget, std::vector<std::string> names);

  std::vector<std::string> names_;
  int budget_ = 2;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> preds_;
  std::vector<std::vector<VertexId>> succs_;
  std::vector<VertexId> topo_;
};

// Throws UnknownVertex, CycleDetected, or InvalidArgument (budget < 2).
DvdInstance make_dvd_instance(std::size_t n,
                              std::vector<std::pair<VertexId, VertexId>> edges,
                              int budget, std::vector<std::string> names = {});

enum class ReducedRole { kOriginal, kClone, kGadget, kSource };

// Bootstrap instance built from a DVD instance together with the provenance
// of every vertex. Originals keep ids 0..|V_H|-1, clones follow, then the
// white source, then the blue gadget vertices.
struct ReductionMap {
  Circuit circuit;
  int budget = 2;
  std::size_t original_count = 0;
  std::vector<VertexId> clone_of;                 // original -> clone
  std::vector<std::vector<VertexId>> gadget_of;   // original -> w_1..w_d
  VertexId source = 0;
  std::vector<ReducedRole> role;                  // per circuit vertex
  std::vector<VertexId> owner;                    // per circuit vertex

  bool is_original(VertexId v) const { return v < original_count; }
};

// Red originals and clones, a double edge v -> clone(v), white padding into
// vertices of indegree <= 2, and a blue chain replacing the in-edges of every
// vertex with indegree >= 3 (predecessors taken in ascending id order).
ReductionMap reduce(const DvdInstance& h);

// Moves marks off gadget vertices onto their owners, then keeps only original
// vertices. Throws InfeasibleInput if `marks` is not bootstrap-feasible.
std::vector<VertexId> pull_back(const ReductionMap& map, const MarkSet& marks);

// A DVD deletion set read as a mark set on the reduced circuit. Throws
// InfeasibleInput if `deleted` is not DVD-feasible.
MarkSet push_forward(const ReductionMap& map, const DvdInstance& h,
                     std::span<const VertexId> deleted);

}  // namespace noisecut

#endif  // NOISECUT_DVD_HPP_
