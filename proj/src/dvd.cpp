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

#include "noisecut/dvd.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

#include "noisecut/errors.hpp"
#include "noisecut/exact.hpp"

namespace noisecut {

DvdInstance make_dvd_instance(std::size_t n,
                              std::vector<std::pair<VertexId, VertexId>> edges,
                              int budget, std::vector<std::string> names) {
  if (budget < 2) {
    throw InvalidArgument("DVD budget L must be >= 2, got " +
                          std::to_string(budget));
  }
  if (!names.empty() && names.size() != n) {
    throw InvalidInstance("name list length does not match vertex count");
  }
  for (const auto& [a, b] : edges) {
    if (a >= n) throw UnknownVertex(a);
    if (b >= n) throw UnknownVertex(b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  DvdInstance h;
  h.budget_ = budget;
  if (names.empty()) {
    for (VertexId v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  }
  h.names_ = std::move(names);
  h.preds_.assign(n, {});
  h.succs_.assign(n, {});
  for (const auto& [a, b] : edges) {
    h.succs_[a].push_back(b);
    h.preds_[b].push_back(a);
  }
  for (auto& p : h.preds_) std::sort(p.begin(), p.end());
  h.edges_ = std::move(edges);

  std::vector<std::size_t> remaining(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = h.preds_[v].size();
    if (remaining[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    h.topo_.push_back(v);
    for (VertexId w : h.succs_[v]) {
      if (--remaining[w] == 0) ready.push(w);
    }
  }
  if (h.topo_.size() != n) throw CycleDetected();
  return h;
}

namespace {

// Appends primes until `name` is unused.
std::string fresh_name(std::string name,
                       std::unordered_set<std::string>& taken) {
  while (!taken.insert(name).second) name += '\'';
  return name;
}

}  // namespace

ReductionMap reduce(const DvdInstance& h) {
  const std::size_t n = h.size();
  ReductionMap map;
  map.budget = h.budget();
  map.original_count = n;

  std::unordered_set<std::string> taken(h.names().begin(), h.names().end());
  std::vector<Color> colors;
  std::vector<std::string> names;
  std::vector<RawEdge> edges;

  auto add_vertex = [&](Color c, std::string name, ReducedRole role,
                        VertexId owner) {
    const auto id = static_cast<VertexId>(colors.size());
    colors.push_back(c);
    names.push_back(std::move(name));
    map.role.push_back(role);
    map.owner.push_back(owner);
    return id;
  };

  for (VertexId v = 0; v < n; ++v) {
    add_vertex(Color::kRed, h.name(v), ReducedRole::kOriginal, v);
  }
  map.clone_of.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    map.clone_of[v] = add_vertex(Color::kRed,
                                 fresh_name("clone(" + h.name(v) + ")", taken),
                                 ReducedRole::kClone, v);
  }
  map.source = add_vertex(Color::kWhite, fresh_name("s0", taken),
                          ReducedRole::kSource, 0);
  map.gadget_of.resize(n);

  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({v, map.clone_of[v], 2});
    const auto& preds = h.predecessors(v);
    const std::size_t d = preds.size();
    if (d <= 2) {
      for (VertexId u : preds) edges.push_back({u, v, 1});
      if (d < 2) {
        edges.push_back({map.source, v, static_cast<std::uint32_t>(2 - d)});
      }
      continue;
    }
    // Chain w_1..w_d replaces the d in-edges of v.
    std::vector<VertexId>& chain = map.gadget_of[v];
    for (std::size_t i = 0; i < d; ++i) {
      chain.push_back(add_vertex(
          Color::kBlue,
          fresh_name("w" + std::to_string(i + 1) + "(" + h.name(v) + ")",
                     taken),
          ReducedRole::kGadget, v));
    }
    edges.push_back({preds[0], chain[0], 2});
    for (std::size_t i = 1; i < d; ++i) {
      edges.push_back({chain[i - 1], chain[i], 1});
      edges.push_back({preds[i], chain[i], 1});
    }
    edges.push_back({chain[d - 1], v, 2});
  }

  map.circuit = validate(std::move(colors), std::move(edges), std::move(names));
  return map;
}

std::vector<VertexId> pull_back(const ReductionMap& map, const MarkSet& marks) {
  const Circuit& g = map.circuit;
  if (marks.universe() != g.size() ||
      !is_feasible_by_levels(g, marks, map.budget)) {
    throw InfeasibleInput("pull_back needs a feasible bootstrap solution");
  }
  MarkSet moved = marks;
  for (VertexId w = 0; w < g.size(); ++w) {
    if (map.role[w] != ReducedRole::kGadget || !moved.contains(w)) continue;
    moved.erase(w);
    moved.insert(map.owner[w]);
    if (!is_feasible_by_levels(g, moved, map.budget)) {
      throw std::logic_error("moving a gadget mark to its owner broke "
                             "feasibility");
    }
  }
  std::vector<VertexId> out;
  for (VertexId v : moved.members()) {
    if (map.is_original(v)) out.push_back(v);
  }
  return out;
}

MarkSet push_forward(const ReductionMap& map, const DvdInstance& h,
                     std::span<const VertexId> deleted) {
  if (h.size() != map.original_count) {
    throw InvalidArgument("reduction map was built from a different instance");
  }
  if (!dvd_is_feasible(h, deleted)) {
    throw InfeasibleInput("push_forward needs a feasible DVD deletion set");
  }
  return MarkSet(map.circuit.size(), deleted);
}

}  // namespace noisecut
