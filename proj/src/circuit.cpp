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

#include "noisecut/circuit.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "noisecut/errors.hpp"

namespace noisecut {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::kWhite:
      return "white";
    case Color::kBlue:
      return "blue";
    case Color::kRed:
      return "red";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view s) {
  if (s == "white") return Color::kWhite;
  if (s == "blue") return Color::kBlue;
  if (s == "red") return Color::kRed;
  return std::nullopt;
}

void require_budget(int budget) {
  if (budget < 1) {
    throw InvalidArgument("noise budget L must be >= 1, got " +
                          std::to_string(budget));
  }
}

std::optional<VertexId> Circuit::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Circuit validate(std::vector<Color> colors, std::vector<RawEdge> edges,
                 std::vector<std::string> names) {
  const std::size_t n = colors.size();
  if (!names.empty() && names.size() != n) {
    throw InvalidInstance("name list length does not match vertex count");
  }
  for (const RawEdge& e : edges) {
    if (e.src >= n) throw UnknownVertex(e.src);
    if (e.dst >= n) throw UnknownVertex(e.dst);
    if (e.multiplicity == 0) {
      throw InvalidInstance("edge with zero multiplicity");
    }
  }

  // Merge parallel records.
  std::sort(edges.begin(), edges.end(), [](const RawEdge& a, const RawEdge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  std::vector<RawEdge> merged;
  merged.reserve(edges.size());
  for (const RawEdge& e : edges) {
    if (!merged.empty() && merged.back().src == e.src &&
        merged.back().dst == e.dst) {
      merged.back().multiplicity += e.multiplicity;
    } else {
      merged.push_back(e);
    }
  }

  std::vector<int> indegree(n, 0);
  for (const RawEdge& e : merged) {
    indegree[e.dst] += static_cast<int>(e.multiplicity);
  }
  for (VertexId v = 0; v < n; ++v) {
    const int expected = colors[v] == Color::kWhite ? 0 : 2;
    if (indegree[v] != expected) {
      throw IndegreeViolation(v, expected, indegree[v]);
    }
  }

  Circuit c;
  c.colors_ = std::move(colors);
  c.edges_ = std::move(merged);
  if (names.empty()) {
    names.reserve(n);
    for (VertexId v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  }
  c.names_ = std::move(names);
  for (VertexId v = 0; v < n; ++v) {
    if (!c.by_name_.emplace(c.names_[v], v).second) {
      throw InvalidInstance("duplicate vertex name '" + c.names_[v] + "'");
    }
  }

  // CSR adjacency in both directions; arcs stay sorted by neighbour id.
  c.pred_offsets_.assign(n + 1, 0);
  c.succ_offsets_.assign(n + 1, 0);
  for (const RawEdge& e : c.edges_) {
    ++c.pred_offsets_[e.dst + 1];
    ++c.succ_offsets_[e.src + 1];
    c.edge_count_ += e.multiplicity;
  }
  for (std::size_t v = 0; v < n; ++v) {
    c.pred_offsets_[v + 1] += c.pred_offsets_[v];
    c.succ_offsets_[v + 1] += c.succ_offsets_[v];
  }
  c.pred_arcs_.resize(c.edges_.size());
  c.succ_arcs_.resize(c.edges_.size());
  {
    std::vector<std::size_t> pfill(c.pred_offsets_.begin(),
                                   c.pred_offsets_.end() - 1);
    std::vector<std::size_t> sfill(c.succ_offsets_.begin(),
                                   c.succ_offsets_.end() - 1);
    for (const RawEdge& e : c.edges_) {
      c.pred_arcs_[pfill[e.dst]++] = Arc{e.src, e.multiplicity};
      c.succ_arcs_[sfill[e.src]++] = Arc{e.dst, e.multiplicity};
    }
  }

  // Kahn with a min-heap so the order is the lexicographically smallest
  // topological order; identity when the input is already sorted.
  std::vector<std::size_t> remaining(n);
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = c.pred_offsets_[v + 1] - c.pred_offsets_[v];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining[v] == 0) ready.push(v);
  }
  c.topo_.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    c.topo_.push_back(v);
    for (const Arc& a : c.successors(v)) {
      if (--remaining[a.vertex] == 0) ready.push(a.vertex);
    }
  }
  if (c.topo_.size() != n) throw CycleDetected();
  c.topo_pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.topo_pos_[c.topo_[i]] = i;

  for (VertexId v = 0; v < n; ++v) {
    if (c.is_red(v)) c.reds_.push_back(v);
    if (c.is_blue(v)) c.blues_.push_back(v);
  }
  return c;
}

MarkSet::MarkSet(std::size_t universe, std::span<const VertexId> members)
    : member_(universe, false) {
  for (VertexId v : members) insert(v);
}

MarkSet MarkSet::all(std::size_t universe) {
  MarkSet s(universe);
  for (VertexId v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void MarkSet::insert(VertexId v) {
  if (v >= member_.size()) throw UnknownVertex(v);
  if (!member_[v]) {
    member_[v] = true;
    ++count_;
  }
}

void MarkSet::erase(VertexId v) {
  if (v < member_.size() && member_[v]) {
    member_[v] = false;
    --count_;
  }
}

std::vector<VertexId> MarkSet::members() const {
  std::vector<VertexId> out;
  out.reserve(count_);
  for (VertexId v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(v);
  }
  return out;
}

int LevelAssignment::max() const {
  return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

LevelAssignment eval_levels(const Circuit& circuit, const MarkSet& marks) {
  if (marks.universe() != circuit.size()) {
    throw InvalidArgument("mark set universe does not match circuit size");
  }
  LevelAssignment out;
  out.levels.assign(circuit.size(), 0);
  for (VertexId v : circuit.topological_order()) {
    if (circuit.is_white(v)) continue;
    int incoming = 0;
    for (const Arc& a : circuit.predecessors(v)) {
      if (!marks.contains(a.vertex)) {
        incoming = std::max(incoming, out.levels[a.vertex]);
      }
    }
    out.levels[v] = circuit.is_red(v) ? incoming + 1 : incoming;
  }
  return out;
}

bool is_feasible_by_levels(const Circuit& circuit, const MarkSet& marks,
                           int budget) {
  require_budget(budget);
  return eval_levels(circuit, marks).max() <= budget;
}

std::optional<VertexId> first_violation(const LevelAssignment& levels,
                                        int budget) {
  for (VertexId v = 0; v < levels.levels.size(); ++v) {
    if (levels.levels[v] > budget) return v;
  }
  return std::nullopt;
}

}  // namespace noisecut
