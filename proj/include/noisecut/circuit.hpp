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

#ifndef NOISECUT_CIRCUIT_HPP_
#define NOISECUT_CIRCUIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace noisecut {

using VertexId = std::uint32_t;

// White: input (indegree 0). Blue: linear gate, level = max of inputs.
// Red: non-linear gate, level = max of inputs + 1.
enum class Color : std::uint8_t { kWhite, kBlue, kRed };

std::string_view to_string(Color c);
std::optional<Color> parse_color(std::string_view s);

struct RawEdge {
  VertexId src = 0;
  VertexId dst = 0;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

// One endpoint of a (possibly parallel) edge as seen from the other endpoint.
struct Arc {
  VertexId vertex = 0;
  std::uint32_t multiplicity = 1;
};

// Throws InvalidArgument when budget < 1.
void require_budget(int budget);

// Immutable gate DAG. Ids are dense 0..size()-1; parallel edges are merged
// into one record carrying their multiplicity.
class Circuit {
 public:
  Circuit() = default;

  std::size_t size() const { return colors_.size(); }
  Color color(VertexId v) const { return colors_[v]; }
  bool is_white(VertexId v) const { return colors_[v] == Color::kWhite; }
  bool is_blue(VertexId v) const { return colors_[v] == Color::kBlue; }
  bool is_red(VertexId v) const { return colors_[v] == Color::kRed; }

  std::span<const Arc> predecessors(VertexId v) const {
    return {pred_arcs_.data() + pred_offsets_[v],
            pred_offsets_[v + 1] - pred_offsets_[v]};
  }
  std::span<const Arc> successors(VertexId v) const {
    return {succ_arcs_.data() + succ_offsets_[v],
            succ_offsets_[v + 1] - succ_offsets_[v]};
  }

  // Merged edges sorted by (src, dst).
  const std::vector<RawEdge>& edges() const { return edges_; }
  // Edge count with multiplicity.
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> topological_order() const { return topo_; }
  std::size_t topological_position(VertexId v) const { return topo_pos_[v]; }

  std::span<const VertexId> red_vertices() const { return reds_; }
  std::span<const VertexId> blue_vertices() const { return blues_; }

  const std::string& name(VertexId v) const { return names_[v]; }
  std::optional<VertexId> find(std::string_view name) const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.colors_ == b.colors_ && a.edges_ == b.edges_ &&
           a.names_ == b.names_;
  }

 private:
  friend Circuit validate(std::vector<Color> colors, std::vector<RawEdge> edges,
                          std::vector<std::string> names);

  std::vector<Color> colors_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> by_name_;
  std::vector<RawEdge> edges_;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> pred_offsets_{0};
  std::vector<Arc> pred_arcs_;
  std::vector<std::size_t> succ_offsets_{0};
  std::vector<Arc> succ_arcs_;
  std::vector<VertexId> topo_;
  std::vector<std::size_t> topo_pos_;
  std::vector<VertexId> reds_;
  std::vector<VertexId> blues_;
};

// Builds a Circuit, enforcing acyclicity, known endpoints and the 0/2
// indegree rule. Names default to "v<id>" when `names` is empty.
//
// Errors are reported in this order: UnknownVertex, IndegreeViolation,
// CycleDetected. A zero-multiplicity edge is an InvalidInstance.
Circuit validate(std::vector<Color> colors, std::vector<RawEdge> edges,
                 std::vector<std::string> names = {});

// Set of bootstrapped vertices over a universe of `universe()` ids.
class MarkSet {
 public:
  MarkSet() = default;
  explicit MarkSet(std::size_t universe) : member_(universe, false) {}
  MarkSet(std::size_t universe, std::span<const VertexId> members);

  static MarkSet all(std::size_t universe);

  std::size_t universe() const { return member_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(VertexId v) const { return v < member_.size() && member_[v]; }

  void insert(VertexId v);
  void erase(VertexId v);

  // Ascending ids.
  std::vector<VertexId> members() const;

  friend bool operator==(const MarkSet& a, const MarkSet& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<bool> member_;
  std::size_t count_ = 0;
};

struct LevelAssignment {
  std::vector<int> levels;

  int operator[](VertexId v) const { return levels[v]; }
  int max() const;
};

// Noise levels in topological order: white 0, blue max over unmarked inputs,
// red that max plus one. Marked inputs contribute 0.
LevelAssignment eval_levels(const Circuit& circuit, const MarkSet& marks);

bool is_feasible_by_levels(const Circuit& circuit, const MarkSet& marks,
                           int budget);

// Lowest-id vertex whose level exceeds the budget, if any.
std::optional<VertexId> first_violation(const LevelAssignment& levels,
                                        int budget);

}  // namespace noisecut

#endif  // NOISECUT_CIRCUIT_HPP_
