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

#ifndef NOISECUT_PATHS_HPP_
#define NOISECUT_PATHS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/ext_real.hpp"
#include "noisecut/weights.hpp"

namespace noisecut {

// Slack below the covering right-hand side 1 that still counts as satisfied.
inline constexpr double kViolationTolerance = 1e-7;

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// A directed path starting and ending at red vertices that traverses exactly
// L+1 red vertices. Only its non-final vertices can repair it.
struct InterestingPath {
  std::vector<VertexId> vertices;

  std::span<const VertexId> non_final() const {
    return {vertices.data(), vertices.empty() ? 0 : vertices.size() - 1};
  }
  VertexId final_vertex() const { return vertices.back(); }

  friend auto operator<=>(const InterestingPath&,
                          const InterestingPath&) = default;
};

// Sum of x over the non-final vertices.
double path_length(std::span<const VertexId> path, const FractionalWeights& x);

// All interesting paths in lexicographic order of their id sequences.
// Throws CapExceeded when more than `cap` exist.
std::vector<InterestingPath> enumerate_interesting_paths(
    const Circuit& circuit, int budget, std::size_t cap = kDefaultPathCap);

// Feasible iff every interesting path has a marked non-final vertex.
bool is_feasible_by_paths(const Circuit& circuit, const MarkSet& marks,
                          int budget, std::size_t cap = kDefaultPathCap);

// Shortest red-to-blue distances through blue intermediates, stored only for
// reachable pairs. A distance counts x of the red source and of every blue
// vertex strictly before the target.
class DeltaTable {
 public:
  struct Entry {
    VertexId target;
    double length;
    VertexId pred;  // previous vertex on the chosen path (source or blue)
  };
  struct Incoming {
    VertexId source;
    double length;
  };

  DeltaTable() = default;
  explicit DeltaTable(std::size_t n) : by_source_(n), by_target_(n) {}

  ExtReal at(VertexId red_source, VertexId blue_target) const;
  std::optional<VertexId> pred(VertexId red_source, VertexId blue_target) const;

  // Sorted by target id.
  std::span<const Entry> from(VertexId red_source) const {
    return by_source_[red_source];
  }
  // Sorted by source id.
  std::span<const Incoming> into(VertexId blue_target) const {
    return by_target_[blue_target];
  }
  std::size_t entry_count() const;

  // Takes ownership of per-source rows and builds the inverse index.
  void assign_rows(std::vector<std::vector<Entry>> by_source);

  friend bool operator==(const DeltaTable& a, const DeltaTable& b);

 private:
  std::vector<std::vector<Entry>> by_source_;
  std::vector<std::vector<Incoming>> by_target_;
};

// f(i, v): minimum length of a path that starts at a red vertex, ends at v and
// contains exactly i red vertices, for i = 1..L+1. Infinite when none exists.
class LevelTables {
 public:
  LevelTables() = default;
  LevelTables(int budget, FractionalWeights weights, DeltaTable delta);

  int budget() const { return budget_; }
  std::size_t size() const { return weights_.size(); }
  const FractionalWeights& weights() const { return weights_; }
  const DeltaTable& delta() const { return delta_; }

  ExtReal f(int level, VertexId v) const {
    return f_[static_cast<std::size_t>(level - 1) * size() + v];
  }
  ExtReal& f(int level, VertexId v) {
    return f_[static_cast<std::size_t>(level - 1) * size() + v];
  }

  friend bool operator==(const LevelTables& a, const LevelTables& b) {
    return a.budget_ == b.budget_ && a.weights_.x == b.weights_.x &&
           a.delta_ == b.delta_ && a.f_ == b.f_;
  }

 private:
  int budget_ = 0;
  FractionalWeights weights_;
  DeltaTable delta_;
  std::vector<ExtReal> f_;
};

// One topological sweep per red source over the blue region it reaches.
// Sources are processed in parallel.
DeltaTable blue_distances(const Circuit& circuit, const FractionalWeights& x);

// Level-phased dynamic program; within a phase the red step and then the blue
// step run in parallel over vertices.
LevelTables level_lengths(const Circuit& circuit, int budget,
                          const FractionalWeights& x);

// Rebuilds a path realising f(level, v) by backtracking; ties go to the lowest
// predecessor id. Requires f(level, v) finite.
std::vector<VertexId> backtrack_path(const LevelTables& tables,
                                     const Circuit& circuit, int level,
                                     VertexId v);

// The interesting path ending at `v` realising f(L+1, v). Requires v red and
// f(L+1, v) finite.
InterestingPath shortest_interesting_path(const LevelTables& tables,
                                          const Circuit& circuit, VertexId v);

// Most violated interesting path (smallest f(L+1, v), lowest v on ties), or
// nothing if every red v has f(L+1, v) >= 1 - tol.
std::optional<InterestingPath> extract_violated_path(
    const LevelTables& tables, const Circuit& circuit, int budget,
    double tol = kViolationTolerance);

// Red vertices with f(L+1, v) < 1 - tol, ascending.
std::vector<VertexId> violated_endpoints(const LevelTables& tables,
                                         const Circuit& circuit,
                                         double tol = kViolationTolerance);

// Straightforward single-threaded versions kept as references for the
// parallel kernels above. They scan every vertex per source / per phase.
namespace serial {

DeltaTable blue_distances(const Circuit& circuit, const FractionalWeights& x);

LevelTables level_lengths(const Circuit& circuit, int budget,
                          const FractionalWeights& x);

}  // namespace serial

}  // namespace noisecut

#endif  // NOISECUT_PATHS_HPP_
