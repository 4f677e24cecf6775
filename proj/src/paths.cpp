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

#include "noisecut/paths.hpp"

#include <algorithm>
#include <limits>

#include "noisecut/errors.hpp"

namespace noisecut {

void require_unit_box(const FractionalWeights& w, std::size_t n) {
  if (w.size() != n) {
    throw InvalidArgument("weight vector has " + std::to_string(w.size()) +
                          " entries for " + std::to_string(n) + " vertices");
  }
  for (double v : w.x) {
    if (!(v >= 0.0 && v <= 1.0 + 1e-9)) {
      throw InvalidArgument("weight outside [0,1]: " + std::to_string(v));
    }
  }
}

double path_length(std::span<const VertexId> path, const FractionalWeights& x) {
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) len += x[path[k]];
  return len;
}

namespace {

class PathCollector {
 public:
  PathCollector(const Circuit& c, int budget, std::size_t cap)
      : circuit_(c), target_(budget + 1), cap_(cap) {}

  std::vector<InterestingPath> run() {
    for (VertexId r : circuit_.red_vertices()) {
      stack_.assign(1, r);
      extend(1);
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void extend(int reds) {
    const VertexId tail = stack_.back();
    for (const Arc& a : circuit_.successors(tail)) {
      const VertexId next = a.vertex;
      const int next_reds = reds + (circuit_.is_red(next) ? 1 : 0);
      stack_.push_back(next);
      if (next_reds == target_) {
        // Reached the (L+1)-th red vertex; going further only adds reds.
        if (out_.size() == cap_) throw CapExceeded(cap_);
        out_.push_back(InterestingPath{stack_});
      } else {
        extend(next_reds);
      }
      stack_.pop_back();
    }
  }

  const Circuit& circuit_;
  int target_;
  std::size_t cap_;
  std::vector<VertexId> stack_;
  std::vector<InterestingPath> out_;
};

}  // namespace

std::vector<InterestingPath> enumerate_interesting_paths(const Circuit& circuit,
                                                         int budget,
                                                         std::size_t cap) {
  require_budget(budget);
  return PathCollector(circuit, budget, cap).run();
}

bool is_feasible_by_paths(const Circuit& circuit, const MarkSet& marks,
                          int budget, std::size_t cap) {
  for (const InterestingPath& p :
       enumerate_interesting_paths(circuit, budget, cap)) {
    const auto nf = p.non_final();
    if (std::none_of(nf.begin(), nf.end(),
                     [&](VertexId v) { return marks.contains(v); })) {
      return false;
    }
  }
  return true;
}

ExtReal DeltaTable::at(VertexId red_source, VertexId blue_target) const {
  const auto& row = by_source_[red_source];
  auto it = std::lower_bound(
      row.begin(), row.end(), blue_target,
      [](const Entry& e, VertexId t) { return e.target < t; });
  if (it == row.end() || it->target != blue_target) return ExtReal::infinity();
  return ExtReal(it->length);
}

std::optional<VertexId> DeltaTable::pred(VertexId red_source,
                                         VertexId blue_target) const {
  const auto& row = by_source_[red_source];
  auto it = std::lower_bound(
      row.begin(), row.end(), blue_target,
      [](const Entry& e, VertexId t) { return e.target < t; });
  if (it == row.end() || it->target != blue_target) return std::nullopt;
  return it->pred;
}

std::size_t DeltaTable::entry_count() const {
  std::size_t total = 0;
  for (const auto& row : by_source_) total += row.size();
  return total;
}

void DeltaTable::assign_rows(std::vector<std::vector<Entry>> by_source) {
  by_source_ = std::move(by_source);
  by_target_.assign(by_source_.size(), {});
  // Sources visited in ascending order keep every incoming list sorted.
  for (VertexId u = 0; u < by_source_.size(); ++u) {
    for (const Entry& e : by_source_[u]) {
      by_target_[e.target].push_back({u, e.length});
    }
  }
}

bool operator==(const DeltaTable& a, const DeltaTable& b) {
  if (a.by_source_.size() != b.by_source_.size()) return false;
  for (std::size_t u = 0; u < a.by_source_.size(); ++u) {
    const auto& ra = a.by_source_[u];
    const auto& rb = b.by_source_[u];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].target != rb[k].target || ra[k].length != rb[k].length ||
          ra[k].pred != rb[k].pred) {
        return false;
      }
    }
  }
  return true;
}

LevelTables::LevelTables(int budget, FractionalWeights weights,
                         DeltaTable delta)
    : budget_(budget),
      weights_(std::move(weights)),
      delta_(std::move(delta)),
      f_(static_cast<std::size_t>(budget + 1) * weights_.size(),
         ExtReal::infinity()) {}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relaxation shared by both δ implementations: the better (shorter, then
// lower predecessor id) candidate wins.
inline void relax(std::vector<double>& dist, std::vector<VertexId>& pred,
                  VertexId target, double cand, VertexId via) {
  if (cand < dist[target] || (cand == dist[target] && via < pred[target])) {
    dist[target] = cand;
    pred[target] = via;
  }
}

// Per-thread scratch for the pruned sweep; reset through the touched list.
struct SweepScratch {
  std::vector<double> dist;
  std::vector<VertexId> pred;
  std::vector<char> seen;
  std::vector<VertexId> touched;
  std::vector<VertexId> stack;

  explicit SweepScratch(std::size_t n)
      : dist(n, kInf), pred(n, 0), seen(n, 0) {}
};

std::vector<DeltaTable::Entry> sweep_from(const Circuit& circuit,
                                          const FractionalWeights& x,
                                          VertexId u, SweepScratch& s) {
  // Blue region reachable from u through blue vertices only.
  s.touched.clear();
  s.stack.clear();
  for (const Arc& a : circuit.successors(u)) {
    if (circuit.is_blue(a.vertex) && !s.seen[a.vertex]) {
      s.seen[a.vertex] = 1;
      s.stack.push_back(a.vertex);
    }
  }
  while (!s.stack.empty()) {
    const VertexId b = s.stack.back();
    s.stack.pop_back();
    s.touched.push_back(b);
    for (const Arc& a : circuit.successors(b)) {
      if (circuit.is_blue(a.vertex) && !s.seen[a.vertex]) {
        s.seen[a.vertex] = 1;
        s.stack.push_back(a.vertex);
      }
    }
  }
  std::sort(s.touched.begin(), s.touched.end(), [&](VertexId a, VertexId b) {
    return circuit.topological_position(a) < circuit.topological_position(b);
  });

  for (const Arc& a : circuit.successors(u)) {
    if (circuit.is_blue(a.vertex)) relax(s.dist, s.pred, a.vertex, x[u], u);
  }
  for (VertexId b : s.touched) {
    const double through = s.dist[b] + x[b];
    for (const Arc& a : circuit.successors(b)) {
      if (circuit.is_blue(a.vertex)) relax(s.dist, s.pred, a.vertex, through, b);
    }
  }

  std::vector<DeltaTable::Entry> row;
  row.reserve(s.touched.size());
  for (VertexId b : s.touched) row.push_back({b, s.dist[b], s.pred[b]});
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.target < b.target; });
  for (VertexId b : s.touched) {
    s.dist[b] = kInf;
    s.seen[b] = 0;
  }
  return row;
}

}  // namespace

DeltaTable blue_distances(const Circuit& circuit, const FractionalWeights& x) {
  require_unit_box(x, circuit.size());
  const std::size_t n = circuit.size();
  const auto reds = circuit.red_vertices();
  std::vector<std::vector<DeltaTable::Entry>> rows(n);

#pragma omp parallel
  {
    SweepScratch scratch(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(reds.size());
         ++k) {
      const VertexId u = reds[k];
      rows[u] = sweep_from(circuit, x, u, scratch);
    }
  }

  DeltaTable table(n);
  table.assign_rows(std::move(rows));
  return table;
}

LevelTables level_lengths(const Circuit& circuit, int budget,
                          const FractionalWeights& x) {
  require_budget(budget);
  LevelTables t(budget, x, blue_distances(circuit, x));
  const auto reds = circuit.red_vertices();
  const auto blues = circuit.blue_vertices();
  const auto nreds = static_cast<std::ptrdiff_t>(reds.size());
  const auto nblues = static_cast<std::ptrdiff_t>(blues.size());

  for (int i = 1; i <= budget + 1; ++i) {
    // Red step: one more red vertex after any (u, i-1) path.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < nreds; ++k) {
      const VertexId v = reds[k];
      if (i == 1) {
        t.f(1, v) = ExtReal(0.0);
        continue;
      }
      ExtReal best = ExtReal::infinity();
      for (const Arc& a : circuit.predecessors(v)) {
        best = min(best, t.f(i - 1, a.vertex) + x[a.vertex]);
      }
      t.f(i, v) = best;
    }
    // Blue step: the last red vertex u, then a blue chain to v.
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < nblues; ++k) {
      const VertexId v = blues[k];
      ExtReal best = ExtReal::infinity();
      for (const auto& in : t.delta().into(v)) {
        best = min(best, t.f(i, in.source) + in.length);
      }
      t.f(i, v) = best;
    }
  }
  return t;
}

std::vector<VertexId> backtrack_path(const LevelTables& tables,
                                     const Circuit& circuit, int level,
                                     VertexId v) {
  if (tables.f(level, v).is_infinite()) {
    throw InvalidArgument("no path realises an infinite level length");
  }
  const FractionalWeights& x = tables.weights();
  std::vector<VertexId> rev;
  VertexId cur = v;
  int i = level;
  while (true) {
    if (circuit.is_red(cur)) {
      rev.push_back(cur);
      if (i == 1) break;
      std::optional<VertexId> best;
      ExtReal best_len = ExtReal::infinity();
      for (const Arc& a : circuit.predecessors(cur)) {
        const ExtReal cand = tables.f(i - 1, a.vertex) + x[a.vertex];
        if (cand < best_len) {
          best_len = cand;
          best = a.vertex;
        }
      }
      cur = *best;
      --i;
    } else {
      // Blue: pick the red source, then walk its chain back.
      std::optional<VertexId> best;
      ExtReal best_len = ExtReal::infinity();
      for (const auto& in : tables.delta().into(cur)) {
        const ExtReal cand = tables.f(i, in.source) + in.length;
        if (cand < best_len) {
          best_len = cand;
          best = in.source;
        }
      }
      const VertexId src = *best;
      VertexId w = cur;
      while (w != src) {
        rev.push_back(w);
        w = *tables.delta().pred(src, w);
      }
      cur = src;
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

InterestingPath shortest_interesting_path(const LevelTables& tables,
                                          const Circuit& circuit, VertexId v) {
  if (!circuit.is_red(v)) {
    throw InvalidArgument("interesting paths end at red vertices");
  }
  return InterestingPath{backtrack_path(tables, circuit, tables.budget() + 1, v)};
}

std::vector<VertexId> violated_endpoints(const LevelTables& tables,
                                         const Circuit& circuit, double tol) {
  std::vector<VertexId> out;
  const int top = tables.budget() + 1;
  for (VertexId v : circuit.red_vertices()) {
    if (tables.f(top, v) < 1.0 - tol) out.push_back(v);
  }
  return out;
}

std::optional<InterestingPath> extract_violated_path(const LevelTables& tables,
                                                     const Circuit& circuit,
                                                     int budget, double tol) {
  require_budget(budget);
  if (budget != tables.budget()) {
    throw InvalidArgument("tables were computed for a different budget");
  }
  std::optional<VertexId> worst;
  ExtReal worst_len = ExtReal::infinity();
  for (VertexId v : violated_endpoints(tables, circuit, tol)) {
    if (tables.f(budget + 1, v) < worst_len) {
      worst_len = tables.f(budget + 1, v);
      worst = v;
    }
  }
  if (!worst) return std::nullopt;
  return shortest_interesting_path(tables, circuit, *worst);
}

namespace serial {

DeltaTable blue_distances(const Circuit& circuit, const FractionalWeights& x) {
  require_unit_box(x, circuit.size());
  const std::size_t n = circuit.size();
  std::vector<std::vector<DeltaTable::Entry>> rows(n);
  std::vector<double> dist(n);
  std::vector<VertexId> pred(n);
  for (VertexId u : circuit.red_vertices()) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(pred.begin(), pred.end(), 0);
    for (VertexId w : circuit.topological_order()) {
      double through;
      if (w == u) {
        through = x[u];
      } else if (circuit.is_blue(w) && dist[w] < kInf) {
        through = dist[w] + x[w];
      } else {
        continue;
      }
      for (const Arc& a : circuit.successors(w)) {
        if (circuit.is_blue(a.vertex)) relax(dist, pred, a.vertex, through, w);
      }
    }
    for (VertexId b = 0; b < n; ++b) {
      if (dist[b] < kInf) rows[u].push_back({b, dist[b], pred[b]});
    }
  }
  DeltaTable table(n);
  table.assign_rows(std::move(rows));
  return table;
}

LevelTables level_lengths(const Circuit& circuit, int budget,
                          const FractionalWeights& x) {
  require_budget(budget);
  LevelTables t(budget, x, serial::blue_distances(circuit, x));
  for (int i = 1; i <= budget + 1; ++i) {
    for (VertexId v : circuit.topological_order()) {
      ExtReal best = ExtReal::infinity();
      if (circuit.is_red(v)) {
        if (i == 1) {
          best = ExtReal(0.0);
        } else {
          for (const Arc& a : circuit.predecessors(v)) {
            best = min(best, t.f(i - 1, a.vertex) + x[a.vertex]);
          }
        }
      } else if (circuit.is_blue(v)) {
        for (VertexId u : circuit.red_vertices()) {
          best = min(best, t.f(i, u) + t.delta().at(u, v));
        }
      }
      t.f(i, v) = best;
    }
  }
  return t;
}

}  // namespace serial

}  // namespace noisecut
