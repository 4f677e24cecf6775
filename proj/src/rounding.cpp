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

#include "noisecut/rounding.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

void require_matching(const LevelTables& tables, int budget) {
  require_budget(budget);
  if (tables.budget() != budget) {
    throw InvalidArgument("tables were computed for a different budget");
  }
}

// Interval of level i at vertex v with the membership slack applied. Both
// round_at and the sweep use exactly these endpoints.
struct Window {
  double lo;
  double hi;
};

inline Window window(const LevelTables& tables, int i, VertexId v) {
  const double f = tables.f(i, v).value();
  return {f - kIntervalTolerance, f + tables.weights()[v] + kIntervalTolerance};
}

}  // namespace

MarkSet round_at(const LevelTables& tables, int budget, double t) {
  require_matching(tables, budget);
  MarkSet marks(tables.size());
  for (VertexId v = 0; v < tables.size(); ++v) {
    for (int i = 1; i <= budget; ++i) {
      if (tables.f(i, v).is_infinite()) continue;
      const Window w = window(tables, i, v);
      if (w.lo <= t && t <= w.hi) {
        marks.insert(v);
        break;
      }
    }
  }
  return marks;
}

std::vector<double> breakpoints(const LevelTables& tables, int budget) {
  require_matching(tables, budget);
  std::vector<double> out{0.0, 1.0};
  for (VertexId v = 0; v < tables.size(); ++v) {
    for (int i = 1; i <= budget; ++i) {
      const ExtReal f = tables.f(i, v);
      if (f.is_infinite()) continue;
      out.push_back(std::clamp(f.value(), 0.0, 1.0));
      out.push_back(std::clamp(f.value() + tables.weights()[v], 0.0, 1.0));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> candidate_thresholds(const LevelTables& tables,
                                         int budget) {
  const std::vector<double> bp = breakpoints(tables, budget);
  std::vector<double> out;
  out.reserve(2 * bp.size());
  for (std::size_t k = 0; k < bp.size(); ++k) {
    out.push_back(bp[k]);
    if (k + 1 < bp.size()) out.push_back(bp[k] + (bp[k + 1] - bp[k]) / 2);
  }
  return out;
}

RoundingOutcome derandomized_round(const Circuit& circuit, int budget,
                                   const LevelTables& tables) {
  const std::vector<double> cands = candidate_thresholds(tables, budget);

  // count[k] = number of vertices round_at(cands[k]) would mark. Per vertex
  // the windows are merged first so each vertex counts once.
  std::vector<std::ptrdiff_t> diff(cands.size() + 1, 0);
  std::vector<Window> ws;
  for (VertexId v = 0; v < tables.size(); ++v) {
    ws.clear();
    for (int i = 1; i <= budget; ++i) {
      if (tables.f(i, v).is_finite()) ws.push_back(window(tables, i, v));
    }
    if (ws.empty()) continue;
    std::sort(ws.begin(), ws.end(),
              [](const Window& a, const Window& b) { return a.lo < b.lo; });
    // Index ranges of candidates inside each window, merged.
    std::size_t run_lo = 0, run_hi = 0;
    bool open = false;
    for (const Window& w : ws) {
      const auto lo = static_cast<std::size_t>(
          std::lower_bound(cands.begin(), cands.end(), w.lo) - cands.begin());
      const auto hi = static_cast<std::size_t>(
          std::upper_bound(cands.begin(), cands.end(), w.hi) - cands.begin());
      if (lo >= hi) continue;
      if (open && lo <= run_hi) {
        run_hi = std::max(run_hi, hi);
      } else {
        if (open) {
          ++diff[run_lo];
          --diff[run_hi];
        }
        run_lo = lo;
        run_hi = hi;
        open = true;
      }
    }
    if (open) {
      ++diff[run_lo];
      --diff[run_hi];
    }
  }
  std::vector<std::size_t> count(cands.size());
  std::ptrdiff_t running = 0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    running += diff[k];
    count[k] = static_cast<std::size_t>(running);
  }

  std::vector<std::size_t> order(cands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return count[a] < count[b];
                   });

  RoundingOutcome out;
  out.candidates = cands.size();
  for (std::size_t k : order) {
    MarkSet marks = round_at(tables, budget, cands[k]);
    ++out.verified;
    if (is_feasible_by_levels(circuit, marks, budget)) {
      out.cardinality = marks.size();
      out.marks = std::move(marks);
      out.t_used = cands[k];
      return out;
    }
  }
  throw NoFeasibleCandidate("no candidate threshold yields a feasible set");
}

double draw_threshold(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

RoundingOutcome randomized_round(const Circuit& circuit, int budget,
                                 const LevelTables& tables,
                                 std::uint64_t seed) {
  const double t = draw_threshold(seed);
  MarkSet marks = round_at(tables, budget, t);
  if (!is_feasible_by_levels(circuit, marks, budget)) {
    throw NoFeasibleCandidate("randomized threshold produced an infeasible set");
  }
  RoundingOutcome out;
  out.cardinality = marks.size();
  out.marks = std::move(marks);
  out.t_used = t;
  out.candidates = 1;
  out.verified = 1;
  return out;
}

namespace serial {

RoundingOutcome derandomized_round(const Circuit& circuit, int budget,
                                   const LevelTables& tables) {
  const std::vector<double> cands = candidate_thresholds(tables, budget);
  RoundingOutcome best;
  bool found = false;
  for (double t : cands) {
    MarkSet marks = round_at(tables, budget, t);
    ++best.verified;
    if (!is_feasible_by_levels(circuit, marks, budget)) continue;
    if (!found || marks.size() < best.cardinality) {
      best.cardinality = marks.size();
      best.marks = std::move(marks);
      best.t_used = t;
      found = true;
    }
  }
  if (!found) {
    throw NoFeasibleCandidate("no candidate threshold yields a feasible set");
  }
  best.candidates = cands.size();
  return best;
}

}  // namespace serial

}  // namespace noisecut
