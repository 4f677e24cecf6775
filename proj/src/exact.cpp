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

#include "noisecut/exact.hpp"

#include <algorithm>
#include <limits>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

std::size_t binomial_saturating(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  const std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::size_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

// Advances `idx` (strictly increasing indices into [0, n)) to the next
// k-combination in lexicographic order. False when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

// Shared size-ordered search over subsets of `pool`.
template <typename Feasible>
std::optional<ExactResult> search(const std::vector<VertexId>& pool,
                                  const ExactOptions& options,
                                  Feasible&& feasible) {
  const std::size_t n = pool.size();
  const std::size_t top = std::min(n, options.max_size.value_or(n));
  ExactResult result;
  std::vector<VertexId> subset;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t level = binomial_saturating(n, k);
    if (level > options.max_subsets ||
        result.explored > options.max_subsets - level) {
      throw TooLarge("exact search would examine more than " +
                     std::to_string(options.max_subsets) + " subsets");
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t q = 0; q < k; ++q) idx[q] = q;
    do {
      ++result.explored;
      subset.clear();
      for (std::size_t q : idx) subset.push_back(pool[q]);
      if (feasible(subset)) {
        result.optimum = k;
        result.witness = subset;
        return result;
      }
    } while (k > 0 && next_combination(idx, n));
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExactResult> exact_bootstrap(const Circuit& circuit, int budget,
                                           const ExactOptions& options) {
  require_budget(budget);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < circuit.size(); ++v) {
    if (!circuit.is_white(v)) pool.push_back(v);
  }
  return search(pool, options, [&](const std::vector<VertexId>& s) {
    return is_feasible_by_levels(circuit, MarkSet(circuit.size(), s), budget);
  });
}

std::size_t longest_surviving_path(const DvdInstance& h,
                                   std::span<const VertexId> deleted) {
  std::vector<char> gone(h.size(), 0);
  for (VertexId v : deleted) {
    if (v >= h.size()) throw UnknownVertex(v);
    gone[v] = 1;
  }
  std::vector<std::size_t> len(h.size(), 0);
  std::size_t best = 0;
  for (VertexId v : h.topological_order()) {
    if (gone[v]) continue;
    std::size_t in = 0;
    for (VertexId u : h.predecessors(v)) in = std::max(in, len[u]);
    len[v] = in + 1;
    best = std::max(best, len[v]);
  }
  return best;
}

bool dvd_is_feasible(const DvdInstance& h, std::span<const VertexId> deleted) {
  return longest_surviving_path(h, deleted) + 1 <=
         static_cast<std::size_t>(h.budget());
}

std::optional<ExactResult> exact_dvd(const DvdInstance& h,
                                     const ExactOptions& options) {
  std::vector<VertexId> pool(h.size());
  for (VertexId v = 0; v < h.size(); ++v) pool[v] = v;
  return search(pool, options, [&](const std::vector<VertexId>& s) {
    return dvd_is_feasible(h, s);
  });
}

}  // namespace noisecut
