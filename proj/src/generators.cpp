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

#include "noisecut/generators.hpp"

#include <functional>
#include <string>
#include <vector>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

class Builder {
 public:
  VertexId add(Color c) {
    colors_.push_back(c);
    return static_cast<VertexId>(colors_.size() - 1);
  }
  VertexId gate(Color c, VertexId a, VertexId b) {
    const VertexId v = add(c);
    if (a == b) {
      edges_.push_back({a, v, 2});
    } else {
      edges_.push_back({a, v, 1});
      edges_.push_back({b, v, 1});
    }
    return v;
  }
  Circuit build() { return validate(std::move(colors_), std::move(edges_)); }

 private:
  std::vector<Color> colors_;
  std::vector<RawEdge> edges_;
};

Color gate_color(Rng& rng, double red_fraction) {
  return rng.chance(red_fraction) ? Color::kRed : Color::kBlue;
}

void require_fraction(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("fraction must lie in [0, 1]");
  }
}

}  // namespace

Circuit red_chain(std::size_t length) {
  Builder b;
  VertexId prev = b.add(Color::kWhite);
  for (std::size_t k = 0; k < length; ++k) {
    prev = b.gate(Color::kRed, prev, prev);
  }
  return b.build();
}

Circuit layered(const LayeredParams& p) {
  require_fraction(p.red_fraction);
  if (p.width == 0 || p.depth == 0) {
    throw InvalidArgument("layered circuit needs positive width and depth");
  }
  Rng rng(p.seed);
  Builder b;
  std::vector<VertexId> prev, cur;
  for (std::size_t k = 0; k < p.width; ++k) prev.push_back(b.add(Color::kWhite));
  for (std::size_t layer = 1; layer < p.depth; ++layer) {
    cur.clear();
    for (std::size_t k = 0; k < p.width; ++k) {
      const VertexId a = prev[rng.below(prev.size())];
      const VertexId c = prev[rng.below(prev.size())];
      cur.push_back(b.gate(gate_color(rng, p.red_fraction), a, c));
    }
    prev.swap(cur);
  }
  return b.build();
}

Circuit series_parallel(const SeriesParallelParams& p) {
  require_fraction(p.red_fraction);
  Rng rng(p.seed);
  Builder b;
  const VertexId source = b.add(Color::kWhite);
  // Returns the output vertex of a block with `k` gates fed by `input`.
  std::function<VertexId(std::size_t, VertexId)> block =
      [&](std::size_t k, VertexId input) -> VertexId {
    if (k == 1) return b.gate(gate_color(rng, p.red_fraction), input, input);
    if (k >= 3 && rng.chance(0.5)) {
      const std::size_t left = 1 + rng.below(k - 2);
      const VertexId x = block(left, input);
      const VertexId y = block(k - 1 - left, input);
      return b.gate(gate_color(rng, p.red_fraction), x, y);
    }
    const std::size_t first = 1 + rng.below(k - 1);
    return block(k - first, block(first, input));
  };
  if (p.gates > 0) block(p.gates, source);
  return b.build();
}

Circuit random_circuit(std::size_t n, double red_fraction, Rng& rng) {
  require_fraction(red_fraction);
  if (n == 0) throw InvalidArgument("random circuit needs at least one vertex");
  Builder b;
  const std::size_t whites = 1 + rng.below(std::max<std::size_t>(1, n / 4));
  for (std::size_t k = 0; k < whites; ++k) b.add(Color::kWhite);
  for (std::size_t k = whites; k < n; ++k) {
    const auto a = static_cast<VertexId>(rng.below(k));
    const auto c = static_cast<VertexId>(rng.below(k));
    b.gate(gate_color(rng, red_fraction), a, c);
  }
  return b.build();
}

DvdInstance random_dvd(std::size_t n, double edge_probability, int budget,
                       Rng& rng) {
  require_fraction(edge_probability);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng.chance(edge_probability)) edges.emplace_back(i, j);
    }
  }
  return make_dvd_instance(n, std::move(edges), budget);
}

}  // namespace noisecut
