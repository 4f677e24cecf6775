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

#ifndef NOISECUT_TESTS_FIXTURES_HPP_
#define NOISECUT_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/generators.hpp"
#include "noisecut/text_format.hpp"
#include "noisecut/weights.hpp"

namespace noisecut::fixtures {

// w =>(x2) r1 =>(x2) r2 ... =>(x2) rk
inline Circuit chain(std::size_t reds) {
  std::string text = "node w white\n";
  std::string prev = "w";
  for (std::size_t k = 1; k <= reds; ++k) {
    const std::string name = "r" + std::to_string(k);
    text += "node " + name + " red\nedge " + prev + " " + name + " 2\n";
    prev = name;
  }
  return parse_circuit_string(text);
}

// L = 2. The only interesting path is u u1 w1 .. wk v, while the edge (u, v)
// gives a two-red shortcut.
inline Circuit shortcut(std::size_t k) {
  std::string text =
      "node s white\nnode u red\nnode u1 red\nnode v red\n"
      "edge s u 2\nedge u u1\nedge s u1\nedge u v\n";
  std::string prev = "u1";
  for (std::size_t i = 1; i <= k; ++i) {
    const std::string w = "w" + std::to_string(i);
    text += "node " + w + " blue\nedge " + prev + " " + w + "\nedge s " + w + "\n";
    prev = w;
  }
  text += "edge " + prev + " v\n";
  return parse_circuit_string(text);
}

// Same circuit with vertex ids shuffled; names travel with their vertices.
inline Circuit permuted(const Circuit& c, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> to(c.size());
  std::iota(to.begin(), to.end(), 0);
  for (std::size_t i = to.size(); i > 1; --i) {
    std::swap(to[i - 1], to[rng.below(i)]);
  }
  std::vector<Color> colors(c.size());
  std::vector<std::string> names(c.size());
  for (VertexId v = 0; v < c.size(); ++v) {
    colors[to[v]] = c.color(v);
    names[to[v]] = c.name(v);
  }
  std::vector<RawEdge> edges;
  for (const RawEdge& e : c.edges()) {
    edges.push_back({to[e.src], to[e.dst], e.multiplicity});
  }
  return validate(std::move(colors), std::move(edges), std::move(names));
}

// Up to `max_n` vertices, with a random red fraction; ids shuffled half the
// time so that nothing relies on ids being topological.
inline Circuit small_random(std::uint64_t seed, std::size_t max_n) {
  Rng rng(seed);
  const std::size_t n = 2 + rng.below(max_n - 1);
  const double red = 0.3 + 0.6 * rng.uniform();
  Circuit c = random_circuit(n, red, rng);
  return rng.chance(0.5) ? permuted(c, seed ^ 0x9e3779b97f4a7c15ull) : c;
}

// Mix of zeros, ones and arbitrary values in [0, 1].
inline FractionalWeights random_weights(std::size_t n, Rng& rng) {
  FractionalWeights w = FractionalWeights::zeros(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double pick = rng.uniform();
    w.x[v] = pick < 0.2 ? 0.0 : pick < 0.3 ? 1.0 : rng.uniform();
  }
  return w;
}

inline MarkSet random_marks(std::size_t n, Rng& rng, double p) {
  MarkSet s(n);
  for (VertexId v = 0; v < n; ++v) {
    if (rng.chance(p)) s.insert(v);
  }
  return s;
}

inline std::vector<bool> as_flags(const MarkSet& s) {
  std::vector<bool> out(s.universe());
  for (VertexId v : s.members()) out[v] = true;
  return out;
}

inline VertexId id(const Circuit& c, const std::string& name) {
  return *c.find(name);
}

}  // namespace noisecut::fixtures

#endif  // NOISECUT_TESTS_FIXTURES_HPP_
