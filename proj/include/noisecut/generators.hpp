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

#ifndef NOISECUT_GENERATORS_HPP_
#define NOISECUT_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "noisecut/circuit.hpp"
#include "noisecut/dvd.hpp"

namespace noisecut {

// Seeded generator with platform-independent draws (the standard
// distributions are implementation-defined; mt19937_64 itself is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(engine_()) * n) >> 64);
  }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// One white input feeding k red gates in a line (double edges).
Circuit red_chain(std::size_t length);

struct LayeredParams {
  std::size_t width = 10;
  std::size_t depth = 10;  // layer 0 is the white inputs
  double red_fraction = 0.3;
  std::uint64_t seed = 1;
};

// Every gate draws both inputs from the previous layer; a repeated draw
// becomes a double edge.
Circuit layered(const LayeredParams& params);

struct SeriesParallelParams {
  std::size_t gates = 20;
  double red_fraction = 0.3;
  std::uint64_t seed = 1;
};

// Two-terminal series-parallel circuit on one white source: blocks are either
// a single gate, two blocks in series, or two blocks fed by the same input
// and joined by a gate.
Circuit series_parallel(const SeriesParallelParams& params);

// Small arbitrary circuit: 1..max(1, n/4) white inputs, every gate takes two
// inputs drawn uniformly from earlier vertices.
Circuit random_circuit(std::size_t n, double red_fraction, Rng& rng);

// Random DAG on ids 0..n-1 with edges i -> j (i < j) kept with probability p.
DvdInstance random_dvd(std::size_t n, double edge_probability, int budget,
                       Rng& rng);

}  // namespace noisecut

#endif  // NOISECUT_GENERATORS_HPP_
