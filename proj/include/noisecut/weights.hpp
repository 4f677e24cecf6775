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

#ifndef NOISECUT_WEIGHTS_HPP_
#define NOISECUT_WEIGHTS_HPP_

#include <cstddef>
#include <numeric>
#include <vector>

#include "noisecut/circuit.hpp"

namespace noisecut {

// Fractional bootstrap indicator per vertex, each in [0, 1].
struct FractionalWeights {
  std::vector<double> x;

  FractionalWeights() = default;
  explicit FractionalWeights(std::vector<double> values) : x(std::move(values)) {}
  static FractionalWeights zeros(std::size_t n) {
    return FractionalWeights(std::vector<double>(n, 0.0));
  }
  static FractionalWeights constant(std::size_t n, double value) {
    return FractionalWeights(std::vector<double>(n, value));
  }

  std::size_t size() const { return x.size(); }
  double operator[](VertexId v) const { return x[v]; }
  double sum() const { return std::accumulate(x.begin(), x.end(), 0.0); }
};

// Throws InvalidArgument unless size matches and 0 <= x_v <= 1 + 1e-9.
void require_unit_box(const FractionalWeights& w, std::size_t n);

}  // namespace noisecut

#endif  // NOISECUT_WEIGHTS_HPP_
