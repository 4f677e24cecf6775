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

#ifndef NOISECUT_REPORT_HPP_
#define NOISECUT_REPORT_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace noisecut {

struct MethodReport {
  std::string method;
  std::size_t cardinality = 0;
  double wall_seconds = 0.0;
  bool verified_feasible = false;
  std::vector<std::string> marks;  // sorted by name
  std::optional<double> threshold;
};

struct RunReport {
  std::string instance;
  std::size_t vertices = 0;
  std::size_t edges = 0;  // with multiplicity
  int budget = 0;
  std::vector<MethodReport> methods;
  std::optional<double> lp_objective;
  std::optional<std::size_t> lp_rows;
  std::optional<std::size_t> lp_iterations;
  std::optional<std::size_t> exact_optimum;
};

// Aligned human-readable summary.
void write_table(std::ostream& out, const RunReport& report);

// Flat `key=value` lines, one per field; per-method keys are prefixed with
// `method.<name>.`. Marks are comma-separated names.
void write_key_values(std::ostream& out, const RunReport& report);

}  // namespace noisecut

#endif  // NOISECUT_REPORT_HPP_
