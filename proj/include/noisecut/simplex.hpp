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

#ifndef NOISECUT_SIMPLEX_HPP_
#define NOISECUT_SIMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "noisecut/circuit.hpp"
#include "noisecut/weights.hpp"

namespace noisecut {

enum class PricingRule {
  // Lowest-index infeasible row, lowest-index column among ratio ties.
  kBland,
  // Most infeasible row, largest pivot among ratio ties; falls back to Bland
  // after a run of degenerate pivots and returns on the next improving step.
  kDantzig,
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::kDantzig;
  // Tableau entries below this magnitude are skipped by the ratio test.
  double drop_tolerance = 1e-9;
  // A selected pivot smaller than this aborts with NumericalFailure.
  double pivot_tolerance = 1e-12;
  // Basic values may sit this far outside their bounds.
  double feasibility_tolerance = 1e-9;
  std::size_t degenerate_run_before_bland = 50;
  // Per solve() call; 0 selects 50 * (rows + columns) + 1000.
  std::size_t max_pivots = 0;
};

// min sum(x) s.t. sum_{v in row} x_v >= 1 for every row, 0 <= x <= 1.
//
// Bounded-variable dual simplex on a condensed tableau (one row per basic
// variable, one column per nonbasic variable). Starts from x = 0, which is
// dual feasible, and stays dual feasible when rows are appended, so each
// solve() continues from the previous optimal basis.
class CoveringMaster {
 public:
  explicit CoveringMaster(std::size_t variable_count,
                          const SimplexOptions& options = {});

  // Returns an id for the row; ids count up from 0.
  std::size_t add_row(std::span<const VertexId> row);

  // Returns the number of pivots taken.
  std::size_t solve();

  // Removes rows whose surplus is basic and above `threshold`. Such rows are
  // not binding and their removal leaves the current basis optimal. Returns
  // the ids of the removed rows.
  std::vector<std::size_t> drop_slack_rows(double threshold);

  // Clipped to [0, 1].
  FractionalWeights weights() const;
  std::size_t active_rows() const { return basic_.size(); }
  std::size_t total_pivots() const { return total_pivots_; }

 private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  // Variable ids: vertex v is v, the surplus of row r is variable_count + r.
  bool is_structural(std::uint64_t var) const { return var < n_; }
  double upper(std::uint64_t var) const;
  void add_column(VertexId v);
  void pivot(std::size_t r, std::size_t c);

  std::size_t n_;
  SimplexOptions options_;
  std::size_t next_row_id_ = 0;

  std::vector<std::vector<double>> tableau_;  // basic rows x nonbasic columns
  std::vector<std::uint64_t> basic_;          // var per tableau row
  std::vector<double> beta_;                  // basic values
  std::vector<std::uint64_t> nonbasic_;       // var per tableau column
  std::vector<bool> at_upper_;                // per column
  std::vector<double> reduced_;               // per column

  // Per vertex: column or row index, or kNone when it has not appeared yet.
  std::vector<std::uint64_t> column_of_;
  std::vector<std::uint64_t> row_of_;
  std::size_t total_pivots_ = 0;
};

struct MasterSolution {
  FractionalWeights weights;
  double objective = 0.0;
  std::size_t pivots = 0;
};

// One-shot solve of the covering LP over `rows`. Rows left a hair below 1 by
// rounding are lifted by scaling; a violation above 1e-6 is a
// NumericalFailure.
MasterSolution solve_restricted_master(
    std::size_t variable_count, std::span<const std::vector<VertexId>> rows,
    const SimplexOptions& options = {});

// Scales x so that every row sums to at least 1. Throws NumericalFailure if
// some row is short by more than 1e-6.
void lift_rows(FractionalWeights& x,
               std::span<const std::vector<VertexId>> rows);

}  // namespace noisecut

#endif  // NOISECUT_SIMPLEX_HPP_
