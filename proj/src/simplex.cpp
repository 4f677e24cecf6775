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

#include "noisecut/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

CoveringMaster::CoveringMaster(std::size_t variable_count,
                               const SimplexOptions& options)
    : n_(variable_count),
      options_(options),
      column_of_(variable_count, kNone),
      row_of_(variable_count, kNone) {}

double CoveringMaster::upper(std::uint64_t var) const {
  return is_structural(var) ? 1.0 : kInf;
}

void CoveringMaster::add_column(VertexId v) {
  // Existing rows are combinations of rows that do not mention v.
  column_of_[v] = nonbasic_.size();
  nonbasic_.push_back(v);
  at_upper_.push_back(false);
  reduced_.push_back(1.0);
  for (auto& row : tableau_) row.push_back(0.0);
}

std::size_t CoveringMaster::add_row(std::span<const VertexId> row) {
  if (row.empty()) throw InvalidArgument("covering row without variables");
  std::vector<VertexId> vars(row.begin(), row.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (VertexId v : vars) {
    if (v >= n_) throw UnknownVertex(v);
    if (column_of_[v] == kNone && row_of_[v] == kNone) add_column(v);
  }

  // surplus = sum(x) - 1, written over the current nonbasic columns.
  std::vector<double> coef(nonbasic_.size(), 0.0);
  double value = -1.0;
  for (VertexId v : vars) {
    if (row_of_[v] != kNone) {
      const std::vector<double>& src = tableau_[row_of_[v]];
      for (std::size_t j = 0; j < coef.size(); ++j) coef[j] += src[j];
      value += beta_[row_of_[v]];
    } else {
      coef[column_of_[v]] -= 1.0;
      value += at_upper_[column_of_[v]] ? 1.0 : 0.0;
    }
  }
  const std::size_t id = next_row_id_++;
  tableau_.push_back(std::move(coef));
  basic_.push_back(n_ + id);
  beta_.push_back(value);
  return id;
}

void CoveringMaster::pivot(std::size_t r, std::size_t c) {
  std::vector<double>& prow = tableau_[r];
  const double piv = prow[c];
  if (std::abs(piv) < options_.pivot_tolerance) {
    throw NumericalFailure("pivot magnitude below tolerance");
  }
  // q = prow / piv, except q[c] = 1 / piv; row i becomes row_i - row_i[c] q
  // once row_i[c] has been zeroed.
  const double inv = 1.0 / piv;
  for (double& a : prow) a *= inv;
  prow[c] = inv;

  const auto rows = static_cast<std::ptrdiff_t>(tableau_.size());
  const std::size_t width = prow.size();
  const double* q = prow.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    if (static_cast<std::size_t>(i) == r) continue;
    double* row = tableau_[static_cast<std::size_t>(i)].data();
    const double f = row[c];
    if (f == 0.0) continue;
    row[c] = 0.0;
    for (std::size_t j = 0; j < width; ++j) row[j] -= f * q[j];
  }
  const double f = reduced_[c];
  if (f != 0.0) {
    reduced_[c] = 0.0;
    for (std::size_t j = 0; j < width; ++j) reduced_[j] -= f * q[j];
  }
}

std::size_t CoveringMaster::solve() {
  const std::size_t limit =
      options_.max_pivots
          ? options_.max_pivots
          : 50 * (basic_.size() + nonbasic_.size()) + 1000;
  const double tol = options_.feasibility_tolerance;
  std::size_t pivots = 0;
  std::size_t degenerate_run = 0;

  while (true) {
    const bool bland = options_.pricing == PricingRule::kBland ||
                       degenerate_run >= options_.degenerate_run_before_bland;

    // Leaving row: a basic value outside its bounds.
    std::size_t r = basic_.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      const double excess = std::max(-beta_[i], beta_[i] - upper(basic_[i]));
      if (excess <= tol) continue;
      if (bland) {
        if (r == basic_.size() || basic_[i] < basic_[r]) r = i;
      } else if (excess > worst) {
        worst = excess;
        r = i;
      }
    }
    if (r == basic_.size()) break;
    if (pivots == limit) {
      throw NumericalFailure("dual simplex exceeded its pivot limit");
    }

    const bool to_lower = beta_[r] < 0.0;
    const double bound = to_lower ? 0.0 : upper(basic_[r]);
    const std::vector<double>& row = tableau_[r];

    // Entering column: keeps every reduced cost on its side of zero.
    std::size_t c = nonbasic_.size();
    double best_ratio = kInf;
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      const double a = row[j];
      if (std::abs(a) <= options_.drop_tolerance) continue;
      // Moving up from the lower bound or down from the upper bound must
      // push the basic variable toward `bound`.
      const bool up = !at_upper_[j];
      const bool helps = (to_lower == up) ? a < 0.0 : a > 0.0;
      if (!helps) continue;
      const double ratio = std::abs(reduced_[j]) / std::abs(a);
      bool take = false;
      if (ratio < best_ratio - 1e-12) {
        take = true;
      } else if (ratio <= best_ratio + 1e-12) {
        take = bland ? nonbasic_[j] < nonbasic_[c]
                     : std::abs(a) > std::abs(row[c]);
      }
      if (take) {
        best_ratio = std::min(best_ratio, ratio);
        c = j;
      }
    }
    if (c == nonbasic_.size()) {
      throw NumericalFailure("covering LP reported infeasible");
    }
    degenerate_run = best_ratio < 1e-12 ? degenerate_run + 1 : 0;

    // Primal step: the leaving variable lands on `bound`.
    const double step = (beta_[r] - bound) / row[c];
    const double entering =
        (at_upper_[c] ? 1.0 : 0.0) + step;
    for (std::size_t i = 0; i < basic_.size(); ++i) {
      beta_[i] -= tableau_[i][c] * step;
    }

    const std::uint64_t in = nonbasic_[c];
    const std::uint64_t out = basic_[r];
    pivot(r, c);
    basic_[r] = in;
    beta_[r] = entering;
    nonbasic_[c] = out;
    at_upper_[c] = !to_lower;
    if (is_structural(in)) {
      column_of_[in] = kNone;
      row_of_[in] = r;
    }
    if (is_structural(out)) {
      row_of_[out] = kNone;
      column_of_[out] = c;
    }
    ++pivots;
  }
  total_pivots_ += pivots;
  return pivots;
}

std::vector<std::size_t> CoveringMaster::drop_slack_rows(double threshold) {
  std::vector<std::size_t> dropped;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    if (!is_structural(basic_[i]) && beta_[i] > threshold) {
      dropped.push_back(basic_[i] - n_);
      continue;
    }
    if (keep != i) {
      tableau_[keep] = std::move(tableau_[i]);
      basic_[keep] = basic_[i];
      beta_[keep] = beta_[i];
    }
    if (is_structural(basic_[keep])) row_of_[basic_[keep]] = keep;
    ++keep;
  }
  tableau_.resize(keep);
  basic_.resize(keep);
  beta_.resize(keep);
  std::sort(dropped.begin(), dropped.end());
  return dropped;
}

FractionalWeights CoveringMaster::weights() const {
  FractionalWeights w = FractionalWeights::zeros(n_);
  for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
    if (is_structural(nonbasic_[j]) && at_upper_[j]) w.x[nonbasic_[j]] = 1.0;
  }
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    if (is_structural(basic_[i])) {
      w.x[basic_[i]] = std::clamp(beta_[i], 0.0, 1.0);
    }
  }
  return w;
}

void lift_rows(FractionalWeights& x,
               std::span<const std::vector<VertexId>> rows) {
  double worst = 1.0;
  for (const auto& row : rows) {
    double lhs = 0.0;
    for (VertexId v : row) lhs += x[v];
    worst = std::min(worst, lhs);
  }
  if (worst < 1.0 - 1e-6) {
    throw NumericalFailure("master solution violates a covering row by " +
                           std::to_string(1.0 - worst));
  }
  if (worst < 1.0) {
    for (double& v : x.x) v = std::min(1.0, v / worst);
  }
}

MasterSolution solve_restricted_master(
    std::size_t variable_count, std::span<const std::vector<VertexId>> rows,
    const SimplexOptions& options) {
  CoveringMaster master(variable_count, options);
  for (const auto& row : rows) master.add_row(row);
  MasterSolution out;
  out.pivots = master.solve();
  out.weights = master.weights();
  lift_rows(out.weights, rows);
  out.objective = out.weights.sum();
  return out;
}

}  // namespace noisecut
