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

#include "noisecut/report.hpp"

#include <iomanip>
#include <ostream>

namespace noisecut {
namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ',';
    out += n;
  }
  return out;
}

}  // namespace

void write_table(std::ostream& out, const RunReport& r) {
  out << "instance  " << r.instance << '\n'
      << "vertices  " << r.vertices << '\n'
      << "edges     " << r.edges << '\n'
      << "L         " << r.budget << '\n';
  if (r.lp_objective) {
    out << "lp        " << std::setprecision(10) << *r.lp_objective;
    if (r.lp_rows) out << "  (" << *r.lp_rows << " rows";
    if (r.lp_iterations) out << ", " << *r.lp_iterations << " iterations";
    if (r.lp_rows) out << ')';
    out << '\n';
  }
  if (r.exact_optimum) out << "optimum   " << *r.exact_optimum << '\n';
  out << '\n'
      << std::left << std::setw(12) << "method" << std::right << std::setw(8)
      << "marks" << std::setw(12) << "seconds" << "  verified\n";
  for (const MethodReport& m : r.methods) {
    out << std::left << std::setw(12) << m.method << std::right << std::setw(8)
        << m.cardinality << std::setw(12) << std::fixed << std::setprecision(4)
        << m.wall_seconds << std::defaultfloat << "  "
        << (m.verified_feasible ? "yes" : "NO") << '\n';
  }
  for (const MethodReport& m : r.methods) {
    out << '\n' << m.method << ":";
    for (const auto& name : m.marks) out << ' ' << name;
    out << '\n';
  }
}

void write_key_values(std::ostream& out, const RunReport& r) {
  out << std::setprecision(17);
  out << "instance=" << r.instance << '\n'
      << "vertices=" << r.vertices << '\n'
      << "edges=" << r.edges << '\n'
      << "level=" << r.budget << '\n';
  if (r.lp_objective) out << "lp_objective=" << *r.lp_objective << '\n';
  if (r.lp_rows) out << "lp_rows=" << *r.lp_rows << '\n';
  if (r.lp_iterations) out << "lp_iterations=" << *r.lp_iterations << '\n';
  if (r.exact_optimum) out << "exact_optimum=" << *r.exact_optimum << '\n';
  for (const MethodReport& m : r.methods) {
    const std::string p = "method." + m.method + ".";
    out << p << "cardinality=" << m.cardinality << '\n'
        << p << "wall_seconds=" << m.wall_seconds << '\n'
        << p << "verified_feasible=" << (m.verified_feasible ? "true" : "false")
        << '\n';
    if (m.threshold) out << p << "threshold=" << *m.threshold << '\n';
    out << p << "marks=" << join(m.marks) << '\n';
  }
}

}  // namespace noisecut
