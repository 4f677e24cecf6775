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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "noisecut/errors.hpp"
#include "noisecut/relaxation.hpp"
#include "noisecut/rounding.hpp"
#include "oracles.hpp"

namespace noisecut {
namespace {

using fixtures::chain;
using fixtures::id;

TEST(RoundAt, ZeroWeightsMarkNothingAwayFromZero) {
  const Circuit c = chain(2);
  const LevelTables t =
      level_lengths(c, 2, FractionalWeights::zeros(c.size()));
  for (double s : {0.1, 0.5, 1.0}) EXPECT_TRUE(round_at(t, 2, s).empty());
}

TEST(RoundAt, WeightOnFirstRedAlwaysMarksIt) {
  for (int l = 1; l <= 4; ++l) {
    const Circuit c = chain(static_cast<std::size_t>(l) + 1);
    FractionalWeights x = FractionalWeights::zeros(c.size());
    x.x[id(c, "r1")] = 1.0;
    const LevelTables t = level_lengths(c, l, x);
    EXPECT_EQ(t.f(1, id(c, "r1")), ExtReal(0.0));
    for (double s : {0.0, 0.25, 0.5, 0.999, 1.0}) {
      const MarkSet m = round_at(t, l, s);
      EXPECT_TRUE(m.contains(id(c, "r1")));
      EXPECT_TRUE(is_feasible_by_levels(c, m, l));
    }
  }
}

TEST(RoundAt, InfiniteEntriesNeverMatch) {
  const Circuit c = parse_circuit_string("node w white\nnode b blue\nedge w b 2\n");
  const LevelTables t = level_lengths(c, 2, FractionalWeights::constant(2, 1.0));
  EXPECT_TRUE(round_at(t, 2, 1.0).empty());
}

TEST(Breakpoints, AllInfinite) {
  const Circuit c = parse_circuit_string("node w white\nnode b blue\nedge w b 2\n");
  const LevelTables t = level_lengths(c, 1, FractionalWeights::zeros(2));
  EXPECT_EQ(breakpoints(t, 1), (std::vector<double>{0.0, 1.0}));
}

TEST(Breakpoints, SingleInterval) {
  const Circuit c = parse_circuit_string(
      "node w white\nnode u red\nnode v red\nedge w u 2\nedge u v 2\n");
  FractionalWeights x = FractionalWeights::zeros(c.size());
  x.x[id(c, "u")] = 0.3;
  x.x[id(c, "v")] = 0.2;
  const LevelTables t = level_lengths(c, 2, x);
  // f_1(u) = f_1(v) = 0, f_2(v) = 0.3.
  EXPECT_EQ(breakpoints(t, 2), (std::vector<double>{0.0, 0.2, 0.3, 0.5, 1.0}));
}

TEST(Breakpoints, CountBound) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Circuit c = fixtures::small_random(seed, 14);
    Rng rng(seed);
    const auto x = fixtures::random_weights(c.size(), rng);
    for (int l = 1; l <= 3; ++l) {
      const auto b = breakpoints(level_lengths(c, l, x), l);
      EXPECT_LE(b.size(), 2 * c.size() * l + 2);
      EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
      EXPECT_EQ(b.front(), 0.0);
      EXPECT_EQ(b.back(), 1.0);
    }
  }
}

TEST(Derandomized, NoPathsNoMarks) {
  const Circuit c = chain(3);
  const LpResult lp = solve_relaxation(c, 3);
  const auto r = derandomized_round(c, 3, level_lengths(c, 3, lp.weights));
  EXPECT_EQ(r.cardinality, 0u);
  EXPECT_TRUE(r.marks.empty());
  // t = 0 hits the zero-width intervals of every red; 0.5 is the first
  // candidate that marks nothing.
  EXPECT_EQ(r.t_used, 0.5);
}

TEST(Derandomized, ChainNeedsOneMark) {
  for (int l = 1; l <= 5; ++l) {
    const Circuit c = chain(static_cast<std::size_t>(l) + 1);
    const LpResult lp = solve_relaxation(c, l);
    const auto r = derandomized_round(c, l, level_lengths(c, l, lp.weights));
    EXPECT_EQ(r.cardinality, 1u);
    EXPECT_EQ(oracle::exact_bootstrap(c, l).size, 1u);
  }
}

TEST(Randomized, SeedIsReproducible) {
  const Circuit c = fixtures::small_random(3, 14);
  const LpResult lp = solve_relaxation(c, 2);
  const LevelTables t = level_lengths(c, 2, lp.weights);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    const auto a = randomized_round(c, 2, t, seed);
    const auto b = randomized_round(c, 2, t, seed);
    EXPECT_EQ(a.marks, b.marks);
    EXPECT_EQ(a.t_used, b.t_used);
    EXPECT_EQ(a.t_used, draw_threshold(seed));
  }
  EXPECT_NE(draw_threshold(1), draw_threshold(2));
}

class RoundingProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RoundingProperties, EveryThresholdIsFeasible) {
  const Circuit c = fixtures::small_random(GetParam(), 12);
  Rng rng(GetParam() + 100);
  for (int l = 1; l <= 3; ++l) {
    const LpResult lp = solve_relaxation(c, l);
    const LevelTables t = level_lengths(c, l, lp.weights);
    std::vector<double> ts = breakpoints(t, l);
    for (int k = 0; k < 10; ++k) ts.push_back(rng.uniform());
    for (double s : ts) {
      const MarkSet m = round_at(t, l, s);
      EXPECT_TRUE(is_feasible_by_levels(c, m, l)) << "t=" << s;
      EXPECT_TRUE(is_feasible_by_paths(c, m, l)) << "t=" << s;
    }
  }
}

TEST_P(RoundingProperties, MembershipMatchesIntervals) {
  const Circuit c = fixtures::small_random(GetParam(), 12);
  Rng rng(GetParam() + 200);
  const auto x = fixtures::random_weights(c.size(), rng);
  const int l = 2;
  const LevelTables t = level_lengths(c, l, x);
  for (int k = 0; k < 8; ++k) {
    const double s = rng.uniform();
    const MarkSet m = round_at(t, l, s);
    for (VertexId v = 0; v < c.size(); ++v) {
      bool inside = false;
      for (int i = 1; i <= l; ++i) {
        const ExtReal f = t.f(i, v);
        inside = inside || (f.is_finite() && f.value() <= s &&
                            s <= f.value() + x[v]);
      }
      EXPECT_EQ(m.contains(v), inside);
    }
  }
}

TEST_P(RoundingProperties, ConstantBetweenBreakpoints) {
  const Circuit c = fixtures::small_random(GetParam(), 10);
  Rng rng(GetParam() + 300);
  const auto x = fixtures::random_weights(c.size(), rng);
  const int l = 2;
  const LevelTables t = level_lengths(c, l, x);
  const auto b = breakpoints(t, l);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) {
    const double gap = b[k + 1] - b[k];
    if (gap < 1e-6) continue;
    const MarkSet mid = round_at(t, l, b[k] + gap / 2);
    EXPECT_EQ(round_at(t, l, b[k] + gap / 4), mid);
    EXPECT_EQ(round_at(t, l, b[k] + 3 * gap / 4), mid);
  }
}

TEST_P(RoundingProperties, ApproximationChain) {
  const Circuit c = fixtures::small_random(GetParam(), 12);
  for (int l = 1; l <= 3; ++l) {
    const LpResult lp = solve_relaxation(c, l);
    const LevelTables t = level_lengths(c, l, lp.weights);
    const auto r = derandomized_round(c, l, t);
    const auto opt = oracle::exact_bootstrap(c, l).size;
    EXPECT_TRUE(is_feasible_by_levels(c, r.marks, l));
    EXPECT_EQ(r.cardinality, r.marks.size());
    EXPECT_GE(r.cardinality, opt);
    EXPECT_LE(static_cast<double>(r.cardinality), l * lp.objective + 1e-6);
    if (l == 1) EXPECT_EQ(r.cardinality, opt);
  }
}

TEST_P(RoundingProperties, SweepAgreesWithLiteralEvaluation) {
  const Circuit c = fixtures::small_random(GetParam(), 14);
  for (int l = 1; l <= 3; ++l) {
    const LpResult lp = solve_relaxation(c, l);
    const LevelTables t = level_lengths(c, l, lp.weights);
    const auto fast = derandomized_round(c, l, t);
    const auto slow = serial::derandomized_round(c, l, t);
    EXPECT_EQ(fast.marks, slow.marks);
    EXPECT_EQ(fast.t_used, slow.t_used);
    EXPECT_EQ(fast.candidates, slow.candidates);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, RoundingProperties,
                         ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
}  // namespace noisecut
