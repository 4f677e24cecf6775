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

#include <map>

#include "fixtures.hpp"
#include "noisecut/dvd.hpp"
#include "noisecut/errors.hpp"
#include "noisecut/exact.hpp"
#include "noisecut/paths.hpp"
#include "oracles.hpp"

namespace noisecut {
namespace {

using EdgeCounts = std::map<std::pair<std::string, std::string>, std::uint32_t>;

EdgeCounts named_edges(const Circuit& g) {
  EdgeCounts out;
  for (const RawEdge& e : g.edges()) {
    out[{g.name(e.src), g.name(e.dst)}] = e.multiplicity;
  }
  return out;
}

TEST(MakeDvdInstance, Errors) {
  EXPECT_THROW(make_dvd_instance(2, {}, 1), InvalidArgument);
  EXPECT_THROW(make_dvd_instance(2, {{0, 2}}, 2), UnknownVertex);
  EXPECT_THROW(make_dvd_instance(2, {{0, 1}, {1, 0}}, 2), CycleDetected);
}

TEST(Reduce, SingleVertex) {
  const ReductionMap m = reduce(make_dvd_instance(1, {}, 2, {"a"}));
  const Circuit& g = m.circuit;
  ASSERT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.is_red(*g.find("a")));
  EXPECT_TRUE(g.is_red(*g.find("clone(a)")));
  EXPECT_TRUE(g.is_white(*g.find("s0")));
  EXPECT_EQ(named_edges(g), (EdgeCounts{{{"s0", "a"}, 2}, {{"a", "clone(a)"}, 2}}));
  EXPECT_EQ(m.source, *g.find("s0"));
  EXPECT_EQ(m.clone_of[0], *g.find("clone(a)"));
}

TEST(Reduce, PathPadsFromSource) {
  const ReductionMap m =
      reduce(make_dvd_instance(3, {{0, 1}, {1, 2}}, 2, {"a", "b", "c"}));
  EXPECT_EQ(m.circuit.size(), 7u);
  const EdgeCounts e = named_edges(m.circuit);
  EXPECT_EQ(e.at({"s0", "a"}), 2u);
  EXPECT_EQ(e.at({"s0", "b"}), 1u);
  EXPECT_EQ(e.at({"s0", "c"}), 1u);
  EXPECT_EQ(e.at({"a", "b"}), 1u);
  EXPECT_EQ(e.at({"b", "c"}), 1u);
  for (const char* v : {"a", "b", "c"}) {
    EXPECT_EQ(e.at({v, "clone(" + std::string(v) + ")"}), 2u);
  }
}

TEST(Reduce, IndegreeTwoGetsNoPadding) {
  const ReductionMap m =
      reduce(make_dvd_instance(3, {{0, 2}, {1, 2}}, 2, {"a", "b", "c"}));
  EXPECT_EQ(named_edges(m.circuit).count({"s0", "c"}), 0u);
}

TEST(Reduce, IndegreeThreeGadget) {
  const ReductionMap m = reduce(make_dvd_instance(
      4, {{0, 3}, {1, 3}, {2, 3}}, 2, {"v1", "v2", "v3", "v"}));
  const Circuit& g = m.circuit;
  EXPECT_EQ(g.size(), 2 * 4 + 1 + 3u);
  ASSERT_EQ(m.gadget_of[3].size(), 3u);
  const EdgeCounts e = named_edges(g);
  EXPECT_EQ(e.at({"v1", "w1(v)"}), 2u);
  EXPECT_EQ(e.at({"w1(v)", "w2(v)"}), 1u);
  EXPECT_EQ(e.at({"v2", "w2(v)"}), 1u);
  EXPECT_EQ(e.at({"w2(v)", "w3(v)"}), 1u);
  EXPECT_EQ(e.at({"v3", "w3(v)"}), 1u);
  EXPECT_EQ(e.at({"w3(v)", "v"}), 2u);
  for (const char* p : {"v1", "v2", "v3"}) EXPECT_EQ(e.count({p, "v"}), 0u);
  for (VertexId w : m.gadget_of[3]) {
    EXPECT_TRUE(g.is_blue(w));
    EXPECT_EQ(m.role[w], ReducedRole::kGadget);
    EXPECT_EQ(m.owner[w], 3u);
  }
}

TEST(Reduce, EmptyInstanceIsOnlyTheSource) {
  const ReductionMap m = reduce(make_dvd_instance(0, {}, 2));
  ASSERT_EQ(m.circuit.size(), 1u);
  EXPECT_TRUE(m.circuit.is_white(0));
}

TEST(Reduce, NameClashesAreAvoided) {
  const ReductionMap m =
      reduce(make_dvd_instance(2, {}, 2, {"s0", "clone(s0)"}));
  EXPECT_EQ(m.circuit.name(m.source), "s0'");
  EXPECT_EQ(m.circuit.name(m.clone_of[0]), "clone(s0)'");
}

TEST(PullBack, AllOriginals) {
  const DvdInstance h = make_dvd_instance(3, {{0, 1}, {1, 2}}, 2);
  const ReductionMap m = reduce(h);
  MarkSet s(m.circuit.size());
  for (VertexId v = 0; v < 3; ++v) s.insert(v);
  EXPECT_EQ(pull_back(m, s), (std::vector<VertexId>{0, 1, 2}));
}

TEST(PullBack, GadgetMarkMovesToOwner) {
  // v has predecessors a, b, c and a successor d; L = 2.
  const DvdInstance h = make_dvd_instance(
      5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}}, 2, {"a", "b", "c", "v", "d"});
  const ReductionMap m = reduce(h);
  const Circuit& g = m.circuit;
  // w3(v) cuts every route into v; d covers v -> d -> clone(d).
  MarkSet s(g.size());
  s.insert(m.gadget_of[3][2]);
  s.insert(*g.find("d"));
  ASSERT_TRUE(is_feasible_by_levels(g, s, 2));
  const auto back = pull_back(m, s);
  EXPECT_EQ(back, (std::vector<VertexId>{3, 4}));
  EXPECT_TRUE(dvd_is_feasible(h, back));
}

TEST(PullBack, RejectsInfeasible) {
  const ReductionMap m = reduce(make_dvd_instance(3, {{0, 1}, {1, 2}}, 2));
  EXPECT_THROW(pull_back(m, MarkSet(m.circuit.size())), InfeasibleInput);
}

TEST(PushForward, Examples) {
  const DvdInstance h = make_dvd_instance(3, {{0, 1}, {1, 2}}, 2);
  const ReductionMap m = reduce(h);
  const std::vector<VertexId> b{1};
  const MarkSet s = push_forward(m, h, b);
  EXPECT_EQ(s.members(), b);
  EXPECT_TRUE(is_feasible_by_levels(m.circuit, s, 2));
  const std::vector<VertexId> all{0, 1, 2};
  EXPECT_TRUE(is_feasible_by_levels(m.circuit, push_forward(m, h, all), 2));
  EXPECT_THROW(push_forward(m, h, {}), InfeasibleInput);
}

class ReductionProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ReductionProperties, Structure) {
  Rng rng(GetParam());
  const int l = 2 + static_cast<int>(rng.below(2));
  const DvdInstance h = random_dvd(1 + rng.below(8), 0.45, l, rng);
  const ReductionMap m = reduce(h);
  const Circuit& g = m.circuit;

  std::size_t expected = 2 * h.size() + 1;
  for (VertexId v = 0; v < h.size(); ++v) {
    if (h.predecessors(v).size() >= 3) expected += h.predecessors(v).size();
  }
  EXPECT_EQ(g.size(), expected);
  for (VertexId v = 0; v < g.size(); ++v) {
    std::uint32_t indeg = 0;
    for (const Arc& a : g.predecessors(v)) indeg += a.multiplicity;
    EXPECT_EQ(indeg, g.is_white(v) ? 0u : 2u);
    switch (m.role[v]) {
      case ReducedRole::kOriginal:
      case ReducedRole::kClone:
        EXPECT_TRUE(g.is_red(v));
        break;
      case ReducedRole::kGadget:
        EXPECT_TRUE(g.is_blue(v));
        break;
      case ReducedRole::kSource:
        EXPECT_TRUE(g.is_white(v));
        EXPECT_EQ(v, m.source);
        break;
    }
  }

  for (const auto& p : enumerate_interesting_paths(g, l)) {
    std::size_t reds = 0;
    for (VertexId v : p.vertices) reds += g.is_red(v) ? 1 : 0;
    EXPECT_EQ(reds, static_cast<std::size_t>(l) + 1);
    for (VertexId v : p.non_final()) {
      if (g.is_red(v)) EXPECT_TRUE(m.is_original(v));
    }
  }
}

TEST_P(ReductionProperties, OptimumIsPreserved) {
  Rng rng(GetParam() + 1000);
  const int l = 2 + static_cast<int>(rng.below(2));
  const DvdInstance h = random_dvd(1 + rng.below(7), 0.4, l, rng);
  const ReductionMap m = reduce(h);
  const auto dvd = exact_dvd(h);
  const auto boot = exact_bootstrap(m.circuit, l);
  ASSERT_TRUE(dvd && boot);
  EXPECT_EQ(dvd->optimum, boot->optimum);
  EXPECT_EQ(dvd->optimum, oracle::exact_dvd(h));

  const auto back = pull_back(m, MarkSet(m.circuit.size(), boot->witness));
  EXPECT_TRUE(dvd_is_feasible(h, back));
  EXPECT_EQ(back.size(), boot->optimum);
  EXPECT_TRUE(is_feasible_by_levels(m.circuit,
                                    push_forward(m, h, dvd->witness), l));
}

INSTANTIATE_TEST_SUITE_P(Random, ReductionProperties,
                         ::testing::Range<std::uint64_t>(0, 60));

}  // namespace
}  // namespace noisecut
