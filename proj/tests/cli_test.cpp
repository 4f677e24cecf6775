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

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "noisecut/text_format.hpp"

namespace noisecut {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("noisecut_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string chain(int reds) {
    std::string text = "node w white\n";
    std::string prev = "w";
    for (int k = 1; k <= reds; ++k) {
      const std::string name = "r" + std::to_string(k);
      text += "node " + name + " red\nedge " + prev + " " + name + " 2\n";
      prev = name;
    }
    return write("chain.circ", text);
  }

  std::map<std::string, std::string> key_values(const std::string& p) {
    std::map<std::string, std::string> kv;
    std::ifstream in(p);
    for (std::string line; std::getline(in, line);) {
      const auto eq = line.find('=');
      kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, CheckFeasible) {
  const std::string c = chain(2);
  EXPECT_EQ(run({"check", c, write("m", "r1\n"), "--level", "1"}), cli::kOk);
  EXPECT_NE(out_.str().find("feasible"), std::string::npos);
}

TEST_F(Cli, CheckInfeasibleNamesTheVertex) {
  const std::string c = chain(2);
  EXPECT_EQ(run({"check", c, write("m", ""), "--level", "1"}), cli::kInfeasible);
  EXPECT_NE(out_.str().find("infeasible"), std::string::npos);
  EXPECT_NE(out_.str().find("r2(2)"), std::string::npos);
}

TEST_F(Cli, ParseErrorReportsLine) {
  const std::string c = write("bad.circ", "node a white\nnode b green\n");
  EXPECT_EQ(run({"check", c, write("m", ""), "--level", "1"}), cli::kUsageError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
}

TEST_F(Cli, LevelIsRequired) {
  const std::string c = chain(2);
  EXPECT_EQ(run({"solve", c}), cli::kUsageError);
  EXPECT_EQ(run({"solve", c, "--level", "0"}), cli::kUsageError);
  EXPECT_EQ(run({"solve", c, "--level", "1", "--method", "magic"}),
            cli::kUsageError);
  EXPECT_EQ(run({}), cli::kUsageError);
}

TEST_F(Cli, SolveChainMethods) {
  const int l = 3;
  const std::string c = chain(l + 1);
  const std::map<std::string, std::string> expected{
      {"lp-round", "1"}, {"exact", "1"}, {"after-red", "4"}, {"greedy", "1"}};
  for (const auto& [method, card] : expected) {
    const std::string report = path(method + ".kv");
    ASSERT_EQ(run({"solve", c, "-L", "3", "--method", method, "--out", report}),
              cli::kOk);
    auto kv = key_values(report);
    EXPECT_EQ(kv["method." + method + ".cardinality"], card);
    EXPECT_EQ(kv["method." + method + ".verified_feasible"], "true");
  }
  EXPECT_EQ(key_values(path("exact.kv"))["exact_optimum"], "1");
  EXPECT_EQ(key_values(path("after-red.kv"))["method.after-red.marks"],
            "r1,r2,r3,r4");
}

TEST_F(Cli, SolveReportSchema) {
  const std::string c = chain(3);
  const std::string report = path("r.kv");
  ASSERT_EQ(run({"solve", c, "-L", "2", "-m", "lp-round", "-m", "exact",
                 "--out", report}),
            cli::kOk);
  auto kv = key_values(report);
  EXPECT_EQ(kv["instance"], "chain");
  EXPECT_EQ(kv["vertices"], "4");
  EXPECT_EQ(kv["edges"], "6");
  EXPECT_EQ(kv["level"], "2");
  EXPECT_EQ(std::stod(kv["lp_objective"]), 1.0);
  EXPECT_EQ(kv["lp_rows"], "1");
  EXPECT_EQ(kv["exact_optimum"], "1");
  EXPECT_TRUE(kv.count("method.lp-round.wall_seconds"));
  EXPECT_TRUE(kv.count("method.lp-round.threshold"));
  EXPECT_EQ(kv["method.lp-round.cardinality"], "1");
  EXPECT_EQ(kv["method.exact.marks"], "r1");
}

TEST_F(Cli, RandomizedAndTrace) {
  const std::string c = chain(3);
  const std::string trace = path("trace.tsv");
  ASSERT_EQ(run({"solve", c, "-L", "2", "--randomized", "--seed", "7",
                 "--trace", trace}),
            cli::kOk);
  const std::string first = out_.str();
  EXPECT_EQ(slurp(trace).rfind("iteration\tobjective\trows_added\n", 0), 0u);
  ASSERT_EQ(run({"solve", c, "-L", "2", "--randomized", "--seed", "7"}),
            cli::kOk);
  // Only the timing column may differ.
  EXPECT_EQ(first.substr(0, first.find("method")),
            out_.str().substr(0, out_.str().find("method")));
}

TEST_F(Cli, ExactCap) {
  const std::string g = path("big.circ");
  ASSERT_EQ(run({"gen", "layered", "--width", "8", "--depth", "8",
                 "--red-fraction", "0.6", "--out", g}),
            cli::kOk);
  EXPECT_EQ(run({"solve", g, "-L", "1", "-m", "exact", "--max-exact-subsets",
                 "100"}),
            cli::kResourceLimit);
}

TEST_F(Cli, ReduceDvdPath) {
  const std::string h = write("h.dvd", "node a\nnode b\nnode c\nedge a b\nedge b c\n");
  const std::string g = path("g.circ");
  ASSERT_EQ(run({"reduce-dvd", h, "--level", "2", "--out", g}), cli::kOk);
  const Circuit circuit = read_circuit_file(g);
  EXPECT_EQ(circuit.size(), 7u);
  const std::string map = slurp(g + ".map");
  EXPECT_NE(map.find("clone(b) clone b\n"), std::string::npos);
  EXPECT_NE(map.find("s0 source\n"), std::string::npos);
}

TEST_F(Cli, ReduceDvdGadgetCounts) {
  for (int d : {3, 4}) {
    std::string text = "node v\n";
    for (int i = 1; i <= d; ++i) {
      text += "node p" + std::to_string(i) + "\nedge p" + std::to_string(i) + " v\n";
    }
    const std::string h = write("h.dvd", text);
    ASSERT_EQ(run({"reduce-dvd", h, "--level", "2"}), cli::kOk);
    std::istringstream in(out_.str());
    const Circuit g = parse_circuit(in);
    EXPECT_EQ(g.blue_vertices().size(), static_cast<std::size_t>(d));
    EXPECT_EQ(g.size(), 2u * (d + 1) + 1 + d);
  }
}

TEST_F(Cli, ReduceDvdEmpty) {
  const std::string h = write("e.dvd", "# nothing\n");
  ASSERT_EQ(run({"reduce-dvd", h, "--level", "2"}), cli::kOk);
  EXPECT_EQ(out_.str(), "node s0 white\n");
  EXPECT_EQ(run({"reduce-dvd", h, "--level", "1"}), cli::kUsageError);
}

TEST_F(Cli, GenIsDeterministic) {
  ASSERT_EQ(run({"gen", "series-parallel", "--gates", "40", "--seed", "3"}), cli::kOk);
  const std::string a = out_.str();
  ASSERT_EQ(run({"gen", "series-parallel", "--gates", "40", "--seed", "3"}), cli::kOk);
  EXPECT_EQ(out_.str(), a);
  ASSERT_EQ(run({"gen", "red-chain", "--length", "2"}), cli::kOk);
  EXPECT_EQ(out_.str(),
            "node v0 white\nnode v1 red\nnode v2 red\nedge v0 v1 2\nedge v1 v2 2\n");
  EXPECT_EQ(run({"gen", "mystery"}), cli::kUsageError);
}

}  // namespace
}  // namespace noisecut
