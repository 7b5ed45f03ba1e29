// Copyright 2026 The UFS Authors
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

// Drives the ufs binary through the shell.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ufs/dsu.hpp"
#include "ufs/io.hpp"
#include "ufs/labeling.hpp"

#ifndef UFS_CLI_PATH
#error "UFS_CLI_PATH must point at the ufs executable"
#endif

namespace ufs {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ufs-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static int ufs(const std::string& args) {
    std::string cmd = std::string(UFS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenRunVerifyChain) {
  ASSERT_EQ(ufs("gen --kind chain --nodes 1024 --seed 7 -o " + path("c.tsv")), 0);
  ASSERT_EQ(ufs("run --input " + path("c.tsv") + " --partitions 8 -o " + path("l.tsv") + " --metrics " +
                path("m.json")),
            0);
  EXPECT_EQ(ufs("verify --input " + path("c.tsv") + " --labeling " + path("l.tsv")), 0);

  auto labels = read_labeling(path("l.tsv"));
  EXPECT_EQ(labels.size(), 1024u);
  for (const PairRecord& r : labels) EXPECT_EQ(r.parent, 0u);
  auto m = read_metrics(path("m.json"));
  EXPECT_EQ(m.input_edges, 1023u);
  EXPECT_EQ(m.shuffle_records_per_round.size(), m.phase2_rounds + m.phase3_rounds);
}

TEST_F(CliTest, RunOptionsAllVerify) {
  ASSERT_EQ(ufs("gen --kind skewed_lcc --nodes 3000 --edges 5000 --hubs 30 --seed 3 -o " + path("g.csv")), 0);
  for (const std::string extra :
       {"--election max", "--no-local-uf", "--per-edge-emission", "--workers 2 --partitions 64",
        "--memory-budget 16 --partitions 5", "--max-rounds 0"}) {
    ASSERT_EQ(ufs("run --input " + path("g.csv") + " -o " + path("l.tsv") + " " + extra), 0) << extra;
    EXPECT_EQ(ufs("verify --input " + path("g.csv") + " --labeling " + path("l.tsv")), 0) << extra;
  }
}

TEST_F(CliTest, EmptyInputGivesEmptyLabeling) {
  std::ofstream(path("e.tsv")).close();
  ASSERT_EQ(ufs("run --input " + path("e.tsv") + " -o " + path("l.tsv")), 0);
  EXPECT_TRUE(fs::exists(path("l.tsv")));
  EXPECT_EQ(fs::file_size(path("l.tsv")), 0u);
  EXPECT_EQ(ufs("verify --input " + path("e.tsv") + " --labeling " + path("l.tsv")), 0);
}

TEST_F(CliTest, CorruptedLabelingFailsVerify) {
  ASSERT_EQ(ufs("gen --kind clique_clusters --nodes 64 --cluster-size 8 --seed 1 -o " + path("g.tsv")), 0);
  ASSERT_EQ(ufs("run --input " + path("g.tsv") + " --partitions 4 -o " + path("l.tsv")), 0);
  auto labels = read_labeling(path("l.tsv"));

  // Move one node into another component.
  std::vector<PairRecord> moved(labels.begin(), labels.end());
  NodeId other = moved.front().parent;
  for (auto& r : moved) {
    if (r.parent != other) {
      r.parent = other;
      break;
    }
  }
  write_labeling(path("bad.tsv"), ComponentLabeling(moved));
  EXPECT_EQ(ufs("verify --input " + path("g.tsv") + " --labeling " + path("bad.tsv")), 1);

  // Relabeling a component by another member is still accepted.
  std::vector<PairRecord> renamed(labels.begin(), labels.end());
  NodeId victim = renamed.back().parent;
  NodeId stand_in = victim;
  for (const auto& r : renamed) {
    if (r.parent == victim && r.child != victim) stand_in = r.child;
  }
  for (auto& r : renamed) {
    if (r.parent == victim) r.parent = stand_in;
  }
  write_labeling(path("star.tsv"), ComponentLabeling(renamed));
  EXPECT_EQ(ufs("verify --input " + path("g.tsv") + " --labeling " + path("star.tsv")), 0);

  std::vector<PairRecord> dropped(labels.begin(), std::prev(labels.end()));
  write_labeling(path("short.tsv"), ComponentLabeling(dropped));
  EXPECT_EQ(ufs("verify --input " + path("g.tsv") + " --labeling " + path("short.tsv")), 1);

  std::vector<PairRecord> chained(labels.begin(), labels.end());
  chained[0].parent = 9999;
  write_labeling(path("chain.tsv"), ComponentLabeling(chained));
  EXPECT_EQ(ufs("verify --input " + path("g.tsv") + " --labeling " + path("chain.tsv")), 1);
}

TEST_F(CliTest, StringIds) {
  {
    std::ofstream out(path("s.csv"));
    out << "# people\nalice,bob\nbob,carol\ndave,erin\n";
  }
  ASSERT_EQ(ufs("run --strings --input " + path("s.csv") + " -o " + path("l.tsv")), 0);
  EXPECT_EQ(slurp(path("l.tsv")), "alice\talice\nbob\talice\ncarol\talice\ndave\tdave\nerin\tdave\n");
  EXPECT_EQ(ufs("verify --strings --input " + path("s.csv") + " --labeling " + path("l.tsv")), 0);
}

TEST_F(CliTest, UsageAndRuntimeErrors) {
  EXPECT_EQ(ufs(""), 2);
  EXPECT_EQ(ufs("frobnicate"), 2);
  EXPECT_EQ(ufs("gen --kind chain"), 2);
  EXPECT_EQ(ufs("gen --kind torus -o " + path("x.tsv")), 2);
  EXPECT_EQ(ufs("gen --kind skewed_lcc --nodes 5 -o " + path("x.tsv")), 2);
  EXPECT_EQ(ufs("run --input " + path("missing.tsv")), 2);
  EXPECT_EQ(ufs("run --input /dev/null --partitions 0"), 2);
  EXPECT_EQ(ufs("run --input /dev/null --election median"), 2);
  EXPECT_EQ(ufs("--help"), 0);

  {
    std::ofstream out(path("bad.tsv"));
    out << "1\t2\nnope\t3\n";
  }
  EXPECT_EQ(ufs("run --input " + path("bad.tsv")), 3);
  {
    std::ofstream out(path("chain.tsv"));
    for (int i = 0; i < 300; ++i) out << i << '\t' << i + 1 << '\n';
  }
  EXPECT_EQ(ufs("run --no-local-uf --partitions 64 --max-rounds 1 --input " + path("chain.tsv")), 3);
}

TEST_F(CliTest, BenchSmokeIsDeterministic) {
  ASSERT_EQ(ufs("bench --suite smoke --seed 3 -o " + path("a.csv")), 0);
  ASSERT_EQ(ufs("bench --suite smoke --seed 3 --workers 2 -o " + path("b.csv")), 0);
  auto strip = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + "\n";
    return out;
  };
  std::string a = slurp(path("a.csv"));
  EXPECT_EQ(strip(a), strip(slurp(path("b.csv"))));
  EXPECT_EQ(a.substr(0, a.find('\n')), "dataset,algorithm,edges,rounds,shuffle_records,wall_time_ms");
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 1 + 4 * 3);
}

}  // namespace
}  // namespace ufs
