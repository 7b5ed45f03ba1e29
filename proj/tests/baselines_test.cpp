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

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "ufs/baselines.hpp"
#include "ufs/labeling.hpp"

namespace ufs {
namespace {

using Records = std::vector<PairRecord>;

std::vector<Edge> to_edges(const Records& records) {
  std::vector<Edge> out;
  for (const PairRecord& r : records) out.push_back({r.child, r.parent});
  return out;
}

bool symmetric(const Records& records) {
  for (const PairRecord& r : records) {
    if (!std::binary_search(records.begin(), records.end(), PairRecord{r.parent, r.child})) return false;
  }
  return true;
}

TEST(LargeStar, FixpointOnCenteredStar) {
  auto s = StarRoundState::from_edges(std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
  auto next = large_star(s);
  EXPECT_FALSE(next.changed);
  EXPECT_EQ(next.records, s.records);
}

TEST(LargeStar, PathRelinksThirdNode) {
  auto s = StarRoundState::from_edges(std::vector<Edge>{{1, 2}, {2, 3}});
  auto next = large_star(s);
  EXPECT_TRUE(next.changed);
  EXPECT_TRUE(std::binary_search(next.records.begin(), next.records.end(), PairRecord{3, 1}));
}

TEST(LargeStar, Empty) {
  auto next = large_star(StarRoundState{});
  EXPECT_TRUE(next.records.empty());
  EXPECT_FALSE(next.changed);
}

TEST(SmallStar, Examples) {
  auto single = StarRoundState::from_edges(std::vector<Edge>{{5, 5}});
  EXPECT_FALSE(small_star(single).changed);

  StarRoundState pair;
  pair.records = {{1, 2}, {2, 1}};
  auto next = small_star(pair);
  EXPECT_FALSE(next.changed);
  EXPECT_EQ(next.records, pair.records);

  EXPECT_TRUE(small_star(StarRoundState{}).records.empty());
}

TEST(Stars, PreserveConnectivityEveryRound) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 200;
    auto edges = testing::random_graph(rng, n, rng() % (2 * n) + 1);
    std::vector<Edge> real;
    for (const Edge& e : edges) {
      if (e.u != e.v) real.push_back(e);
    }
    auto truth = testing::bfs_components(real);
    auto state = StarRoundState::from_edges(edges);
    for (int round = 0; round < 6; ++round) {
      state = round % 2 == 0 ? large_star(state) : small_star(state);
      ASSERT_TRUE(symmetric(state.records));
      ASSERT_EQ(testing::bfs_components(to_edges(state.records)), truth);
    }
  }
}

TEST(RunAlternating, Examples) {
  auto r = run_alternating(std::vector<Edge>{{1, 2}, {2, 3}, {4, 5}});
  EXPECT_EQ(r.labeling, (ComponentLabeling{{1, 1}, {2, 1}, {3, 1}, {4, 4}, {5, 4}}));
  EXPECT_TRUE(run_alternating({}).labeling.empty());
  EXPECT_EQ(run_alternating(std::vector<Edge>{{8, 8}}).labeling, (ComponentLabeling{{8, 8}}));
}

TEST(RunAlternating, ChainOf1024) {
  auto r = run_alternating(testing::chain_edges(1024));
  ASSERT_EQ(r.labeling.size(), 1024u);
  for (const PairRecord& p : r.labeling) EXPECT_EQ(p.parent, 0u);
  EXPECT_GT(r.metrics.phase2_rounds, 0u);
  EXPECT_LE(r.metrics.phase2_rounds, 4u * 10 + 16);
  EXPECT_EQ(r.metrics.shuffle_records_per_round.size(), r.metrics.phase2_rounds);
  EXPECT_EQ(r.metrics.largest_component_size, 1024u);
}

TEST(RunAlternating, MatchesBreadthFirstSearch) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 300;
    auto edges = testing::random_graph(rng, n, rng() % (2 * n) + 1, trial % 2 == 0);
    auto r = run_alternating(edges);
    ASSERT_EQ(testing::as_map(r.labeling), testing::bfs_components(edges));
  }
}

TEST(RunAlternating, RoundLimit) {
  EXPECT_THROW(run_alternating(testing::chain_edges(64), 1), RoundLimitExceeded);
}

}  // namespace
}  // namespace ufs
