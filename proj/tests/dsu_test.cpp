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

#include <bit>
#include <random>

#include "test_util.hpp"
#include "ufs/dsu.hpp"
#include "ufs/labeling.hpp"

namespace ufs {
namespace {

TEST(DisjointSetForest, UniteReturnsRootAndTieBreaksOnSmallerId) {
  DisjointSetForest f;
  EXPECT_EQ(f.unite(4, 2), 2u);
  EXPECT_EQ(f.unite(2, 7), 2u);
  EXPECT_EQ(f.find(7), 2u);
  EXPECT_EQ(f.tree_size(2), 3u);
  EXPECT_THROW((void)f.tree_size(4), std::invalid_argument);
}

TEST(DisjointSetForest, LargerTreeWins) {
  DisjointSetForest f;
  f.unite(10, 11);
  f.unite(10, 12);
  // {10,11,12} vs singleton 1: size beats id.
  EXPECT_EQ(f.unite(1, 12), 10u);
}

TEST(DisjointSetForest, FlattenInRegistrationOrder) {
  DisjointSetForest f;
  f.unite(4, 2);
  f.unite(2, 7);
  f.touch(9);
  std::vector<PairRecord> expected{{4, 2}, {2, 2}, {7, 2}, {9, 9}};
  EXPECT_EQ(f.flatten(), expected);
}

TEST(DisjointSetForest, FindIsIdempotentAndTouchRegisters) {
  DisjointSetForest f;
  EXPECT_FALSE(f.contains(3));
  f.touch(3);
  EXPECT_TRUE(f.contains(3));
  EXPECT_EQ(f.find(3), 3u);
  f.unite(3, 5);
  NodeId r = f.find(5);
  EXPECT_EQ(f.find(5), r);
  EXPECT_EQ(f.find(r), r);
  EXPECT_EQ(f.node_count(), 2u);
}

TEST(DisjointSetForest, DenseAndSparseAgree) {
  std::mt19937_64 rng(3);
  auto edges = testing::random_graph(rng, 300, 250);
  auto dense = DisjointSetForest::dense(300);
  DisjointSetForest sparse;
  for (const Edge& e : edges) {
    EXPECT_EQ(dense.unite(e.u, e.v), sparse.unite(e.u, e.v));
  }
  EXPECT_EQ(dense.flatten(), sparse.flatten());
}

TEST(DisjointSetForest, DepthBoundedByLogOfTreeSize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    DisjointSetForest f;
    auto edges = testing::random_graph(rng, 500, 400);
    for (const Edge& e : edges) f.unite(e.u, e.v);
    for (NodeId x : f.nodes()) {
      const std::size_t size = f.tree_size(f.root_of(x));
      EXPECT_LE(f.depth(x), static_cast<std::size_t>(std::bit_width(size) - 1));
    }
  }
}

TEST(DisjointSetForest, MatchesBreadthFirstSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 200;
    auto edges = testing::random_graph(rng, n, rng() % (2 * n), trial % 2 == 0);
    DisjointSetForest f;
    for (const Edge& e : edges) f.unite(e.u, e.v);
    auto truth = testing::bfs_components(edges);
    for (const auto& [a, la] : truth) {
      for (const auto& [b, lb] : truth) {
        if (b > a + 3) break;
        EXPECT_EQ(la == lb, f.find(a) == f.find(b));
      }
    }
  }
}

TEST(SequentialComponents, Examples) {
  std::vector<Edge> edges{{1, 2}, {2, 3}, {4, 5}};
  EXPECT_EQ(sequential_components(edges), (ComponentLabeling{{1, 1}, {2, 1}, {3, 1}, {4, 4}, {5, 4}}));
  EXPECT_TRUE(sequential_components({}).empty());
  std::vector<Edge> loop{{7, 7}};
  EXPECT_EQ(sequential_components(loop), (ComponentLabeling{{7, 7}}));
}

TEST(SequentialComponents, LabelIsComponentMinimum) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 300;
    auto edges = testing::random_graph(rng, n, rng() % (2 * n), trial % 3 == 0);
    auto labeling = sequential_components(edges);
    EXPECT_EQ(testing::as_map(labeling), testing::bfs_components(edges));
    for (const PairRecord& r : labeling) {
      EXPECT_LE(r.parent, r.child);
      EXPECT_EQ(labeling.at(r.parent), r.parent);
    }
  }
}

TEST(ComponentLabeling, RejectsConflictingLabels) {
  EXPECT_THROW((ComponentLabeling{{1, 1}, {1, 2}}), std::invalid_argument);
  ComponentLabeling dup{{1, 1}, {1, 1}, {2, 1}};
  EXPECT_EQ(dup.size(), 2u);
  EXPECT_THROW((void)dup.at(3), std::out_of_range);
}

TEST(Labeling, SamePartitionIsABijection) {
  ComponentLabeling a{{1, 1}, {2, 1}, {3, 3}};
  ComponentLabeling b{{1, 2}, {2, 2}, {3, 3}};
  ComponentLabeling merged{{1, 1}, {2, 1}, {3, 1}};
  ComponentLabeling split{{1, 1}, {2, 2}, {3, 3}};
  EXPECT_TRUE(same_partition(a, b));
  EXPECT_FALSE(same_partition(a, merged));
  EXPECT_FALSE(same_partition(a, split));
  EXPECT_FALSE(same_partition(a, ComponentLabeling{{1, 1}, {2, 1}}));
}

TEST(Labeling, StarAndSizes) {
  EXPECT_TRUE(is_star(ComponentLabeling{{1, 1}, {2, 1}, {5, 5}}));
  EXPECT_FALSE(is_star(ComponentLabeling{{1, 2}, {2, 3}, {3, 3}}));
  EXPECT_FALSE(is_star(ComponentLabeling{{1, 9}}));
  ComponentLabeling l{{1, 1}, {2, 1}, {3, 1}, {4, 4}, {5, 4}, {6, 6}};
  EXPECT_EQ(component_sizes(l), (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(largest_component(l), 3u);
  EXPECT_EQ(largest_component({}), 0u);
}

}  // namespace
}  // namespace ufs
