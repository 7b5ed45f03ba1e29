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

// Alternating Large-Star / Small-Star connected components, the comparison
// baseline for the benchmark harness.
//
// Both operations act on an undirected edge set E kept as its symmetric
// closure. With Γ(u) the neighbors of u and m(u) = min(Γ(u) ∪ {u}):
//   large-star: for every edge {u, v} with v > u, replace it by {v, m(u)};
//   small-star: for every u, link every neighbor v < u, and u itself, to
//               m(u); self-loops are dropped.
// A fixpoint of both is a forest of stars centered at component minima.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ufs/dsu.hpp"
#include "ufs/engine.hpp"
#include "ufs/shuffle.hpp"
#include "ufs/types.hpp"

namespace ufs {

struct StarRoundState {
  /// Symmetric neighbor relation: (u, v) present iff (v, u) present.
  /// Sorted, no duplicates, no self-loops.
  std::vector<PairRecord> records;
  bool changed = false;
  /// Records the operation's reducers hand to the next shuffle. The reducer
  /// for u sits in bucket_of(u, k) and drops its own duplicates. Large-star
  /// output is shuffled once per edge, small-star output in both directions.
  std::size_t shuffled = 0;

  /// Symmetric closure of the non-self edges.
  static StarRoundState from_edges(std::span<const Edge> edges);
};

StarRoundState large_star(const StarRoundState& state, std::size_t partitions = 1);
StarRoundState small_star(const StarRoundState& state, std::size_t partitions = 1);

struct BaselineResult {
  ComponentLabeling labeling;
  /// phase2_rounds counts star operations; shuffle_records_per_round holds
  /// the records entering each one. The first large-star reads every
  /// non-self input edge in both directions.
  RunMetrics metrics;
};

/// Alternates large-star and small-star until neither changes the edge set.
/// max_rounds == 0 selects 4 * ceil(log2(n)) + 16 star operations.
/// Throws RoundLimitExceeded when the cap is hit.
BaselineResult run_alternating(std::span<const Edge> edges, std::size_t max_rounds = 0,
                               std::size_t partitions = 1);

}  // namespace ufs
