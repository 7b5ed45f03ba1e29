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

// Per-round kernels of the union-find shuffle. Each kernel is a pure
// function of its input; the bucket loops run under OpenMP and always
// concatenate per-bucket output in bucket order, so results are identical
// for every worker count.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ufs/shuffle.hpp"
#include "ufs/types.hpp"

namespace ufs {

/// Splits edges into k contiguous chunks whose sizes differ by at most one.
/// The returned spans view `edges`.
std::vector<std::span<const Edge>> load_partitions(std::span<const Edge> edges, std::size_t k);

/// Local union-find over one partition, emitted as the flattened star:
/// one (node, root) record per node, roots as (r, r).
std::vector<PairRecord> weighted_union_phase(std::span<const Edge> partition);

/// Literal per-edge emission: every union emits (absorbed endpoint, new
/// root), then each root that ever absorbed a tree emits (root, root).
/// Self-edges emit (u, u). Kept for A/B validation against the flattened form.
std::vector<PairRecord> weighted_union_phase_per_edge(std::span<const Edge> partition);

/// Both-endpoints emission used when the local union-find is disabled.
std::vector<PairRecord> initial_records_without_local_uf(std::span<const Edge> partition);

struct ElectionRoundOutput {
  /// Children that found a unique parent (vertex pruning).
  std::vector<PairRecord> checkpoints;
  /// Records for the next shuffle, deduplicated within each bucket.
  std::vector<PairRecord> emitted;
  /// Children whose only candidate was themselves. They leave the round
  /// loop as roots.
  std::vector<NodeId> settled_roots;
  /// Largest candidate-parent set seen in any group.
  std::size_t max_candidates = 0;
};

/// One election round over every child group:
///  - candidates == {child}: dropped, child recorded as a settled root;
///  - one candidate p != child: (child, p) checkpointed;
///  - otherwise the elected parent np is announced to every candidate n as
///    (n, np), plus (child, np).
ElectionRoundOutput process_partition_round(const PartitionSet& groups, Election election,
                                            std::size_t workers = 1);

/// (a, b) -> {(a, b), (b, a)}; output sorted and deduplicated.
std::vector<PairRecord> self_join(std::span<const PairRecord> checkpoints);

struct CompressionRoundOutput {
  std::vector<PairRecord> finals;
  std::vector<PairRecord> emitted;
};

/// One path-compression round. For a group with member set cc and elected
/// node m (min under kMin): if no record has both endpoints beaten by m the
/// group is pruned and finals (n, m) are written for every n in cc;
/// otherwise (m, n) and (n, m) are emitted for every n in cc. Emitted
/// records are deduplicated within each bucket.
CompressionRoundOutput path_compression_round(const PartitionSet& groups, Election election,
                                              std::size_t workers = 1);

}  // namespace ufs
