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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "ufs/checkpoint.hpp"
#include "ufs/shuffle.hpp"
#include "ufs/types.hpp"

namespace ufs {

/// How partitions emit records before the first shuffle.
enum class LocalEmission {
  kFlattenedStar,  // one (node, root) per node after the local union-find
  kPerEdge,        // literal per-union emission, for A/B validation
};

struct EngineConfig {
  std::size_t partitions = 1;
  Election election = Election::kMin;
  bool local_uf = true;
  LocalEmission local_emission = LocalEmission::kFlattenedStar;
  /// 0 selects default_max_rounds(distinct nodes).
  std::size_t max_rounds = 0;
  std::uint64_t hash_seed = kDefaultHashSeed;
  /// OpenMP threads; 0 uses every hardware thread.
  std::size_t workers = 1;
  /// In-memory checkpoint records before spilling to disk.
  std::size_t checkpoint_memory_budget = CheckpointStore::kDefaultMemoryBudget;
  /// Spill directory; empty uses default_spill_dir().
  std::filesystem::path spill_dir;
  /// Keep a copy of every phase-2 checkpoint in the result trace.
  bool trace_checkpoints = false;

  /// Throws std::invalid_argument for k == 0.
  void validate() const;
};

/// 4 * ceil(log2(nodes + 2)) + 16.
std::size_t default_max_rounds(std::size_t distinct_nodes);

struct RunMetrics {
  std::size_t phase2_rounds = 0;
  std::size_t phase3_rounds = 0;
  /// Records entering the shuffle of each round, phase-2 rounds first.
  std::vector<std::size_t> shuffle_records_per_round;
  /// Records checkpointed by each round, aligned with the above.
  std::vector<std::size_t> checkpointed_per_round;
  std::size_t initial_shuffle_volume = 0;
  std::size_t largest_component_size = 0;
  std::size_t input_edges = 0;
  double wall_time_ms = 0.0;

  [[nodiscard]] std::size_t total_shuffle_records() const;
  [[nodiscard]] std::size_t total_rounds() const { return phase2_rounds + phase3_rounds; }
  /// Equality over every counter except wall_time_ms.
  [[nodiscard]] bool same_counters(const RunMetrics& other) const;
};

/// Diagnostics that are not part of the metrics file.
struct RunTrace {
  std::size_t distinct_nodes = 0;
  std::size_t max_rounds = 0;
  /// Largest candidate-parent set in the first election round.
  std::size_t first_round_max_candidates = 0;
  /// Filled when EngineConfig::trace_checkpoints is set.
  std::vector<PairRecord> phase2_checkpoints;
  bool spilled = false;
};

struct RunResult {
  ComponentLabeling labeling;
  RunMetrics metrics;
  RunTrace trace;
};

/// Runs the three phases over config.partitions logical partitions:
/// local union-find (or both-endpoint emission), election rounds until no
/// record is emitted, self-join of the phase-2 checkpoints, path-compression
/// rounds until no record is emitted, and consolidation into stars.
/// Throws RoundLimitExceeded when either loop exceeds the round cap.
RunResult run(std::span<const Edge> edges, const EngineConfig& config);

}  // namespace ufs
