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

#include "ufs/engine.hpp"

#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "ufs/kernels.hpp"
#include "ufs/labeling.hpp"
#include "ufs/parallel.hpp"

namespace ufs {

void EngineConfig::validate() const {
  if (partitions == 0) throw std::invalid_argument("partition count must be >= 1");
}

std::size_t default_max_rounds(std::size_t distinct_nodes) {
  // ceil(log2(x)) == bit_width(x - 1) for x >= 1.
  return 4 * static_cast<std::size_t>(std::bit_width(distinct_nodes + 1)) + 16;
}

std::size_t RunMetrics::total_shuffle_records() const {
  return std::accumulate(shuffle_records_per_round.begin(), shuffle_records_per_round.end(),
                         std::size_t{0});
}

bool RunMetrics::same_counters(const RunMetrics& o) const {
  return phase2_rounds == o.phase2_rounds && phase3_rounds == o.phase3_rounds &&
         shuffle_records_per_round == o.shuffle_records_per_round &&
         checkpointed_per_round == o.checkpointed_per_round &&
         initial_shuffle_volume == o.initial_shuffle_volume &&
         largest_component_size == o.largest_component_size && input_edges == o.input_edges;
}

namespace {

std::vector<PairRecord> local_phase(std::span<const Edge> edges, const EngineConfig& config) {
  auto partitions = load_partitions(edges, config.partitions);
  const std::size_t k = partitions.size();
  std::vector<std::vector<PairRecord>> per_partition(k);

#pragma omp parallel for num_threads(resolve_workers(config.workers)) schedule(dynamic, 1)
  for (std::size_t p = 0; p < k; ++p) {
    if (!config.local_uf) {
      per_partition[p] = initial_records_without_local_uf(partitions[p]);
    } else if (config.local_emission == LocalEmission::kPerEdge) {
      per_partition[p] = weighted_union_phase_per_edge(partitions[p]);
    } else {
      per_partition[p] = weighted_union_phase(partitions[p]);
    }
  }

  std::size_t total = 0;
  for (const auto& part : per_partition) total += part.size();
  std::vector<PairRecord> out;
  out.reserve(total);
  for (auto& part : per_partition) {
    out.insert(out.end(), part.begin(), part.end());
    std::vector<PairRecord>().swap(part);
  }
  return out;
}

[[noreturn]] void round_limit(const char* phase, std::size_t cap) {
  throw RoundLimitExceeded(std::string(phase) + " did not converge within " + std::to_string(cap) +
                           " rounds");
}

}  // namespace

RunResult run(std::span<const Edge> edges, const EngineConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  RunResult result;
  RunMetrics& metrics = result.metrics;
  RunTrace& trace = result.trace;
  metrics.input_edges = edges.size();

  CheckpointStore store(config.checkpoint_memory_budget, config.spill_dir);
  std::size_t cap = config.max_rounds;

  // Phase 1: local union-find per partition.
  std::vector<PairRecord> live = local_phase(edges, config);
  metrics.initial_shuffle_volume = live.size();

  // Phase 2: election rounds with vertex pruning.
  while (!live.empty()) {
    PartitionSet groups = shuffle_by_child(live, config.partitions, config.hash_seed, config.workers);
    groups.round_index = metrics.phase2_rounds;
    if (metrics.phase2_rounds == 0) {
      // Every node is a child in the first round's input.
      trace.distinct_nodes = groups.group_count();
      if (cap == 0) cap = default_max_rounds(trace.distinct_nodes);
    }
    if (metrics.phase2_rounds == cap) round_limit("election phase", cap);
    metrics.shuffle_records_per_round.push_back(live.size());
    std::vector<PairRecord>().swap(live);

    ElectionRoundOutput round = process_partition_round(groups, config.election, config.workers);
    if (metrics.phase2_rounds == 0) trace.first_round_max_candidates = round.max_candidates;
    groups = {};

    for (NodeId r : round.settled_roots) round.checkpoints.push_back({r, r});
    store.append(CheckpointPhase::kShuffle, round.checkpoints);
    if (config.trace_checkpoints) {
      trace.phase2_checkpoints.insert(trace.phase2_checkpoints.end(), round.checkpoints.begin(),
                                      round.checkpoints.end());
    }
    metrics.checkpointed_per_round.push_back(round.checkpoints.size());
    live = std::move(round.emitted);
    ++metrics.phase2_rounds;
  }
  if (cap == 0) cap = default_max_rounds(0);

  // Phase 3: path compression over the symmetric checkpoint graph.
  live = self_join(store.load(CheckpointPhase::kShuffle));
  while (!live.empty()) {
    if (metrics.phase3_rounds == cap) round_limit("path compression phase", cap);
    PartitionSet groups = shuffle_by_child(live, config.partitions, config.hash_seed, config.workers);
    groups.round_index = metrics.phase3_rounds;
    metrics.shuffle_records_per_round.push_back(live.size());
    std::vector<PairRecord>().swap(live);

    CompressionRoundOutput round = path_compression_round(groups, config.election, config.workers);
    groups = {};
    store.append(CheckpointPhase::kCompression, round.finals);
    metrics.checkpointed_per_round.push_back(round.finals.size());
    live = std::move(round.emitted);
    ++metrics.phase3_rounds;
  }

  store.seal();
  trace.spilled = store.spilled(CheckpointPhase::kShuffle) || store.spilled(CheckpointPhase::kCompression);
  trace.max_rounds = cap;
  result.labeling = consolidate(store, config.election);
  metrics.largest_component_size = largest_component(result.labeling);
  metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ufs
