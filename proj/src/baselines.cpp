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

#include "ufs/baselines.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "ufs/labeling.hpp"
#include "ufs/shuffle.hpp"

namespace ufs {

namespace {

void add_undirected(std::vector<PairRecord>& out, NodeId a, NodeId b) {
  if (a == b) return;
  out.push_back({a, b});
  out.push_back({b, a});
}

// Per-reducer distinct count of the records a star operation forwards.
class Forwarded {
 public:
  explicit Forwarded(std::size_t partitions) : buckets_(partitions) {}
  void add(NodeId reducer, NodeId a, NodeId b) {
    if (a != b) buckets_[bucket_of(reducer, buckets_.size(), kDefaultHashSeed)].push_back({a, b});
  }
  std::size_t distinct() {
    std::size_t n = 0;
    for (auto& b : buckets_) {
      std::sort(b.begin(), b.end());
      n += static_cast<std::size_t>(std::unique(b.begin(), b.end()) - b.begin());
    }
    return n;
  }

 private:
  std::vector<std::vector<PairRecord>> buckets_;
};

StarRoundState finish(std::vector<PairRecord> next, const StarRoundState& before) {
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  StarRoundState out;
  out.changed = next != before.records;
  out.records = std::move(next);
  return out;
}

}  // namespace

StarRoundState StarRoundState::from_edges(std::span<const Edge> edges) {
  std::vector<PairRecord> records;
  records.reserve(2 * edges.size());
  for (const Edge& e : edges) add_undirected(records, e.u, e.v);
  StarRoundState empty;
  StarRoundState state = finish(std::move(records), empty);
  state.changed = false;
  return state;
}

StarRoundState large_star(const StarRoundState& state, std::size_t partitions) {
  std::vector<PairRecord> next;
  next.reserve(state.records.size());
  Forwarded forwarded(std::max<std::size_t>(partitions, 1));
  for_each_group(state.records, [&](NodeId u, std::span<const PairRecord> nbrs) {
    const NodeId m = std::min(u, nbrs.front().parent);
    for (const PairRecord& r : nbrs) {
      if (r.parent > u) {
        add_undirected(next, r.parent, m);
        forwarded.add(u, r.parent, m);
      }
    }
  });
  StarRoundState out = finish(std::move(next), state);
  out.shuffled = forwarded.distinct();
  return out;
}

StarRoundState small_star(const StarRoundState& state, std::size_t partitions) {
  std::vector<PairRecord> next;
  next.reserve(state.records.size());
  Forwarded forwarded(std::max<std::size_t>(partitions, 1));
  auto link = [&](NodeId u, NodeId a, NodeId b) {
    add_undirected(next, a, b);
    forwarded.add(u, a, b);
    forwarded.add(u, b, a);
  };
  for_each_group(state.records, [&](NodeId u, std::span<const PairRecord> nbrs) {
    const NodeId m = std::min(u, nbrs.front().parent);
    for (const PairRecord& r : nbrs) {
      if (r.parent < u) link(u, r.parent, m);
    }
    link(u, u, m);
  });
  StarRoundState out = finish(std::move(next), state);
  out.shuffled = forwarded.distinct();
  return out;
}

BaselineResult run_alternating(std::span<const Edge> edges, std::size_t max_rounds,
                               std::size_t partitions) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<NodeId> nodes;
  nodes.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    nodes.push_back(e.u);
    nodes.push_back(e.v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (max_rounds == 0) {
    max_rounds = 4 * static_cast<std::size_t>(std::bit_width(nodes.size() > 1 ? nodes.size() - 1 : 0)) + 16;
  }

  BaselineResult result;
  RunMetrics& m = result.metrics;
  m.input_edges = edges.size();

  StarRoundState state = StarRoundState::from_edges(edges);
  std::size_t entering = 0;
  for (const Edge& e : edges) entering += e.u != e.v ? 2 : 0;
  while (!state.records.empty()) {
    if (m.phase2_rounds + 2 > max_rounds) {
      throw RoundLimitExceeded("large-star/small-star did not converge within " +
                               std::to_string(max_rounds) + " rounds");
    }
    m.shuffle_records_per_round.push_back(entering);
    StarRoundState large = large_star(state, partitions);
    m.shuffle_records_per_round.push_back(large.shuffled);
    StarRoundState small = small_star(large, partitions);
    entering = small.shuffled;
    m.phase2_rounds += 2;
    m.checkpointed_per_round.insert(m.checkpointed_per_round.end(), 2, 0);
    bool changed = large.changed || small.changed;
    state = std::move(small);
    if (!changed) break;
  }
  m.initial_shuffle_volume = m.shuffle_records_per_round.empty() ? 0 : m.shuffle_records_per_round.front();

  // At the fixpoint every component is a star around its minimum.
  std::vector<PairRecord> labels;
  labels.reserve(nodes.size());
  std::size_t cursor = 0;
  for (NodeId u : nodes) {
    while (cursor < state.records.size() && state.records[cursor].child < u) ++cursor;
    NodeId label = u;
    if (cursor < state.records.size() && state.records[cursor].child == u) {
      label = std::min(u, state.records[cursor].parent);
    }
    labels.push_back({u, label});
  }
  if (!m.checkpointed_per_round.empty()) m.checkpointed_per_round.back() = labels.size();
  result.labeling = ComponentLabeling(std::move(labels));
  m.largest_component_size = largest_component(result.labeling);
  m.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ufs
