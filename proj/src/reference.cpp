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

#include "ufs/reference.hpp"

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ufs/dsu.hpp"
#include "ufs/kernels.hpp"
#include "ufs/labeling.hpp"
#include "ufs/shuffle.hpp"

namespace ufs::reference {

namespace {

using Groups = std::map<NodeId, std::set<NodeId>>;

Groups group(const std::vector<PairRecord>& records) {
  Groups g;
  for (const PairRecord& r : records) g[r.child].insert(r.parent);
  return g;
}

// Distinct (producer bucket, record) pairs; duplicates from different
// producers survive.
class Emission {
 public:
  Emission(std::size_t k, std::uint64_t seed) : k_(k), seed_(seed) {}
  void add(NodeId producer, PairRecord r) { out_.insert({bucket_of(producer, k_, seed_), r}); }
  std::vector<PairRecord> drain() {
    std::vector<PairRecord> v;
    for (const auto& [bucket, r] : out_) v.push_back(r);
    out_.clear();
    return v;
  }

 private:
  std::size_t k_;
  std::uint64_t seed_;
  std::set<std::pair<std::size_t, PairRecord>> out_;
};

NodeId best_of(Election e, const std::set<NodeId>& s) {
  return e == Election::kMin ? *s.begin() : *s.rbegin();
}

}  // namespace

RunResult run(std::span<const Edge> edges, const EngineConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  RunResult result;
  RunMetrics& m = result.metrics;
  m.input_edges = edges.size();

  std::vector<PairRecord> live;
  const std::size_t k = config.partitions;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t begin = p * (edges.size() / k) + std::min(p, edges.size() % k);
    std::size_t end = begin + edges.size() / k + (p < edges.size() % k ? 1 : 0);
    std::span<const Edge> chunk = edges.subspan(begin, end - begin);
    if (!config.local_uf) {
      for (const Edge& e : chunk) {
        live.push_back({e.u, e.v});
        if (e.u != e.v) live.push_back({e.v, e.u});
      }
    } else if (config.local_emission == LocalEmission::kPerEdge) {
      auto part = weighted_union_phase_per_edge(chunk);
      live.insert(live.end(), part.begin(), part.end());
    } else {
      DisjointSetForest forest;
      for (const Edge& e : chunk) {
        if (e.u == e.v) {
          forest.touch(e.u);
        } else {
          forest.unite(e.u, e.v);
        }
      }
      for (NodeId n : forest.nodes()) live.push_back({n, forest.find(n)});
    }
  }
  m.initial_shuffle_volume = live.size();

  std::size_t cap = config.max_rounds;
  Emission emit(k, config.hash_seed);
  std::vector<PairRecord> phase2;
  while (!live.empty()) {
    Groups groups = group(live);
    if (m.phase2_rounds == 0) {
      result.trace.distinct_nodes = groups.size();
      if (cap == 0) cap = default_max_rounds(groups.size());
    }
    if (m.phase2_rounds == cap) throw RoundLimitExceeded("reference election phase");
    m.shuffle_records_per_round.push_back(live.size());
    live.clear();

    std::size_t checkpointed = 0;
    std::size_t widest = 0;
    for (const auto& [child, cp] : groups) {
      widest = std::max(widest, cp.size());
      if (cp.size() == 1) {
        phase2.push_back({child, *cp.begin()});
        ++checkpointed;
        continue;
      }
      NodeId np = best_of(config.election, cp);
      for (NodeId n : cp) emit.add(child, {n, np});
      if (!cp.contains(child)) emit.add(child, {child, np});
    }
    live = emit.drain();
    if (m.phase2_rounds == 0) result.trace.first_round_max_candidates = widest;
    m.checkpointed_per_round.push_back(checkpointed);
    ++m.phase2_rounds;
  }
  if (cap == 0) cap = default_max_rounds(0);
  if (config.trace_checkpoints) result.trace.phase2_checkpoints = phase2;

  std::set<PairRecord> joined;
  for (const PairRecord& r : phase2) {
    joined.insert(r);
    joined.insert({r.parent, r.child});
  }
  live.assign(joined.begin(), joined.end());

  std::map<NodeId, NodeId> best;
  auto offer = [&](NodeId child, NodeId parent) {
    auto [it, inserted] = best.try_emplace(child, parent);
    if (!inserted && prefers(config.election, parent, it->second)) it->second = parent;
  };
  for (const PairRecord& r : phase2) offer(r.child, r.parent);

  while (!live.empty()) {
    if (m.phase3_rounds == cap) throw RoundLimitExceeded("reference path compression phase");
    Groups groups = group(live);
    m.shuffle_records_per_round.push_back(live.size());
    live.clear();

    std::size_t finals = 0;
    for (const auto& [key, neighbors] : groups) {
      std::set<NodeId> cc = neighbors;
      cc.insert(key);
      NodeId top = best_of(config.election, cc);
      bool pruned = key == top || (neighbors.size() == 1 && *neighbors.begin() == top);
      if (pruned) {
        for (NodeId n : cc) offer(n, top);
        finals += cc.size();
        continue;
      }
      for (NodeId n : cc) {
        emit.add(key, {top, n});
        if (n != top) emit.add(key, {n, top});
      }
    }
    live = emit.drain();
    m.checkpointed_per_round.push_back(finals);
    ++m.phase3_rounds;
  }
  result.trace.max_rounds = cap;

  // Chase parents to the root; every chain ends at a self-parented node.
  std::vector<PairRecord> labels;
  for (const auto& [child, parent] : best) {
    NodeId cur = child;
    std::size_t hops = 0;
    while (true) {
      auto it = best.find(cur);
      NodeId next = it == best.end() ? cur : it->second;
      if (next == cur) break;
      cur = next;
      if (++hops > best.size()) throw CycleDetected("reference: parent cycle at " + std::to_string(child));
    }
    labels.push_back({child, cur});
  }
  result.labeling = ComponentLabeling(std::move(labels));
  m.largest_component_size = largest_component(result.labeling);
  m.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace ufs::reference
