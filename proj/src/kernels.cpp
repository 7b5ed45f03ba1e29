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

#include "ufs/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufs/dsu.hpp"
#include "ufs/parallel.hpp"

namespace ufs {

namespace {

// Each bucket acts as one producer and drops its own duplicate emissions
// before they reach the next shuffle.
void combine(std::vector<PairRecord>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

template <typename T>
std::vector<T> concat(std::vector<std::vector<T>>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<T> out;
  out.reserve(total);
  for (auto& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
    std::vector<T>().swap(p);
  }
  return out;
}

NodeId elect(Election e, std::span<const PairRecord> group_sorted_by_parent) {
  return e == Election::kMin ? group_sorted_by_parent.front().parent
                             : group_sorted_by_parent.back().parent;
}

}  // namespace

std::vector<std::span<const Edge>> load_partitions(std::span<const Edge> edges, std::size_t k) {
  if (k == 0) throw std::invalid_argument("load_partitions: k must be >= 1");
  std::vector<std::span<const Edge>> parts;
  parts.reserve(k);
  const std::size_t base = edges.size() / k;
  const std::size_t extra = edges.size() % k;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t len = base + (p < extra ? 1 : 0);
    parts.push_back(edges.subspan(offset, len));
    offset += len;
  }
  return parts;
}

std::vector<PairRecord> weighted_union_phase(std::span<const Edge> partition) {
  DisjointSetForest forest;
  forest.reserve(partition.size());
  for (const Edge& e : partition) {
    if (e.u == e.v) {
      forest.touch(e.u);
    } else {
      forest.unite(e.u, e.v);
    }
  }
  return forest.flatten();
}

std::vector<PairRecord> weighted_union_phase_per_edge(std::span<const Edge> partition) {
  DisjointSetForest forest;
  forest.reserve(partition.size());
  std::vector<PairRecord> out;
  std::vector<NodeId> new_parents;
  for (const Edge& e : partition) {
    if (e.u == e.v) {
      if (!forest.contains(e.u)) out.push_back({e.u, e.u});
      forest.touch(e.u);
      continue;
    }
    NodeId ru = forest.find(e.u);
    NodeId rv = forest.find(e.v);
    if (ru == rv) continue;
    NodeId root = forest.unite(e.u, e.v);
    out.push_back({root == ru ? e.v : e.u, root});
    new_parents.push_back(root);
  }
  std::sort(new_parents.begin(), new_parents.end());
  new_parents.erase(std::unique(new_parents.begin(), new_parents.end()), new_parents.end());
  for (NodeId p : new_parents) out.push_back({p, p});
  return out;
}

std::vector<PairRecord> initial_records_without_local_uf(std::span<const Edge> partition) {
  std::vector<PairRecord> out;
  out.reserve(2 * partition.size());
  for (const Edge& e : partition) {
    out.push_back({e.u, e.v});
    if (e.u != e.v) out.push_back({e.v, e.u});
  }
  return out;
}

ElectionRoundOutput process_partition_round(const PartitionSet& groups, Election election,
                                            std::size_t workers) {
  const std::size_t k = groups.buckets.size();
  std::vector<std::vector<PairRecord>> checkpoints(k);
  std::vector<std::vector<PairRecord>> emitted(k);
  std::vector<std::vector<NodeId>> settled(k);
  std::vector<std::size_t> widest(k, 0);

#pragma omp parallel for num_threads(resolve_workers(workers)) schedule(dynamic, 1)
  for (std::size_t b = 0; b < k; ++b) {
    for_each_group(groups.buckets[b], [&](NodeId child, std::span<const PairRecord> cp) {
      widest[b] = std::max(widest[b], cp.size());
      if (cp.size() == 1) {
        if (cp.front().parent == child) {
          settled[b].push_back(child);
        } else {
          checkpoints[b].push_back(cp.front());
        }
        return;
      }
      const NodeId np = elect(election, cp);
      bool child_is_candidate = false;
      for (const PairRecord& r : cp) {
        emitted[b].push_back({r.parent, np});
        child_is_candidate |= r.parent == child;
      }
      if (!child_is_candidate) emitted[b].push_back({child, np});
    });
    combine(emitted[b]);
  }

  ElectionRoundOutput out;
  out.checkpoints = concat(checkpoints);
  out.emitted = concat(emitted);
  out.settled_roots = concat(settled);
  out.max_candidates = widest.empty() ? 0 : *std::max_element(widest.begin(), widest.end());
  return out;
}

std::vector<PairRecord> self_join(std::span<const PairRecord> checkpoints) {
  std::vector<PairRecord> out;
  out.reserve(2 * checkpoints.size());
  for (const PairRecord& r : checkpoints) {
    out.push_back(r);
    if (r.child != r.parent) out.push_back({r.parent, r.child});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompressionRoundOutput path_compression_round(const PartitionSet& groups, Election election,
                                              std::size_t workers) {
  const std::size_t k = groups.buckets.size();
  std::vector<std::vector<PairRecord>> finals(k);
  std::vector<std::vector<PairRecord>> emitted(k);

#pragma omp parallel for num_threads(resolve_workers(workers)) schedule(dynamic, 1)
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<NodeId> members;
    for_each_group(groups.buckets[b], [&](NodeId key, std::span<const PairRecord> group) {
      members.clear();
      members.push_back(key);
      for (const PairRecord& r : group) members.push_back(r.parent);
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      const NodeId best = election == Election::kMin ? members.front() : members.back();

      // Every record has `key` on the left, so the group survives only when
      // both key and some right-hand node lose to `best`.
      bool pruned = true;
      for (const PairRecord& r : group) {
        if (prefers(election, best, r.child) && prefers(election, best, r.parent)) {
          pruned = false;
          break;
        }
      }

      if (pruned) {
        for (NodeId n : members) finals[b].push_back({n, best});
        return;
      }
      for (NodeId n : members) {
        emitted[b].push_back({best, n});
        if (n != best) emitted[b].push_back({n, best});
      }
    });
    combine(emitted[b]);
  }

  CompressionRoundOutput out;
  out.finals = concat(finals);
  out.emitted = concat(emitted);
  return out;
}

}  // namespace ufs
