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

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "ufs/types.hpp"

namespace ufs::testing {

/// Breadth-first labeling by component minimum. Shares no code with the
/// union-find oracle.
inline std::map<NodeId, NodeId> bfs_components(const std::vector<Edge>& edges) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::map<NodeId, NodeId> label;
  for (const auto& [start, unused] : adj) {
    if (label.count(start)) continue;
    std::vector<NodeId> members{start};
    std::queue<NodeId> q;
    q.push(start);
    label[start] = start;
    while (!q.empty()) {
      NodeId x = q.front();
      q.pop();
      for (NodeId y : adj[x]) {
        if (label.emplace(y, start).second) {
          members.push_back(y);
          q.push(y);
        }
      }
    }
    NodeId low = *std::min_element(members.begin(), members.end());
    for (NodeId m : members) label[m] = low;
  }
  return label;
}

inline std::map<NodeId, NodeId> as_map(const ComponentLabeling& labeling) {
  std::map<NodeId, NodeId> m;
  for (const PairRecord& r : labeling) m[r.child] = r.parent;
  return m;
}

/// Random multigraph with self-loops and duplicates; ids spread over a wide
/// range so that sparse and dense storage both get exercised.
inline std::vector<Edge> random_graph(std::mt19937_64& rng, std::size_t nodes, std::size_t edges,
                                      bool wide_ids = false) {
  std::uniform_int_distribution<NodeId> pick(0, nodes - 1);
  std::vector<NodeId> ids(nodes);
  for (std::size_t i = 0; i < nodes; ++i) ids[i] = wide_ids ? (NodeId{i} * 0x9e3779b1ULL + 17) : i;
  std::vector<Edge> out;
  out.reserve(edges);
  for (std::size_t i = 0; i < edges; ++i) out.push_back({ids[pick(rng)], ids[pick(rng)]});
  return out;
}

inline std::vector<Edge> chain_edges(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back({i, i + 1});
  return out;
}

inline std::vector<Edge> clique_edges(NodeId first, std::size_t size) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) out.push_back({first + i, first + j});
  }
  return out;
}

}  // namespace ufs::testing
