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

#include "ufs/dsu.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufs {

DisjointSetForest DisjointSetForest::dense(NodeId universe) {
  DisjointSetForest f;
  f.dense_ = true;
  f.dense_index_.assign(static_cast<std::size_t>(universe), kNone);
  return f;
}

void DisjointSetForest::reserve(std::size_t nodes) {
  ids_.reserve(nodes);
  parent_.reserve(nodes);
  size_.reserve(nodes);
  if (!dense_) sparse_index_.reserve(nodes);
}

std::size_t DisjointSetForest::lookup(NodeId x) const {
  if (dense_) {
    return x < dense_index_.size() ? dense_index_[x] : kNone;
  }
  auto it = sparse_index_.find(x);
  return it == sparse_index_.end() ? kNone : it->second;
}

std::size_t DisjointSetForest::checked_slot(NodeId x) const {
  std::size_t s = lookup(x);
  if (s == kNone) {
    throw std::out_of_range("node " + std::to_string(x) + " is not registered");
  }
  return s;
}

std::size_t DisjointSetForest::touch(NodeId x) {
  std::size_t slot = ids_.size();
  if (dense_) {
    if (x >= dense_index_.size()) {
      throw std::out_of_range("node " + std::to_string(x) + " outside dense universe");
    }
    std::size_t& entry = dense_index_[x];
    if (entry != kNone) return entry;
    entry = slot;
  } else {
    auto [it, inserted] = sparse_index_.try_emplace(x, slot);
    if (!inserted) return it->second;
  }
  ids_.push_back(x);
  parent_.push_back(slot);
  size_.push_back(1);
  return slot;
}

std::size_t DisjointSetForest::find_slot(std::size_t s) {
  std::size_t root = s;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[s] != root) {
    std::size_t next = parent_[s];
    parent_[s] = root;
    s = next;
  }
  return root;
}

NodeId DisjointSetForest::find(NodeId x) { return ids_[find_slot(touch(x))]; }

NodeId DisjointSetForest::unite(NodeId u, NodeId v) {
  std::size_t ru = find_slot(touch(u));
  std::size_t rv = find_slot(touch(v));
  if (ru == rv) return ids_[ru];

  // Larger tree survives; equal sizes keep the smaller id as root.
  bool keep_u = size_[ru] > size_[rv] || (size_[ru] == size_[rv] && ids_[ru] < ids_[rv]);
  std::size_t winner = keep_u ? ru : rv;
  std::size_t loser = keep_u ? rv : ru;
  parent_[loser] = winner;
  size_[winner] += size_[loser];
  return ids_[winner];
}

std::vector<PairRecord> DisjointSetForest::flatten() {
  std::vector<PairRecord> out;
  out.reserve(ids_.size());
  for (std::size_t s = 0; s < ids_.size(); ++s) {
    out.push_back({ids_[s], ids_[find_slot(s)]});
  }
  return out;
}

NodeId DisjointSetForest::parent_of(NodeId x) const { return ids_[parent_[checked_slot(x)]]; }

NodeId DisjointSetForest::root_of(NodeId x) const {
  std::size_t s = checked_slot(x);
  while (parent_[s] != s) s = parent_[s];
  return ids_[s];
}

std::size_t DisjointSetForest::tree_size(NodeId root) const {
  std::size_t s = checked_slot(root);
  if (parent_[s] != s) {
    throw std::invalid_argument("node " + std::to_string(root) + " is not a root");
  }
  return size_[s];
}

std::size_t DisjointSetForest::depth(NodeId x) const {
  std::size_t s = checked_slot(x);
  std::size_t hops = 0;
  while (parent_[s] != s) {
    s = parent_[s];
    ++hops;
  }
  return hops;
}

ComponentLabeling sequential_components(std::span<const Edge> edges) {
  NodeId max_id = 0;
  for (const Edge& e : edges) max_id = std::max({max_id, e.u, e.v});

  // Ids from dictionary encoding or the generators are dense; anything with a
  // much wider id range goes through the hash table.
  bool dense = !edges.empty() && max_id < 4 * static_cast<NodeId>(edges.size()) + 1024;
  DisjointSetForest forest = dense ? DisjointSetForest::dense(max_id + 1) : DisjointSetForest{};
  if (!dense) forest.reserve(edges.size());

  for (const Edge& e : edges) {
    if (e.u == e.v) {
      forest.touch(e.u);
    } else {
      forest.unite(e.u, e.v);
    }
  }

  std::unordered_map<NodeId, NodeId> component_min;
  std::vector<PairRecord> flat = forest.flatten();
  for (const PairRecord& r : flat) {
    auto [it, inserted] = component_min.try_emplace(r.parent, r.child);
    if (!inserted) it->second = std::min(it->second, r.child);
  }

  for (PairRecord& r : flat) r.parent = component_min.at(r.parent);
  return ComponentLabeling(std::move(flat));
}

}  // namespace ufs
