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

#include "ufs/labeling.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace ufs {

namespace {
bool by_child(const PairRecord& a, const PairRecord& b) { return a.child < b.child; }
}  // namespace

ComponentLabeling::ComponentLabeling(std::vector<PairRecord> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].child == entries_[i - 1].child && entries_[i].parent != entries_[i - 1].parent) {
      throw std::invalid_argument("conflicting labels for node " + std::to_string(entries_[i].child));
    }
  }
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

bool ComponentLabeling::contains(NodeId x) const {
  return std::binary_search(entries_.begin(), entries_.end(), PairRecord{x, 0}, by_child);
}

NodeId ComponentLabeling::at(NodeId x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), PairRecord{x, 0}, by_child);
  if (it == entries_.end() || it->child != x) {
    throw std::out_of_range("node " + std::to_string(x) + " has no label");
  }
  return it->parent;
}

bool same_partition(const ComponentLabeling& a, const ComponentLabeling& b) {
  if (a.size() != b.size()) return false;
  // Labels must correspond one-to-one in both directions.
  std::unordered_map<NodeId, NodeId> a_to_b;
  std::unordered_map<NodeId, NodeId> b_to_a;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (ia->child != ib->child) return false;
    auto [fwd, fwd_new] = a_to_b.try_emplace(ia->parent, ib->parent);
    if (!fwd_new && fwd->second != ib->parent) return false;
    auto [rev, rev_new] = b_to_a.try_emplace(ib->parent, ia->parent);
    if (!rev_new && rev->second != ia->parent) return false;
  }
  return true;
}

bool is_star(const ComponentLabeling& labeling) {
  for (const PairRecord& r : labeling) {
    if (!labeling.contains(r.parent) || labeling.at(r.parent) != r.parent) return false;
  }
  return true;
}

std::vector<std::size_t> component_sizes(const ComponentLabeling& labeling) {
  std::unordered_map<NodeId, std::size_t> counts;
  for (const PairRecord& r : labeling) ++counts[r.parent];
  std::vector<std::size_t> sizes;
  sizes.reserve(counts.size());
  for (const auto& [root, n] : counts) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

std::size_t largest_component(const ComponentLabeling& labeling) {
  auto sizes = component_sizes(labeling);
  return sizes.empty() ? 0 : sizes.front();
}

}  // namespace ufs
