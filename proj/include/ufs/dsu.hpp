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
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "ufs/types.hpp"

namespace ufs {

/// Weighted quick-union with path compression over 64-bit node ids.
///
/// Nodes register themselves on first touch. Unions link the root of the
/// smaller tree under the root of the larger one; on equal sizes the smaller
/// id stays root. Ids are mapped to dense slots either through a hash table
/// (default) or, for forests built with dense(), through a flat array.
///
/// Single writer. Distinct instances are independent.
class DisjointSetForest {
 public:
  DisjointSetForest() = default;

  /// Flat-array backed forest for ids in [0, universe).
  static DisjointSetForest dense(NodeId universe);

  void reserve(std::size_t nodes);

  /// Registers x as a singleton if it is unknown. Returns its slot.
  std::size_t touch(NodeId x);

  /// Root of x. Every node on the traversed path is re-pointed at the root.
  NodeId find(NodeId x);

  /// Merges the trees of u and v and returns the surviving root.
  NodeId unite(NodeId u, NodeId v);

  /// One (n, root(n)) record per registered node, in registration order.
  /// Leaves every node pointing directly at its root.
  std::vector<PairRecord> flatten();

  [[nodiscard]] bool contains(NodeId x) const { return lookup(x) != kNone; }
  [[nodiscard]] std::size_t node_count() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }

  /// Registered ids in first-touch order.
  [[nodiscard]] const std::vector<NodeId>& nodes() const { return ids_; }

  // Read-only inspection; these never compress. x must be registered.
  [[nodiscard]] NodeId parent_of(NodeId x) const;
  [[nodiscard]] NodeId root_of(NodeId x) const;
  [[nodiscard]] std::size_t tree_size(NodeId root) const;
  [[nodiscard]] std::size_t depth(NodeId x) const;

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  [[nodiscard]] std::size_t lookup(NodeId x) const;
  [[nodiscard]] std::size_t checked_slot(NodeId x) const;
  std::size_t find_slot(std::size_t s);

  bool dense_ = false;
  std::vector<std::size_t> dense_index_;
  std::unordered_map<NodeId, std::size_t> sparse_index_;

  std::vector<NodeId> ids_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Whole-input connected components. Every node that appears in `edges` is
/// labeled with the minimum id of its component.
ComponentLabeling sequential_components(std::span<const Edge> edges);

}  // namespace ufs
