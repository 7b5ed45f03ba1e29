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

#include <compare>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ufs {

using NodeId = std::uint64_t;

/// Undirected linkage between two nodes. (u, v) and (v, u) are the same edge.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed child -> parent linkage. child == parent is a self-linkage: either
/// a new-parent announcement or a singleton.
struct PairRecord {
  NodeId child = 0;
  NodeId parent = 0;

  friend constexpr bool operator==(const PairRecord&, const PairRecord&) = default;
  friend constexpr auto operator<=>(const PairRecord&, const PairRecord&) = default;
};

/// Node -> component representative, stored as records sorted by child.
/// Iteration order is ascending child id.
class ComponentLabeling {
 public:
  ComponentLabeling() = default;

  /// Sorts by child. Duplicate children must carry the same label.
  explicit ComponentLabeling(std::vector<PairRecord> entries);
  ComponentLabeling(std::initializer_list<PairRecord> entries)
      : ComponentLabeling(std::vector<PairRecord>(entries)) {}

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] bool contains(NodeId x) const;
  /// Label of x; throws std::out_of_range when x is unlabeled.
  [[nodiscard]] NodeId at(NodeId x) const;

  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }
  [[nodiscard]] const std::vector<PairRecord>& entries() const { return entries_; }

  friend bool operator==(const ComponentLabeling&, const ComponentLabeling&) = default;

 private:
  std::vector<PairRecord> entries_;
};

/// Parent election rule used by the shuffle rounds.
enum class Election { kMin, kMax };

/// True when `a` wins an election against `b`.
constexpr bool prefers(Election e, NodeId a, NodeId b) noexcept {
  return e == Election::kMin ? a < b : a > b;
}

constexpr NodeId pick(Election e, NodeId a, NodeId b) noexcept {
  return prefers(e, b, a) ? b : a;
}

/// Raised when a round loop exceeds its configured cap.
class RoundLimitExceeded : public std::runtime_error {
 public:
  explicit RoundLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by consolidation when pointer jumping does not reach a fixpoint.
class CycleDetected : public std::runtime_error {
 public:
  explicit CycleDetected(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ufs
