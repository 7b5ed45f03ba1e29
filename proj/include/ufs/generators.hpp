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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ufs/types.hpp"

namespace ufs {

enum class GraphKind { kSparse, kCliqueClusters, kChain, kSkewedLcc };

std::string_view to_string(GraphKind kind);
/// Accepts sparse, clique_clusters, chain, skewed_lcc.
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// Components larger than this count as large connected components.
inline constexpr std::size_t kLccThreshold = 5000;

/// Parameters of a synthetic graph. Fields a kind does not use are ignored.
///
///   sparse           node_count >= 1; edge_count uniform random pairs
///                    (self pairs allowed and become singletons).
///   clique_clusters  node_count >= 1, 1 <= cluster_size <= node_count.
///                    Consecutive ids form complete clusters, the last one
///                    possibly smaller; inter_links bridges join cluster i
///                    to i+1 for i < inter_links.
///   chain            node_count >= 1; path 0-1-...-(n-1).
///   skewed_lcc       node_count >= 10, 1 <= hub_count <= node_count / 10,
///                    2 <= tail_exponent <= 8. Every non-hub node attaches to
///                    hub r with probability proportional to r^-tail_exponent;
///                    edges beyond the attachments (edge_count, if larger)
///                    are random pairs inside one hub's component.
///
/// node_count is capped at 2^40. With shuffle_ids the ids above are relabeled
/// by a seeded permutation; edge order is the generation order.
struct GenSpec {
  GraphKind kind = GraphKind::kSparse;
  std::size_t node_count = 1000;
  std::size_t edge_count = 1000;
  std::size_t cluster_size = 32;
  std::size_t inter_links = 0;
  std::size_t hub_count = 16;
  double tail_exponent = 2.0;
  std::uint64_t seed = 1;
  bool shuffle_ids = true;
};

class InvalidSpec : public std::invalid_argument {
 public:
  explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

/// Structure known by construction.
struct GeneratorTruth {
  /// Distinct nodes appearing in the edges.
  std::size_t node_count = 0;
  /// Largest node degree (self-edges excluded).
  std::size_t max_degree = 0;
  /// Set for every kind except sparse.
  std::optional<std::size_t> component_count;
  std::optional<std::size_t> largest_component;
  /// Exact membership, labeled by component minimum. Set for every kind
  /// except sparse.
  std::optional<ComponentLabeling> membership;
};

struct GeneratedGraph {
  std::vector<Edge> edges;
  GeneratorTruth truth;
};

/// Deterministic: equal GenSpec values give identical edge lists on every
/// platform. Throws InvalidSpec for out-of-range parameters.
GeneratedGraph generate(const GenSpec& spec);

}  // namespace ufs
