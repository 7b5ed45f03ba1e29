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

#include "ufs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace ufs {

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 32;
constexpr std::size_t kMaxEdges = std::size_t{1} << 31;

// std::uniform_int_distribution is implementation-defined; these draws are
// not, so the output is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n >= 1 (Lemire's multiply-and-reject).
  std::uint64_t below(std::uint64_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = -n % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidSpec(message);
}

// Raw-id generation. `group` maps every raw node to a component tag when the
// kind's structure is known by construction.
struct RawGraph {
  std::vector<Edge> edges;
  std::vector<std::size_t> group;
};

RawGraph make_sparse(const GenSpec& spec, Rng& rng) {
  RawGraph g;
  g.edges.reserve(spec.edge_count);
  for (std::size_t i = 0; i < spec.edge_count; ++i) {
    NodeId u = rng.below(spec.node_count);
    NodeId v = rng.below(spec.node_count);
    g.edges.push_back({u, v});
  }
  return g;
}

RawGraph make_clique_clusters(const GenSpec& spec) {
  const std::size_t n = spec.node_count;
  const std::size_t s = spec.cluster_size;
  const std::size_t clusters = (n + s - 1) / s;
  require(spec.inter_links < std::max<std::size_t>(clusters, 1),
          "clique_clusters: inter_links must be below the cluster count");
  const std::size_t full = n / s;
  const std::size_t tail = n % s;
  const std::size_t edge_total = full * (s * (s - 1) / 2 + (s == 1)) +
                                 (tail == 0 ? 0 : tail * (tail - 1) / 2 + (tail == 1)) + spec.inter_links;
  require(edge_total <= kMaxEdges, "clique_clusters: too many edges");

  RawGraph g;
  g.edges.reserve(edge_total);
  g.group.resize(n);
  for (std::size_t c = 0; c < clusters; ++c) {
    const std::size_t begin = c * s;
    const std::size_t end = std::min(begin + s, n);
    if (end - begin == 1) g.edges.push_back({begin, begin});
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) g.edges.push_back({i, j});
    }
  }
  // Bridges merge clusters 0..inter_links into one component.
  for (std::size_t c = 0; c < spec.inter_links; ++c) {
    g.edges.push_back({c * s, (c + 1) * s});
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = i / s;
    g.group[i] = c <= spec.inter_links ? 0 : c;
  }
  return g;
}

RawGraph make_chain(const GenSpec& spec) {
  RawGraph g;
  const std::size_t n = spec.node_count;
  if (n == 1) {
    g.edges.push_back({0, 0});
  } else {
    g.edges.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  }
  g.group.assign(n, 0);
  return g;
}

RawGraph make_skewed_lcc(const GenSpec& spec, Rng& rng) {
  const std::size_t n = spec.node_count;
  const std::size_t hubs = spec.hub_count;
  std::vector<double> cumulative(hubs);
  double total = 0.0;
  for (std::size_t r = 0; r < hubs; ++r) {
    total += std::pow(static_cast<double>(r + 1), -spec.tail_exponent);
    cumulative[r] = total;
  }

  RawGraph g;
  g.group.resize(n);
  std::vector<std::vector<NodeId>> members(hubs);
  for (std::size_t h = 0; h < hubs; ++h) {
    g.group[h] = h;
    members[h].push_back(h);
  }
  const std::size_t spokes = n - hubs;
  g.edges.reserve(std::max(spokes, spec.edge_count) + hubs);
  for (std::size_t i = hubs; i < n; ++i) {
    double x = rng.unit() * total;
    auto hub = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), x) -
                                        cumulative.begin());
    hub = std::min(hub, hubs - 1);
    g.group[i] = hub;
    members[hub].push_back(i);
    g.edges.push_back({i, hub});
  }
  for (std::size_t h = 0; h < hubs; ++h) {
    if (members[h].size() == 1) g.edges.push_back({h, h});
  }
  for (std::size_t extra = spokes; extra < spec.edge_count; ++extra) {
    NodeId a = hubs + rng.below(spokes);
    const auto& pool = members[g.group[a]];
    NodeId b = pool[rng.below(pool.size())];
    g.edges.push_back({a, b});
  }
  return g;
}

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kSparse: return "sparse";
    case GraphKind::kCliqueClusters: return "clique_clusters";
    case GraphKind::kChain: return "chain";
    case GraphKind::kSkewedLcc: return "skewed_lcc";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (GraphKind k : {GraphKind::kSparse, GraphKind::kCliqueClusters, GraphKind::kChain,
                      GraphKind::kSkewedLcc}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

GeneratedGraph generate(const GenSpec& spec) {
  require(spec.node_count >= 1, "node_count must be >= 1");
  require(spec.node_count <= kMaxNodes, "node_count must be <= 2^32");
  require(spec.edge_count <= kMaxEdges, "edge_count must be <= 2^31");

  Rng rng(spec.seed);
  RawGraph raw;
  switch (spec.kind) {
    case GraphKind::kSparse:
      raw = make_sparse(spec, rng);
      break;
    case GraphKind::kCliqueClusters:
      require(spec.cluster_size >= 1 && spec.cluster_size <= spec.node_count,
              "clique_clusters: cluster_size must be in [1, node_count]");
      raw = make_clique_clusters(spec);
      break;
    case GraphKind::kChain:
      raw = make_chain(spec);
      break;
    case GraphKind::kSkewedLcc:
      require(spec.node_count >= 10, "skewed_lcc: node_count must be >= 10");
      require(spec.hub_count >= 1 && spec.hub_count <= spec.node_count / 10,
              "skewed_lcc: hub_count must be in [1, node_count / 10]");
      require(spec.tail_exponent >= 2.0 && spec.tail_exponent <= 8.0,
              "skewed_lcc: tail_exponent must be in [2, 8]");
      raw = make_skewed_lcc(spec, rng);
      break;
  }

  const std::size_t n = spec.node_count;
  std::vector<NodeId> relabel(n);
  std::iota(relabel.begin(), relabel.end(), NodeId{0});
  if (spec.shuffle_ids) {
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(relabel[i], relabel[rng.below(i + 1)]);
    }
  }

  GeneratedGraph out;
  GeneratorTruth& truth = out.truth;
  std::vector<std::uint32_t> degree(n, 0);
  std::vector<bool> seen(n, false);
  out.edges.reserve(raw.edges.size());
  for (const Edge& e : raw.edges) {
    seen[e.u] = true;
    seen[e.v] = true;
    if (e.u != e.v) {
      ++degree[e.u];
      ++degree[e.v];
    }
    out.edges.push_back({relabel[e.u], relabel[e.v]});
  }
  std::vector<Edge>().swap(raw.edges);
  truth.node_count = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
  truth.max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  if (!raw.group.empty()) {
    const std::size_t groups = *std::max_element(raw.group.begin(), raw.group.end()) + 1;
    std::vector<NodeId> group_min(groups, ~NodeId{0});
    std::vector<std::size_t> group_size(groups, 0);
    for (std::size_t i = 0; i < n; ++i) {
      group_min[raw.group[i]] = std::min(group_min[raw.group[i]], relabel[i]);
      ++group_size[raw.group[i]];
    }
    std::vector<PairRecord> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = {relabel[i], group_min[raw.group[i]]};
    truth.membership = ComponentLabeling(std::move(labels));
    truth.component_count =
        static_cast<std::size_t>(std::count_if(group_size.begin(), group_size.end(),
                                               [](std::size_t s) { return s > 0; }));
    truth.largest_component = *std::max_element(group_size.begin(), group_size.end());
  }
  return out;
}

}  // namespace ufs
