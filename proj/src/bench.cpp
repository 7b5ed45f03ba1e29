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

#include "ufs/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ufs/baselines.hpp"
#include "ufs/dsu.hpp"
#include "ufs/engine.hpp"
#include "ufs/labeling.hpp"

namespace ufs {

namespace {

BenchDataset sparse(std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.kind = GraphKind::kSparse;
  s.node_count = n;
  s.edge_count = n;
  s.seed = seed;
  return {"sparse_" + std::to_string(n), s};
}

BenchDataset skewed(std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.kind = GraphKind::kSkewedLcc;
  s.node_count = n;
  s.edge_count = 2 * n;
  s.hub_count = std::max<std::size_t>(1, n / 1000);
  s.tail_exponent = 2.0;
  s.seed = seed;
  return {"skewed_lcc_" + std::to_string(n), s};
}

BenchDataset chain(std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.kind = GraphKind::kChain;
  s.node_count = n;
  s.seed = seed;
  return {"chain_" + std::to_string(n), s};
}

BenchDataset cliques(std::size_t clusters, std::size_t size, std::uint64_t seed) {
  GenSpec s;
  s.kind = GraphKind::kCliqueClusters;
  s.node_count = clusters * size;
  s.cluster_size = size;
  s.seed = seed;
  return {"clique_clusters_" + std::to_string(clusters) + "x" + std::to_string(size), s};
}

void check(const ComponentLabeling& got, const ComponentLabeling& oracle, const std::string& what) {
  if (!same_partition(got, oracle)) throw std::runtime_error("bench: " + what + " disagrees with oracle");
}

}  // namespace

std::vector<std::string> bench_suite_names() { return {"smoke", "desk"}; }

std::vector<BenchDataset> bench_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "smoke") {
    return {sparse(2000, seed), skewed(2000, seed), chain(1024, seed), cliques(16, 32, seed)};
  }
  if (suite == "desk") {
    return {sparse(10'000, seed),        sparse(100'000, seed),  sparse(1'000'000, seed),
            skewed(10'000, seed),        skewed(100'000, seed),  skewed(1'000'000, seed),
            chain(4096, seed),           chain(65'536, seed),    cliques(256, 32, seed),
            cliques(1024, 64, seed)};
  }
  throw std::invalid_argument("unknown bench suite '" + suite + "'");
}

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  for (const BenchDataset& ds : bench_suite(options.suite, options.seed)) {
    GeneratedGraph g = generate(ds.spec);
    ComponentLabeling oracle;
    if (options.verify) oracle = sequential_components(g.edges);

    for (bool local : {true, false}) {
      EngineConfig config;
      config.partitions = options.partitions;
      config.workers = options.workers;
      config.local_uf = local;
      RunResult r = run(g.edges, config);
      std::string algo = local ? kAlgoUfs : kAlgoUfsNoLocal;
      if (options.verify) check(r.labeling, oracle, ds.name + "/" + algo);
      report.rows.push_back({ds.name, algo, g.edges.size(), r.metrics.total_rounds(),
                             r.metrics.total_shuffle_records(), r.metrics.wall_time_ms});
    }

    BaselineResult b = run_alternating(g.edges, 0, options.partitions);
    if (options.verify) check(b.labeling, oracle, ds.name + "/" + kAlgoStars);
    report.rows.push_back({ds.name, kAlgoStars, g.edges.size(), b.metrics.total_rounds(),
                           b.metrics.total_shuffle_records(), b.metrics.wall_time_ms});
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.dataset, a.algorithm) < std::tie(b.dataset, b.algorithm);
  });
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "dataset,algorithm,edges,rounds,shuffle_records,wall_time_ms\n";
  char wall[32];
  for (const BenchRow& r : report.rows) {
    std::snprintf(wall, sizeof(wall), "%.3f", r.wall_time_ms);
    out << r.dataset << ',' << r.algorithm << ',' << r.edges << ',' << r.rounds << ','
        << r.shuffle_records << ',' << wall << '\n';
  }
}

}  // namespace ufs
