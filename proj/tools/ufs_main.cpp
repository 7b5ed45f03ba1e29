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

// ufs: generate graphs, compute connected components, verify labelings and
// run the comparison benchmark.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ufs/bench.hpp"
#include "ufs/dsu.hpp"
#include "ufs/engine.hpp"
#include "ufs/generators.hpp"
#include "ufs/io.hpp"
#include "ufs/labeling.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct GenArgs {
  std::string kind;
  ufs::GenSpec spec;
  bool keep_ids = false;
  std::string output;
};

struct RunArgs {
  std::string input;
  std::string output;
  std::string metrics;
  std::string format;
  std::string election = "min";
  bool strings = false;
  bool no_local_uf = false;
  bool per_edge = false;
  ufs::EngineConfig config;
};

struct VerifyArgs {
  std::string input;
  std::string labeling;
  std::string format;
  bool strings = false;
};

struct BenchArgs {
  ufs::BenchOptions options;
  std::string output;
  bool no_verify = false;
};

ufs::EdgeFormat pick_format(const std::string& flag, const std::string& path) {
  if (flag == "csv") return ufs::EdgeFormat::kCsv;
  if (flag == "tsv") return ufs::EdgeFormat::kTsv;
  return ufs::format_for_path(path);
}

int do_gen(GenArgs& args) {
  auto kind = ufs::parse_graph_kind(args.kind);
  if (!kind) {
    std::cerr << "gen: unknown kind '" << args.kind << "'\n";
    return kExitUsage;
  }
  args.spec.kind = *kind;
  args.spec.shuffle_ids = !args.keep_ids;
  ufs::GeneratedGraph g = ufs::generate(args.spec);
  ufs::write_edges(args.output, g.edges);
  std::cerr << "gen: " << g.edges.size() << " edges, " << g.truth.node_count << " nodes, max degree "
            << g.truth.max_degree;
  if (g.truth.component_count) std::cerr << ", " << *g.truth.component_count << " components";
  std::cerr << '\n';
  return 0;
}

int do_run(RunArgs& args) {
  args.config.election = args.election == "max" ? ufs::Election::kMax : ufs::Election::kMin;
  args.config.local_uf = !args.no_local_uf;
  if (args.per_edge) args.config.local_emission = ufs::LocalEmission::kPerEdge;

  ufs::EdgeInput input = ufs::read_edges(args.input, pick_format(args.format, args.input), args.strings);
  ufs::RunResult result = ufs::run(input.edges, args.config);

  const ufs::IdDictionary* dict = input.dictionary ? &*input.dictionary : nullptr;
  if (args.output.empty()) {
    ufs::write_labeling(std::cout, result.labeling, dict);
  } else {
    ufs::write_labeling(args.output, result.labeling, dict);
  }
  if (!args.metrics.empty()) ufs::write_metrics(args.metrics, result.metrics);
  return 0;
}

int do_verify(VerifyArgs& args) {
  ufs::EdgeInput input = ufs::read_edges(args.input, pick_format(args.format, args.input), args.strings);
  ufs::IdDictionary* dict = input.dictionary ? &*input.dictionary : nullptr;
  ufs::ComponentLabeling labeling = ufs::read_labeling(args.labeling, dict);
  ufs::ComponentLabeling oracle = ufs::sequential_components(input.edges);
  if (!ufs::same_partition(labeling, oracle)) {
    std::cerr << "verify: labeling does not match the reference components\n";
    return kExitMismatch;
  }
  if (!ufs::is_star(labeling)) {
    std::cerr << "verify: labeling is not a star (some root is not its own label)\n";
    return kExitMismatch;
  }
  std::cerr << "verify: ok (" << oracle.size() << " nodes, " << ufs::component_sizes(oracle).size()
            << " components)\n";
  return 0;
}

int do_bench(BenchArgs& args) {
  args.options.verify = !args.no_verify;
  ufs::BenchReport report = ufs::run_bench(args.options);
  if (args.output.empty() || args.output == "-") {
    ufs::write_bench_csv(std::cout, report);
    return 0;
  }
  std::ofstream out(args.output);
  if (!out) throw ufs::IoError("cannot write " + args.output);
  ufs::write_bench_csv(out, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Union-find shuffle connected components"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic edge list");
  gen_cmd->add_option("--kind", gen.kind, "sparse | clique_clusters | chain | skewed_lcc")->required();
  gen_cmd->add_option("--nodes", gen.spec.node_count, "Node count")->capture_default_str();
  gen_cmd->add_option("--edges", gen.spec.edge_count, "Edge count (sparse, skewed_lcc)")->capture_default_str();
  gen_cmd->add_option("--cluster-size", gen.spec.cluster_size, "Clique size")->capture_default_str();
  gen_cmd->add_option("--inter-links", gen.spec.inter_links, "Bridges between consecutive cliques");
  gen_cmd->add_option("--hubs", gen.spec.hub_count, "Hub count (skewed_lcc)")->capture_default_str();
  gen_cmd->add_option("--tail-exponent", gen.spec.tail_exponent, "Hub popularity exponent")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.spec.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_flag("--keep-ids", gen.keep_ids, "Do not relabel node ids");
  gen_cmd->add_option("-o,--output", gen.output, "Edge file (.csv for comma separated)")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Compute connected components");
  run_cmd->add_option("--input", run.input, "Edge file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("-o,--output", run.output, "Labeling file (stdout when omitted)");
  run_cmd->add_option("--partitions", run.config.partitions, "Logical partitions (k)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--election", run.election, "Parent election")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  run_cmd->add_flag("--no-local-uf", run.no_local_uf, "Emit both endpoints instead of local stars");
  run_cmd->add_flag("--per-edge-emission", run.per_edge, "Emit per union instead of flattened stars");
  run_cmd->add_option("--metrics", run.metrics, "Write run metrics as JSON");
  run_cmd->add_option("--max-rounds", run.config.max_rounds, "Round cap per phase (0 = automatic)");
  run_cmd->add_option("--workers", run.config.workers, "OpenMP threads (0 = all)")->capture_default_str();
  run_cmd->add_option("--memory-budget", run.config.checkpoint_memory_budget,
                      "In-memory checkpoint records before spilling")
      ->capture_default_str();
  run_cmd->add_option("--format", run.format, "tsv | csv (default: by extension)")
      ->check(CLI::IsMember({"tsv", "csv"}));
  run_cmd->add_flag("--strings", run.strings, "Treat node ids as strings");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a labeling with the sequential oracle");
  verify_cmd->add_option("--input", verify.input, "Edge file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--labeling", verify.labeling, "Labeling file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--format", verify.format, "tsv | csv (default: by extension)")
      ->check(CLI::IsMember({"tsv", "csv"}));
  verify_cmd->add_flag("--strings", verify.strings, "Treat node ids as strings");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Compare UFS, UFS without local UF and large/small star");
  bench_cmd->add_option("--suite", bench.options.suite, "smoke | desk")
      ->check(CLI::IsMember(ufs::bench_suite_names()))
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.options.seed, "Dataset seed")->capture_default_str();
  bench_cmd->add_option("--partitions", bench.options.partitions, "Logical partitions (k)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--workers", bench.options.workers, "OpenMP threads (0 = all)")->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (stdout when omitted)");
  bench_cmd->add_flag("--no-verify", bench.no_verify, "Skip the oracle check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen);
    if (*run_cmd) return do_run(run);
    if (*verify_cmd) return do_verify(verify);
    if (*bench_cmd) return do_bench(bench);
  } catch (const ufs::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
