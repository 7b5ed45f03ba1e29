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
#include <iosfwd>
#include <string>
#include <vector>

#include "ufs/generators.hpp"

namespace ufs {

inline constexpr const char* kAlgoUfs = "ufs";
inline constexpr const char* kAlgoUfsNoLocal = "ufs_no_local_uf";
inline constexpr const char* kAlgoStars = "large_small_star";

struct BenchDataset {
  std::string name;
  GenSpec spec;
};

/// Named dataset lists: "smoke" (seconds) and "desk" (the default).
/// Throws std::invalid_argument for unknown names.
std::vector<BenchDataset> bench_suite(const std::string& suite, std::uint64_t seed);
std::vector<std::string> bench_suite_names();

struct BenchRow {
  std::string dataset;
  std::string algorithm;
  std::size_t edges = 0;
  std::size_t rounds = 0;
  std::size_t shuffle_records = 0;
  double wall_time_ms = 0.0;
};

/// Rows sorted by (dataset, algorithm).
struct BenchReport {
  std::vector<BenchRow> rows;
};

struct BenchOptions {
  std::string suite = "desk";
  std::uint64_t seed = 1;
  std::size_t partitions = 64;
  std::size_t workers = 1;
  /// Check every labeling against the sequential oracle.
  bool verify = true;
};

/// Runs UFS, UFS without local union-find and large-star/small-star on every
/// dataset of the suite. Throws std::runtime_error if verification fails.
BenchReport run_bench(const BenchOptions& options);

/// Header: dataset,algorithm,edges,rounds,shuffle_records,wall_time_ms
void write_bench_csv(std::ostream& out, const BenchReport& report);

}  // namespace ufs
