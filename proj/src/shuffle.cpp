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

#include "ufs/shuffle.hpp"

#include <algorithm>
#include <stdexcept>

#include "ufs/parallel.hpp"

namespace ufs {

std::size_t PartitionSet::record_count() const {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.size();
  return n;
}

std::size_t PartitionSet::group_count() const {
  std::size_t n = 0;
  for (const auto& b : buckets) {
    for_each_group(b, [&](NodeId, std::span<const PairRecord>) { ++n; });
  }
  return n;
}

PartitionSet shuffle_by_child(std::span<const PairRecord> records, std::size_t k,
                              std::uint64_t seed, std::size_t workers) {
  if (k == 0) throw std::invalid_argument("shuffle_by_child: k must be >= 1");
  const int threads = resolve_workers(workers);
  const std::size_t n = records.size();

  // Two-pass counting scatter: chunk c counts its records per bucket, a prefix
  // sum fixes every chunk's write offset, then each chunk scatters in place.
  const std::size_t chunks = static_cast<std::size_t>(threads);
  std::vector<std::size_t> counts(chunks * k, 0);
  auto chunk_begin = [&](std::size_t c) { return n * c / chunks; };

#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t* row = counts.data() + c * k;
    for (std::size_t i = chunk_begin(c); i < chunk_begin(c + 1); ++i) {
      ++row[bucket_of(records[i].child, k, seed)];
    }
  }

  PartitionSet out;
  out.k = k;
  out.buckets.resize(k);
  std::vector<std::size_t> offsets(chunks * k, 0);
  for (std::size_t b = 0; b < k; ++b) {
    std::size_t running = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
      offsets[c * k + b] = running;
      running += counts[c * k + b];
    }
    out.buckets[b].resize(running);
  }

#pragma omp parallel for num_threads(threads) schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t* cursor = offsets.data() + c * k;
    for (std::size_t i = chunk_begin(c); i < chunk_begin(c + 1); ++i) {
      std::size_t b = bucket_of(records[i].child, k, seed);
      out.buckets[b][cursor[b]++] = records[i];
    }
  }

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::size_t b = 0; b < k; ++b) {
    auto& bucket = out.buckets[b];
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }
  return out;
}

}  // namespace ufs
