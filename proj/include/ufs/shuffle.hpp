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
#include <span>
#include <vector>

#include "ufs/types.hpp"

namespace ufs {

inline constexpr std::uint64_t kDefaultHashSeed = 0x5eed'cafe'f00d'1234ULL;

/// Bucket that owns `child` after a shuffle over k partitions.
constexpr std::size_t bucket_of(NodeId child, std::size_t k, std::uint64_t seed) noexcept {
  std::uint64_t h = (child ^ seed) * 0x9e37'79b9'7f4a'7c15ULL;
  h ^= h >> 32;
  return static_cast<std::size_t>(h % k);
}

/// Records regrouped at a shuffle boundary. Bucket b holds exactly the
/// records whose child hashes to b, sorted by (child, parent) with
/// duplicates removed, so every child's records form one contiguous group.
struct PartitionSet {
  std::size_t k = 1;
  std::vector<std::vector<PairRecord>> buckets;
  std::size_t round_index = 0;

  [[nodiscard]] std::size_t record_count() const;
  [[nodiscard]] std::size_t group_count() const;
  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;
};

/// Calls fn(child, records) once per child group of a sorted bucket.
template <typename Fn>
void for_each_group(std::span<const PairRecord> bucket, Fn&& fn) {
  std::size_t begin = 0;
  while (begin < bucket.size()) {
    std::size_t end = begin + 1;
    while (end < bucket.size() && bucket[end].child == bucket[begin].child) ++end;
    fn(bucket[begin].child, bucket.subspan(begin, end - begin));
    begin = end;
  }
}

/// Scatters records into k buckets by hashed child, then sorts and
/// deduplicates each bucket. Output does not depend on `workers`.
PartitionSet shuffle_by_child(std::span<const PairRecord> records, std::size_t k,
                              std::uint64_t seed = kDefaultHashSeed, std::size_t workers = 1);

}  // namespace ufs
