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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <span>
#include <vector>

#include "ufs/types.hpp"

namespace ufs {

enum class CheckpointPhase : std::uint8_t { kShuffle = 0, kCompression = 1 };

inline constexpr std::size_t kSpillRecordBytes = 16;

/// Spill directory: $UFS_TMPDIR when set, else the system temp directory.
std::filesystem::path default_spill_dir();

/// Little-endian (child, parent) encoding used by spill files.
std::array<unsigned char, kSpillRecordBytes> encode_spill_record(const PairRecord& r);
PairRecord decode_spill_record(std::span<const unsigned char, kSpillRecordBytes> bytes);

/// Append-only store of terminal child -> parent records, one segment per
/// phase. A segment stays in memory until the store holds more than
/// `memory_budget` in-memory records; from then on it lives in an
/// append-only spill file of 16-byte little-endian records. Spill files are
/// removed when the store is destroyed.
class CheckpointStore {
 public:
  explicit CheckpointStore(std::size_t memory_budget = kDefaultMemoryBudget,
                           std::filesystem::path spill_dir = {});
  ~CheckpointStore();

  CheckpointStore(const CheckpointStore&) = delete;
  CheckpointStore& operator=(const CheckpointStore&) = delete;
  CheckpointStore(CheckpointStore&&) noexcept;
  CheckpointStore& operator=(CheckpointStore&&) noexcept;

  static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 26;

  /// Throws std::logic_error once the store is sealed.
  void append(CheckpointPhase phase, std::span<const PairRecord> records);
  void append(CheckpointPhase phase, const PairRecord& record) { append(phase, {&record, 1}); }

  /// Ends the append-only period.
  void seal();
  [[nodiscard]] bool sealed() const { return sealed_; }

  [[nodiscard]] std::size_t size(CheckpointPhase phase) const;
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] bool spilled(CheckpointPhase phase) const;
  /// Empty path when the segment never spilled.
  [[nodiscard]] const std::filesystem::path& spill_path(CheckpointPhase phase) const;

  /// Streams a segment in append order, in batches.
  void scan(CheckpointPhase phase,
            const std::function<void(std::span<const PairRecord>)>& visit) const;
  [[nodiscard]] std::vector<PairRecord> load(CheckpointPhase phase) const;

 private:
  struct Segment {
    std::vector<PairRecord> memory;
    std::filesystem::path path;
    std::ofstream file;
    std::size_t spilled = 0;
  };

  Segment& segment(CheckpointPhase p) { return segments_[static_cast<std::size_t>(p)]; }
  [[nodiscard]] const Segment& segment(CheckpointPhase p) const {
    return segments_[static_cast<std::size_t>(p)];
  }
  void spill(CheckpointPhase phase);
  void write(Segment& seg, std::span<const PairRecord> records);
  void flush_files();
  void remove_files() noexcept;

  std::size_t memory_budget_;
  std::filesystem::path spill_dir_;
  std::array<Segment, 2> segments_;
  bool sealed_ = false;
};

/// Resolves the store into a star labeling: each child keeps the parent its
/// election prefers, then labels are pointer-jumped to a fixpoint. Parents
/// that never appear as children are roots. Throws CycleDetected when the
/// jumping fails to settle within floor(log2(n)) + 2 sweeps or settles on a
/// node that is not a root.
ComponentLabeling consolidate(const CheckpointStore& store, Election election = Election::kMin);

}  // namespace ufs
