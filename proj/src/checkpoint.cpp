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

#include "ufs/checkpoint.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace ufs {

namespace {

std::atomic<std::uint64_t> g_spill_counter{0};

constexpr std::size_t kScanBatch = 1 << 16;

void put_le64(unsigned char* out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_le64(const unsigned char* in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{in[i]} << (8 * i);
  return v;
}

const char* phase_name(CheckpointPhase p) {
  return p == CheckpointPhase::kShuffle ? "shuffle" : "compression";
}

}  // namespace

std::filesystem::path default_spill_dir() {
  if (const char* dir = std::getenv("UFS_TMPDIR"); dir != nullptr && *dir != '\0') {
    return dir;
  }
  return std::filesystem::temp_directory_path();
}

std::array<unsigned char, kSpillRecordBytes> encode_spill_record(const PairRecord& r) {
  std::array<unsigned char, kSpillRecordBytes> bytes{};
  put_le64(bytes.data(), r.child);
  put_le64(bytes.data() + 8, r.parent);
  return bytes;
}

PairRecord decode_spill_record(std::span<const unsigned char, kSpillRecordBytes> bytes) {
  return {get_le64(bytes.data()), get_le64(bytes.data() + 8)};
}

CheckpointStore::CheckpointStore(std::size_t memory_budget, std::filesystem::path spill_dir)
    : memory_budget_(memory_budget), spill_dir_(std::move(spill_dir)) {
  if (spill_dir_.empty()) spill_dir_ = default_spill_dir();
}

CheckpointStore::~CheckpointStore() { remove_files(); }

CheckpointStore::CheckpointStore(CheckpointStore&& other) noexcept
    : memory_budget_(other.memory_budget_),
      spill_dir_(std::move(other.spill_dir_)),
      segments_(std::move(other.segments_)),
      sealed_(other.sealed_) {
  for (auto& seg : other.segments_) seg.path.clear();
}

CheckpointStore& CheckpointStore::operator=(CheckpointStore&& other) noexcept {
  if (this != &other) {
    remove_files();
    memory_budget_ = other.memory_budget_;
    spill_dir_ = std::move(other.spill_dir_);
    segments_ = std::move(other.segments_);
    sealed_ = other.sealed_;
    for (auto& seg : other.segments_) seg.path.clear();
  }
  return *this;
}

void CheckpointStore::remove_files() noexcept {
  for (auto& seg : segments_) {
    if (seg.file.is_open()) seg.file.close();
    if (!seg.path.empty()) {
      std::error_code ec;
      std::filesystem::remove(seg.path, ec);
      seg.path.clear();
    }
  }
}

void CheckpointStore::write(Segment& seg, std::span<const PairRecord> records) {
  std::vector<unsigned char> buffer;
  buffer.reserve(std::min(records.size(), kScanBatch) * kSpillRecordBytes);
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto bytes = encode_spill_record(records[i]);
    buffer.insert(buffer.end(), bytes.begin(), bytes.end());
    if (buffer.size() >= kScanBatch * kSpillRecordBytes || i + 1 == records.size()) {
      seg.file.write(reinterpret_cast<const char*>(buffer.data()),
                     static_cast<std::streamsize>(buffer.size()));
      buffer.clear();
    }
  }
  seg.file.flush();
  if (!seg.file) throw std::runtime_error("checkpoint spill write failed: " + seg.path.string());
  seg.spilled += records.size();
}

void CheckpointStore::spill(CheckpointPhase phase) {
  Segment& seg = segment(phase);
  if (seg.file.is_open()) return;
  std::filesystem::create_directories(spill_dir_);
  seg.path = spill_dir_ / ("ufs-ckpt-" + std::to_string(::getpid()) + "-" +
                           std::to_string(g_spill_counter.fetch_add(1)) + "-" +
                           phase_name(phase) + ".bin");
  seg.file.open(seg.path, std::ios::binary | std::ios::trunc);
  if (!seg.file) throw std::runtime_error("cannot create spill file " + seg.path.string());
  write(seg, seg.memory);
  std::vector<PairRecord>().swap(seg.memory);
}

void CheckpointStore::append(CheckpointPhase phase, std::span<const PairRecord> records) {
  if (sealed_) throw std::logic_error("checkpoint store is sealed");
  Segment& seg = segment(phase);
  if (seg.file.is_open()) {
    write(seg, records);
    return;
  }
  seg.memory.insert(seg.memory.end(), records.begin(), records.end());
  std::size_t in_memory = segments_[0].memory.size() + segments_[1].memory.size();
  if (in_memory > memory_budget_) {
    spill(CheckpointPhase::kShuffle);
    spill(CheckpointPhase::kCompression);
  }
}

void CheckpointStore::seal() {
  sealed_ = true;
  for (auto& seg : segments_) {
    if (seg.file.is_open()) seg.file.close();
  }
}

std::size_t CheckpointStore::size(CheckpointPhase phase) const {
  const Segment& seg = segment(phase);
  return seg.spilled + seg.memory.size();
}

std::size_t CheckpointStore::size() const {
  return size(CheckpointPhase::kShuffle) + size(CheckpointPhase::kCompression);
}

bool CheckpointStore::spilled(CheckpointPhase phase) const { return !segment(phase).path.empty(); }

const std::filesystem::path& CheckpointStore::spill_path(CheckpointPhase phase) const {
  return segment(phase).path;
}

void CheckpointStore::scan(CheckpointPhase phase,
                           const std::function<void(std::span<const PairRecord>)>& visit) const {
  const Segment& seg = segment(phase);
  if (!seg.path.empty()) {
    std::ifstream in(seg.path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read spill file " + seg.path.string());
    std::vector<unsigned char> raw(kScanBatch * kSpillRecordBytes);
    std::vector<PairRecord> batch;
    std::size_t remaining = seg.spilled;
    while (remaining > 0) {
      std::size_t n = std::min(remaining, kScanBatch);
      in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n * kSpillRecordBytes));
      if (static_cast<std::size_t>(in.gcount()) != n * kSpillRecordBytes) {
        throw std::runtime_error("truncated spill file " + seg.path.string());
      }
      batch.clear();
      for (std::size_t i = 0; i < n; ++i) {
        batch.push_back(decode_spill_record(
            std::span<const unsigned char, kSpillRecordBytes>(raw.data() + i * kSpillRecordBytes,
                                                              kSpillRecordBytes)));
      }
      visit(batch);
      remaining -= n;
    }
  }
  if (!seg.memory.empty()) visit(seg.memory);
}

std::vector<PairRecord> CheckpointStore::load(CheckpointPhase phase) const {
  std::vector<PairRecord> out;
  out.reserve(size(phase));
  scan(phase, [&](std::span<const PairRecord> batch) { out.insert(out.end(), batch.begin(), batch.end()); });
  return out;
}

namespace {

// Sorts by child and keeps the preferred parent of each child.
void reduce_best_parent(std::vector<PairRecord>& records, Election election) {
  std::sort(records.begin(), records.end(), [&](const PairRecord& a, const PairRecord& b) {
    if (a.child != b.child) return a.child < b.child;
    return prefers(election, a.parent, b.parent);
  });
  records.erase(std::unique(records.begin(), records.end(),
                            [](const PairRecord& a, const PairRecord& b) { return a.child == b.child; }),
                records.end());
}

bool child_less(const PairRecord& a, const PairRecord& b) { return a.child < b.child; }

}  // namespace

ComponentLabeling consolidate(const CheckpointStore& store, Election election) {
  std::vector<PairRecord> best;
  std::size_t reduced = 0;
  auto absorb = [&](std::span<const PairRecord> batch) {
    best.insert(best.end(), batch.begin(), batch.end());
    if (best.size() > 2 * reduced + (std::size_t{1} << 20)) {
      reduce_best_parent(best, election);
      reduced = best.size();
    }
  };
  store.scan(CheckpointPhase::kShuffle, absorb);
  store.scan(CheckpointPhase::kCompression, absorb);
  reduce_best_parent(best, election);

  std::vector<PairRecord> dangling;
  for (const PairRecord& r : best) {
    if (!std::binary_search(best.begin(), best.end(), PairRecord{r.parent, 0}, child_less)) {
      dangling.push_back({r.parent, r.parent});
    }
  }
  if (!dangling.empty()) {
    best.insert(best.end(), dangling.begin(), dangling.end());
    reduce_best_parent(best, election);
  }

  const std::size_t n = best.size();
  std::vector<std::size_t> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(best.begin(), best.end(), PairRecord{best[i].parent, 0}, child_less);
    up[i] = static_cast<std::size_t>(it - best.begin());
  }

  const std::size_t sweep_limit = n == 0 ? 1 : static_cast<std::size_t>(std::bit_width(n) - 1) + 2;
  std::vector<std::size_t> next(n);
  bool settled = n == 0;
  for (std::size_t sweep = 0; sweep < sweep_limit && !settled; ++sweep) {
    settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = up[up[i]];
      settled &= next[i] == up[i];
    }
    up.swap(next);
  }
  if (!settled) {
    throw CycleDetected("pointer jumping did not settle within " + std::to_string(sweep_limit) +
                        " sweeps");
  }

  std::vector<PairRecord> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PairRecord& root = best[up[i]];
    if (root.parent != root.child) {
      throw CycleDetected("node " + std::to_string(best[i].child) + " resolves into a parent cycle");
    }
    labels[i] = {best[i].child, root.child};
  }
  return ComponentLabeling(std::move(labels));
}

}  // namespace ufs
