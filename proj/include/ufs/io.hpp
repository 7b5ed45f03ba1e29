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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ufs/engine.hpp"
#include "ufs/types.hpp"

namespace ufs {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A numeric token that does not fit in 64 bits.
class OverflowError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Bijection between external string ids and dense NodeIds assigned from 0
/// in first-seen order.
class IdDictionary {
 public:
  NodeId encode(std::string_view token);
  [[nodiscard]] std::optional<NodeId> find(std::string_view token) const;
  [[nodiscard]] const std::string& decode(NodeId id) const { return reverse_.at(id); }
  [[nodiscard]] std::size_t size() const { return reverse_.size(); }

 private:
  std::unordered_map<std::string, NodeId> forward_;
  std::vector<std::string> reverse_;
};

enum class EdgeFormat { kTsv, kCsv };

/// csv for a ".csv" extension, tsv otherwise.
EdgeFormat format_for_path(const std::filesystem::path& path);

struct EdgeInput {
  std::vector<Edge> edges;
  std::optional<IdDictionary> dictionary;
};

/// One edge per line. '#' starts a comment, blank lines are skipped. tsv
/// splits on tabs or spaces, csv on a comma. Without encode_strings both
/// tokens must be unsigned 64-bit integers.
EdgeInput read_edges(std::istream& in, EdgeFormat format, bool encode_strings);
EdgeInput read_edges(const std::filesystem::path& path, EdgeFormat format, bool encode_strings);

void write_edges(std::ostream& out, std::span<const Edge> edges, EdgeFormat format = EdgeFormat::kTsv);
/// Format follows the path extension.
void write_edges(const std::filesystem::path& path, std::span<const Edge> edges);

/// "child<TAB>root" lines sorted by child, or by external string when a
/// dictionary is given.
void write_labeling(std::ostream& out, const ComponentLabeling& labeling,
                    const IdDictionary* dictionary = nullptr);
void write_labeling(const std::filesystem::path& path, const ComponentLabeling& labeling,
                    const IdDictionary* dictionary = nullptr);

/// Reads a labeling file. With a dictionary, tokens are encoded through it
/// (unknown strings get fresh ids).
ComponentLabeling read_labeling(const std::filesystem::path& path, IdDictionary* dictionary = nullptr);

/// JSON object keyed by the RunMetrics field names.
std::string metrics_to_json(const RunMetrics& metrics);
RunMetrics metrics_from_json(std::string_view json);
void write_metrics(const std::filesystem::path& path, const RunMetrics& metrics);
RunMetrics read_metrics(const std::filesystem::path& path);

}  // namespace ufs
