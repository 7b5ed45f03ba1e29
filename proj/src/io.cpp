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

#include "ufs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace ufs {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

// Splits a stripped line into exactly two tokens.
bool split_pair(std::string_view line, EdgeFormat format, std::string_view& a, std::string_view& b) {
  if (format == EdgeFormat::kCsv) {
    auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      return false;
    }
    a = trim(line.substr(0, comma));
    b = trim(line.substr(comma + 1));
    return !a.empty() && !b.empty();
  }
  auto sep = line.find_first_of(" \t");
  if (sep == std::string_view::npos) return false;
  a = line.substr(0, sep);
  b = trim(line.substr(sep));
  return !b.empty() && b.find_first_of(" \t") == std::string_view::npos;
}

NodeId parse_id(std::string_view token, std::size_t line) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError(line, "'" + std::string(token) + "' exceeds 64 bits");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "'" + std::string(token) + "' is not an unsigned integer");
  }
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void close_out(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

NodeId IdDictionary::encode(std::string_view token) {
  auto [it, inserted] = forward_.try_emplace(std::string(token), reverse_.size());
  if (inserted) reverse_.emplace_back(token);
  return it->second;
}

std::optional<NodeId> IdDictionary::find(std::string_view token) const {
  auto it = forward_.find(std::string(token));
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

EdgeFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? EdgeFormat::kCsv : EdgeFormat::kTsv;
}

EdgeInput read_edges(std::istream& in, EdgeFormat format, bool encode_strings) {
  EdgeInput result;
  if (encode_strings) result.dictionary.emplace();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view a, b;
    if (!split_pair(line, format, a, b)) throw ParseError(line_no, "expected two node ids");
    if (encode_strings) {
      NodeId u = result.dictionary->encode(a);
      NodeId v = result.dictionary->encode(b);
      result.edges.push_back({u, v});
    } else {
      result.edges.push_back({parse_id(a, line_no), parse_id(b, line_no)});
    }
  }
  if (in.bad()) throw IoError("read failed");
  return result;
}

EdgeInput read_edges(const std::filesystem::path& path, EdgeFormat format, bool encode_strings) {
  auto in = open_in(path);
  return read_edges(in, format, encode_strings);
}

void write_edges(std::ostream& out, std::span<const Edge> edges, EdgeFormat format) {
  const char sep = format == EdgeFormat::kCsv ? ',' : '\t';
  for (const Edge& e : edges) out << e.u << sep << e.v << '\n';
}

void write_edges(const std::filesystem::path& path, std::span<const Edge> edges) {
  auto out = open_out(path);
  write_edges(out, edges, format_for_path(path));
  close_out(out, path);
}

void write_labeling(std::ostream& out, const ComponentLabeling& labeling, const IdDictionary* dictionary) {
  if (dictionary == nullptr) {
    for (const PairRecord& r : labeling) out << r.child << '\t' << r.parent << '\n';
    return;
  }
  std::vector<const PairRecord*> order;
  order.reserve(labeling.size());
  for (const PairRecord& r : labeling) order.push_back(&r);
  std::sort(order.begin(), order.end(), [&](const PairRecord* a, const PairRecord* b) {
    return dictionary->decode(a->child) < dictionary->decode(b->child);
  });
  for (const PairRecord* r : order) {
    out << dictionary->decode(r->child) << '\t' << dictionary->decode(r->parent) << '\n';
  }
}

void write_labeling(const std::filesystem::path& path, const ComponentLabeling& labeling,
                    const IdDictionary* dictionary) {
  auto out = open_out(path);
  write_labeling(out, labeling, dictionary);
  close_out(out, path);
}

ComponentLabeling read_labeling(const std::filesystem::path& path, IdDictionary* dictionary) {
  auto in = open_in(path);
  std::vector<PairRecord> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view a, b;
    if (!split_pair(line, EdgeFormat::kTsv, a, b)) throw ParseError(line_no, "expected child and root");
    if (dictionary != nullptr) {
      entries.push_back({dictionary->encode(a), dictionary->encode(b)});
    } else {
      entries.push_back({parse_id(a, line_no), parse_id(b, line_no)});
    }
  }
  try {
    return ComponentLabeling(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string metrics_to_json(const RunMetrics& m) {
  nlohmann::ordered_json j;
  j["phase2_rounds"] = m.phase2_rounds;
  j["phase3_rounds"] = m.phase3_rounds;
  j["shuffle_records_per_round"] = m.shuffle_records_per_round;
  j["checkpointed_per_round"] = m.checkpointed_per_round;
  j["initial_shuffle_volume"] = m.initial_shuffle_volume;
  j["largest_component_size"] = m.largest_component_size;
  j["input_edges"] = m.input_edges;
  j["wall_time_ms"] = m.wall_time_ms;
  return j.dump(2);
}

RunMetrics metrics_from_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    RunMetrics m;
    j.at("phase2_rounds").get_to(m.phase2_rounds);
    j.at("phase3_rounds").get_to(m.phase3_rounds);
    j.at("shuffle_records_per_round").get_to(m.shuffle_records_per_round);
    j.at("checkpointed_per_round").get_to(m.checkpointed_per_round);
    j.at("initial_shuffle_volume").get_to(m.initial_shuffle_volume);
    j.at("largest_component_size").get_to(m.largest_component_size);
    j.at("input_edges").get_to(m.input_edges);
    j.at("wall_time_ms").get_to(m.wall_time_ms);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("metrics json: ") + e.what());
  }
}

void write_metrics(const std::filesystem::path& path, const RunMetrics& metrics) {
  auto out = open_out(path);
  out << metrics_to_json(metrics) << '\n';
  close_out(out, path);
}

RunMetrics read_metrics(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return metrics_from_json(buffer.str());
}

}  // namespace ufs
