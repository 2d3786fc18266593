// Copyright 2026 The gf2cube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gf2cube/format.h"

#include <cctype>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace gf2cube {
namespace {

using Json = nlohmann::ordered_json;

Json hex_list(const std::vector<FieldElement>& elements) {
  Json list = Json::array();
  for (FieldElement e : elements) list.push_back(to_hex(e));
  return list;
}

Json partition_json(const ImagePartition& p) {
  Json j;
  j["n"] = p.n;
  j["modulus"] = to_hex(p.modulus);
  j["y1"] = hex_list(p.y1);
  j["y3"] = hex_list(p.y3);
  j["y0"] = hex_list(p.y0);
  j["image"] = hex_list(p.image);
  Json counts;
  counts["y1"] = p.y1.size();
  counts["y3"] = p.y3.size();
  counts["y0"] = p.y0.size();
  counts["image"] = p.image.size();
  j["counts"] = std::move(counts);
  return j;
}

}  // namespace

std::string to_hex(std::uint64_t bits) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(bits));
  return buf;
}

std::optional<std::uint64_t> parse_hex(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  if (text.empty() || text.size() > 16) return std::nullopt;
  std::uint64_t value = 0;
  for (char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isxdigit(c)) return std::nullopt;
    const int digit = std::isdigit(c) ? c - '0' : std::tolower(c) - 'a' + 10;
    value = (value << 4) | static_cast<std::uint64_t>(digit);
  }
  return value;
}

std::string to_json(const ImagePartition& partition) { return partition_json(partition).dump(); }

std::string to_json(const OracleReport& report) {
  Json j = partition_json(report.partition);
  j["elapsed_ms"] = report.elapsed.count();
  j["method"] = "bruteforce";
  return j.dump();
}

std::string to_json(const RootReport& report) {
  Json j;
  j["xi"] = to_hex(report.xi);
  j["label"] = std::string(to_string(report.label));
  j["roots"] = hex_list(report.roots);
  j["double_root"] = report.double_root;
  return j.dump();
}

std::string to_csv(const ImagePartition& partition) {
  std::string out = "element,label\n";
  for (std::uint64_t v = 0; v < partition.preimage_count.size(); ++v) {
    const FieldElement xi(static_cast<std::uint32_t>(v));
    out += to_hex(xi);
    out += ',';
    out += to_string(partition.label_of(xi));
    out += '\n';
  }
  return out;
}

std::string to_plain(const ImagePartition& partition) {
  std::string out;
  for (FieldElement e : partition.image) {
    out += to_hex(e);
    out += '\n';
  }
  return out;
}

}  // namespace gf2cube
