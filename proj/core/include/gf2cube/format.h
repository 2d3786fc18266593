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

#ifndef GF2CUBE_FORMAT_H_
#define GF2CUBE_FORMAT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gf2cube/cubic.h"
#include "gf2cube/field.h"
#include "gf2cube/oracle.h"
#include "gf2cube/partition.h"

namespace gf2cube {

// Lowercase hexadecimal of the coefficient integer, e.g. "0x13".
std::string to_hex(std::uint64_t bits);
inline std::string to_hex(FieldElement a) { return to_hex(a.bits()); }

// Accepts an optional 0x/0X prefix and 1..16 hex digits.
std::optional<std::uint64_t> parse_hex(std::string_view text);

// Compact JSON with fixed key order and sorted sets:
// {"n":4,"modulus":"0x13","y1":[...],"y3":[...],"y0":[...],"image":[...],
//  "counts":{"y1":8,"y3":2,"y0":5,"image":11}}
std::string to_json(const ImagePartition& partition);
// As above plus "elapsed_ms" and "method":"bruteforce".
std::string to_json(const OracleReport& report);
// {"xi":"0x1","label":"Y3","roots":[...],"double_root":false}
std::string to_json(const RootReport& report);

// Header "element,label", then one row per field element in ascending order.
std::string to_csv(const ImagePartition& partition);
// Image elements, one hex value per line.
std::string to_plain(const ImagePartition& partition);

}  // namespace gf2cube

#endif  // GF2CUBE_FORMAT_H_
