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

#ifndef GF2CUBE_VERIFY_H_
#define GF2CUBE_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gf2cube/field.h"
#include "gf2cube/partition.h"

namespace gf2cube {

struct SetDiff {
  std::vector<FieldElement> only_closed;  // present in the closed form only
  std::vector<FieldElement> only_brute;   // present in the oracle only
  bool empty() const { return only_closed.empty() && only_brute.empty(); }
};

struct PartitionDiff {
  SetDiff y0, y1, y3, image;
  // Elements whose preimage counts disagree.
  std::vector<FieldElement> count_mismatches;
  bool empty() const {
    return y0.empty() && y1.empty() && y3.empty() && image.empty() && count_mismatches.empty();
  }
};

PartitionDiff diff_partitions(const ImagePartition& closed, const ImagePartition& brute);

// Fiber sizes of r -> r^3 + r^-3 for even n.
struct FiberAudit {
  std::map<std::uint32_t, std::uint64_t> size_histogram;  // fiber size -> #values
  std::vector<FieldElement> size3_locations;
  // Every fiber has size 3 or 6.
  bool sizes_ok = false;
};
FiberAudit audit_fibers(const Field& field);

struct VerifyReport {
  int n = 0;
  PartitionDiff diff;
  std::optional<FiberAudit> fibers;  // even n only
  bool pass() const { return diff.empty() && (!fibers || fibers->sizes_ok); }
};

// Closed form against the exhaustive oracle, plus the fiber audit for even n.
VerifyReport verify_partition(const Field& field, unsigned jobs = 1);

}  // namespace gf2cube

#endif  // GF2CUBE_VERIFY_H_
