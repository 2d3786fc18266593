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

#ifndef GF2CUBE_PARTITION_H_
#define GF2CUBE_PARTITION_H_

#include <cstdint>
#include <vector>

#include "gf2cube/cubic.h"
#include "gf2cube/field.h"

namespace gf2cube {

// The image of x -> x^3 + x over GF(2^n), split by the number of distinct
// preimages. Sets are sorted ascending by encoding.
//
//   {0} + y1 + y3 = image,  y0 + y1 + y3 = all nonzero elements
//   sum of preimage counts = 2^n,  preimage_count[0] = 2
struct ImagePartition {
  int n = 0;
  std::uint64_t modulus = 0;
  std::vector<FieldElement> y0;
  std::vector<FieldElement> y1;
  std::vector<FieldElement> y3;
  std::vector<FieldElement> image;
  // Indexed by encoding; values in {0, 1, 2, 3}.
  std::vector<std::uint8_t> preimage_count;

  int count_of(FieldElement xi) const { return preimage_count[xi.bits()]; }
  RootLabel label_of(FieldElement xi) const;
};

// Builds the sets from a table of preimage counts (one entry per element).
ImagePartition partition_from_counts(const Field& field, std::vector<std::uint8_t> counts);

}  // namespace gf2cube

#endif  // GF2CUBE_PARTITION_H_
