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

#include "gf2cube/partition.h"

#include "gf2cube/error.h"

namespace gf2cube {

RootLabel ImagePartition::label_of(FieldElement xi) const {
  if (xi.is_zero()) return RootLabel::kZeroSpecial;
  switch (count_of(xi)) {
    case 0:
      return RootLabel::kY0;
    case 1:
      return RootLabel::kY1;
    default:
      return RootLabel::kY3;
  }
}

ImagePartition partition_from_counts(const Field& field, std::vector<std::uint8_t> counts) {
  if (counts.size() != field.order()) {
    throw UsageError("count table size does not match the field order");
  }
  ImagePartition p;
  p.n = field.degree();
  p.modulus = field.modulus();
  p.image.push_back(field.zero());
  for (std::uint64_t v = 1; v < counts.size(); ++v) {
    const FieldElement xi(static_cast<std::uint32_t>(v));
    switch (counts[v]) {
      case 0:
        p.y0.push_back(xi);
        break;
      case 1:
        p.y1.push_back(xi);
        p.image.push_back(xi);
        break;
      default:
        p.y3.push_back(xi);
        p.image.push_back(xi);
        break;
    }
  }
  p.preimage_count = std::move(counts);
  return p;
}

}  // namespace gf2cube
