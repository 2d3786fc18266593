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

#include "gf2cube/verify.h"

#include <algorithm>
#include <iterator>

#include "gf2cube/image.h"
#include "gf2cube/oracle.h"

namespace gf2cube {
namespace {

SetDiff diff_sets(const std::vector<FieldElement>& closed, const std::vector<FieldElement>& brute) {
  SetDiff d;
  std::set_difference(closed.begin(), closed.end(), brute.begin(), brute.end(),
                      std::back_inserter(d.only_closed));
  std::set_difference(brute.begin(), brute.end(), closed.begin(), closed.end(),
                      std::back_inserter(d.only_brute));
  return d;
}

}  // namespace

PartitionDiff diff_partitions(const ImagePartition& closed, const ImagePartition& brute) {
  PartitionDiff d;
  d.y0 = diff_sets(closed.y0, brute.y0);
  d.y1 = diff_sets(closed.y1, brute.y1);
  d.y3 = diff_sets(closed.y3, brute.y3);
  d.image = diff_sets(closed.image, brute.image);
  const std::size_t common = std::min(closed.preimage_count.size(), brute.preimage_count.size());
  for (std::size_t v = 0; v < std::max(closed.preimage_count.size(), brute.preimage_count.size());
       ++v) {
    if (v >= common || closed.preimage_count[v] != brute.preimage_count[v]) {
      d.count_mismatches.push_back(FieldElement(static_cast<std::uint32_t>(v)));
    }
  }
  return d;
}

FiberAudit audit_fibers(const Field& field) {
  FiberAudit audit;
  audit.sizes_ok = true;
  for (const auto& [value, size] : fiber_sizes_even(field)) {
    ++audit.size_histogram[size];
    if (size == 3) audit.size3_locations.push_back(value);
    if (size != 3 && size != 6) audit.sizes_ok = false;
  }
  return audit;
}

VerifyReport verify_partition(const Field& field, unsigned jobs) {
  VerifyReport report;
  report.n = field.degree();
  const ImagePartition closed = image_closed_form(field, jobs);
  const OracleReport brute = image_bruteforce(field, jobs);
  report.diff = diff_partitions(closed, brute.partition);
  if (field.degree() % 2 == 0) report.fibers = audit_fibers(field);
  return report;
}

}  // namespace gf2cube
