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

#include "gf2cube/oracle.h"

#include <string>

#include "gf2cube/error.h"
#include "parallel.h"

namespace gf2cube {
namespace {

void require_feasible(const Field& field) {
  if (field.degree() > kOracleLimit) {
    throw FeasibilityError("brute force is limited to n <= 24, got n = " +
                           std::to_string(field.degree()));
  }
}

FieldElement cube_plus_x(const Field& field, FieldElement x) {
  return field.mul(field.mul(x, x), x) + x;
}

}  // namespace

OracleReport image_bruteforce(const Field& field, unsigned jobs) {
  require_feasible(field);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t q = field.order();
  const unsigned chunks = internal::chunk_count(0, q, jobs);
  std::vector<std::vector<std::uint8_t>> tallies(chunks);
  internal::for_each_chunk(0, q, jobs, [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
    auto& tally = tallies[k];
    tally.assign(q, 0);
    for (std::uint64_t v = lo; v < hi; ++v) {
      ++tally[cube_plus_x(field, FieldElement(static_cast<std::uint32_t>(v))).bits()];
    }
  });
  std::vector<std::uint8_t> counts = std::move(tallies[0]);
  for (unsigned k = 1; k < chunks; ++k) {
    for (std::uint64_t v = 0; v < q; ++v) counts[v] += tallies[k][v];
  }

  OracleReport report;
  report.n = field.degree();
  report.partition = partition_from_counts(field, std::move(counts));
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<FieldElement> preimages_bruteforce(const Field& field, FieldElement xi) {
  require_feasible(field);
  std::vector<FieldElement> result;
  for (std::uint64_t v = 0; v < field.order(); ++v) {
    const FieldElement x(static_cast<std::uint32_t>(v));
    if (cube_plus_x(field, x) == xi) result.push_back(x);
  }
  return result;
}

std::vector<FieldElement> image_bruteforce_general(const Field& field, const CubicCoeffs& k) {
  require_feasible(field);
  std::vector<bool> hit(field.order(), false);
  for (std::uint64_t v = 0; v < field.order(); ++v) {
    const FieldElement x(static_cast<std::uint32_t>(v));
    const FieldElement x2 = field.mul(x, x);
    const FieldElement value =
        field.mul(k.a, field.mul(x2, x)) + field.mul(k.b, x2) + field.mul(k.c, x) + k.d;
    hit[value.bits()] = true;
  }
  std::vector<FieldElement> result;
  for (std::uint64_t v = 0; v < hit.size(); ++v) {
    if (hit[v]) result.push_back(FieldElement(static_cast<std::uint32_t>(v)));
  }
  return result;
}

}  // namespace gf2cube
