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

#ifndef GF2CUBE_IMAGE_H_
#define GF2CUBE_IMAGE_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2cube/coeffs.h"
#include "gf2cube/cubic.h"
#include "gf2cube/field.h"
#include "gf2cube/partition.h"

namespace gf2cube {

// Largest degree for which whole partitions are materialized.
inline constexpr int kMaterializeLimit = 24;

// Values with exactly one preimage: xi != 0 with Tr(1/xi) = 1 for even n,
// Tr(1/xi) = 0 for odd n. Ascending.
std::vector<FieldElement> y1_set(const Field& field, unsigned jobs = 1);

// Values with three distinct preimages: s + 1/s over the roots of unity of
// order (2^n - 1)/3 (even n) or (2^n + 1)/3 (odd n, taken in the quadratic
// extension), excluding s = 1. Ascending.
std::vector<FieldElement> y3_set(const Field& field);

// Partition assembled from y1_set and y3_set. Throws FeasibilityError above
// kMaterializeLimit.
ImagePartition image_closed_form(const Field& field, unsigned jobs = 1);

struct Membership {
  bool in_image;
  RootLabel label;
};
Membership member(const Field& field, FieldElement xi);

// Fiber size of r -> r^3 + r^-3 above every attained value, over nonzero r.
// Ascending by value. Throws DomainError for odd n and FeasibilityError above
// kMaterializeLimit.
std::vector<std::pair<FieldElement, std::uint32_t>> fiber_sizes_even(const Field& field);

FieldElement evaluate(const Field& field, const CubicCoeffs& coeffs, FieldElement x);

enum class ReducedBranch {
  kCanonical,   // a'(z^3 + z) + d'
  kDegenerate,  // a' z^3 + d'
};

// With z = u*x + v the cubic becomes the reduced form above.
struct ReducedCubic {
  ReducedBranch branch;
  FieldElement u, v;
  FieldElement a_prime, d_prime;
};

// Throws DomainError for a = 0.
ReducedCubic reduce_general_cubic(const Field& field, const CubicCoeffs& coeffs);
FieldElement evaluate_reduced(const Field& field, const ReducedCubic& reduced, FieldElement z);

// Image of a general cubic map, ascending. The overload taking a partition
// reuses it instead of rebuilding the closed form.
std::vector<FieldElement> image_general_cubic(const Field& field, const CubicCoeffs& coeffs);
std::vector<FieldElement> image_general_cubic(const Field& field, const CubicCoeffs& coeffs,
                                              const ImagePartition& base);

struct ImageCounts {
  std::uint64_t y1 = 0;
  std::uint64_t y3 = 0;
  std::uint64_t y0 = 0;
  std::uint64_t image = 0;
  friend bool operator==(const ImageCounts&, const ImageCounts&) = default;
};

// Cardinalities predicted by the counting formulas.
ImageCounts predicted_counts(int n);

// Cardinalities for any n <= 32. Up to kMaterializeLimit they come from the
// materialized closed form; beyond it |y1| is counted by a trace scan over the
// field and |y3| as the number of pairs {s, 1/s} in the unity subgroup.
ImageCounts image_counts(const Field& field, unsigned jobs = 1);

ImageCounts counts_of(const ImagePartition& partition);

}  // namespace gf2cube

#endif  // GF2CUBE_IMAGE_H_
