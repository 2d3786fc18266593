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

#ifndef GF2CUBE_ORACLE_H_
#define GF2CUBE_ORACLE_H_

#include <chrono>
#include <vector>

#include "gf2cube/coeffs.h"
#include "gf2cube/field.h"
#include "gf2cube/partition.h"

namespace gf2cube {

// Exhaustive ground truth. Everything here uses only field multiplication and
// addition: labels come from counting evaluations, never from trace or cube
// tests.

inline constexpr int kOracleLimit = 24;

struct OracleReport {
  int n = 0;
  ImagePartition partition;
  std::chrono::duration<double, std::milli> elapsed{};
};

// Evaluates x^3 + x at every x. The domain is split across `jobs` workers and
// the per-worker tallies are merged, so the result does not depend on `jobs`.
// Throws FeasibilityError for n > 24.
OracleReport image_bruteforce(const Field& field, unsigned jobs = 1);

// All x with x^3 + x = xi, ascending.
std::vector<FieldElement> preimages_bruteforce(const Field& field, FieldElement xi);

// Image of a*x^3 + b*x^2 + c*x + d by evaluation at every x, ascending.
std::vector<FieldElement> image_bruteforce_general(const Field& field, const CubicCoeffs& coeffs);

}  // namespace gf2cube

#endif  // GF2CUBE_ORACLE_H_
