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

#ifndef GF2CUBE_CUBIC_H_
#define GF2CUBE_CUBIC_H_

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gf2cube/field.h"
#include "gf2cube/quad_ext.h"

namespace gf2cube {

// Factorization pattern of a squarefree cubic X^3 + aX + b over GF(2^n).
enum class CubicClassification {
  kThreeLinear,
  kLinearTimesQuadratic,
  kIrreducible,
};

// Which part of the image of x^3 + x a value xi belongs to, i.e. how many
// distinct roots x^3 + x + xi has in the field.
enum class RootLabel {
  kY0,           // no roots
  kY1,           // exactly one root
  kY3,           // three distinct roots
  kZeroSpecial,  // xi = 0: roots 0 and a double root 1
};

std::string_view to_string(CubicClassification kind);
std::string_view to_string(RootLabel label);

struct RootReport {
  FieldElement xi;
  RootLabel label;
  std::vector<FieldElement> roots;  // distinct field roots, ascending
  bool double_root = false;         // set only for xi = 0 (1 is a double root)
};

// Roots of the resolvent quadratic t^2 + b*t + a^3 of X^3 + aX + b. Either
// both roots lie in GF(2^n) (returned ascending), or the resolvent is
// irreducible and its root is the class of t in the quotient ring. Throws
// DomainError for b = 0.
using ResolventRoots = std::variant<std::pair<FieldElement, FieldElement>, QuadExtElem>;
ResolventRoots resolvent_roots(const Field& field, FieldElement a, FieldElement b);

// Williams' criterion. Throws DomainError for b = 0 (X^3 + b is always
// squarefree in characteristic 2 once b != 0).
CubicClassification classify_williams(const Field& field, FieldElement a, FieldElement b);

// Label and roots of x^3 + x + xi.
RootReport count_field_roots(const Field& field, FieldElement xi);

// All distinct roots of x^3 + x + xi in GF(2^n), ascending. Throws
// DomainError for xi = 0; use count_field_roots there.
std::vector<FieldElement> roots_depressed_cubic(const Field& field, FieldElement xi);

// Membership label of xi from the trace condition and the resolvent cube
// test, without enumerating the field.
RootLabel label_of(const Field& field, FieldElement xi);

}  // namespace gf2cube

#endif  // GF2CUBE_CUBIC_H_
