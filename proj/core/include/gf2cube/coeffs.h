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

#ifndef GF2CUBE_COEFFS_H_
#define GF2CUBE_COEFFS_H_

#include "gf2cube/field.h"

namespace gf2cube {

// a*x^3 + b*x^2 + c*x + d
struct CubicCoeffs {
  FieldElement a, b, c, d;
};

}  // namespace gf2cube

#endif  // GF2CUBE_COEFFS_H_
