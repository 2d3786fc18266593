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

#ifndef GF2CUBE_QUAD_EXT_H_
#define GF2CUBE_QUAD_EXT_H_

#include <cstdint>

#include "gf2cube/field.h"

namespace gf2cube {

// Element c0 + c1*t of GF(2^n)[t] / (t^2 + xi*t + constant). When the
// quadratic is irreducible this is GF(2^(2n)); the quotient is always built
// from the quadratic at hand, so no separate extension field (and no
// embedding) is ever needed.
//
// The element keeps a pointer to its base field, which must outlive it.
class QuadExtElem {
 public:
  QuadExtElem(const Field& field, FieldElement xi, FieldElement constant,
              FieldElement c0, FieldElement c1);

  // The class of t itself, a root of the defining quadratic.
  static QuadExtElem root_class(const Field& field, FieldElement xi,
                                FieldElement constant);

  const Field& field() const { return *field_; }
  FieldElement xi() const { return xi_; }
  FieldElement constant() const { return constant_; }
  FieldElement c0() const { return c0_; }
  FieldElement c1() const { return c1_; }
  bool in_base_field() const { return c1_.is_zero(); }

  // Same quotient ring, different coordinates.
  QuadExtElem with(FieldElement c0, FieldElement c1) const;
  QuadExtElem one() const { return with(field_->one(), FieldElement()); }

  friend bool operator==(const QuadExtElem& a, const QuadExtElem& b) {
    return a.field_ == b.field_ && a.xi_ == b.xi_ && a.constant_ == b.constant_ &&
           a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

 private:
  const Field* field_;
  FieldElement xi_;
  FieldElement constant_;
  FieldElement c0_;
  FieldElement c1_;
};

// Reduction uses t^2 = xi*t + constant. Throws UsageError when the operands
// live in different quotient rings.
QuadExtElem quadext_add(const QuadExtElem& a, const QuadExtElem& b);
QuadExtElem quadext_mul(const QuadExtElem& a, const QuadExtElem& b);
QuadExtElem quadext_pow(const QuadExtElem& a, std::uint64_t e);

// The image of a under t -> xi - t, i.e. a^(2^n) when the quadratic is
// irreducible.
QuadExtElem quadext_conjugate(const QuadExtElem& a);
// a * conjugate(a), an element of the base field.
FieldElement quadext_norm(const QuadExtElem& a);
// Throws DivisionByZero when the norm vanishes.
QuadExtElem quadext_inv(const QuadExtElem& a);

// 2^(2n) - 1, the unit group order of the extension (wraps correctly at n = 32).
std::uint64_t extension_group_order(const Field& field);

}  // namespace gf2cube

#endif  // GF2CUBE_QUAD_EXT_H_
