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

#include "gf2cube/quad_ext.h"

#include "gf2cube/error.h"

namespace gf2cube {

QuadExtElem::QuadExtElem(const Field& field, FieldElement xi, FieldElement constant,
                         FieldElement c0, FieldElement c1)
    : field_(&field), xi_(xi), constant_(constant), c0_(c0), c1_(c1) {}

QuadExtElem QuadExtElem::root_class(const Field& field, FieldElement xi,
                                    FieldElement constant) {
  return QuadExtElem(field, xi, constant, field.zero(), field.one());
}

QuadExtElem QuadExtElem::with(FieldElement c0, FieldElement c1) const {
  return QuadExtElem(*field_, xi_, constant_, c0, c1);
}

namespace {

void check_compatible(const QuadExtElem& a, const QuadExtElem& b) {
  if (&a.field() != &b.field() || a.xi() != b.xi() || a.constant() != b.constant()) {
    throw UsageError("extension elements belong to different quotient rings");
  }
}

}  // namespace

QuadExtElem quadext_add(const QuadExtElem& a, const QuadExtElem& b) {
  check_compatible(a, b);
  return a.with(a.c0() + b.c0(), a.c1() + b.c1());
}

QuadExtElem quadext_mul(const QuadExtElem& a, const QuadExtElem& b) {
  check_compatible(a, b);
  const Field& f = a.field();
  const FieldElement low = f.mul(a.c0(), b.c0());
  const FieldElement mid = f.mul(a.c0(), b.c1()) + f.mul(a.c1(), b.c0());
  const FieldElement high = f.mul(a.c1(), b.c1());
  return a.with(low + f.mul(high, a.constant()), mid + f.mul(high, a.xi()));
}

QuadExtElem quadext_pow(const QuadExtElem& a, std::uint64_t e) {
  QuadExtElem result = a.one();
  QuadExtElem base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = quadext_mul(result, base);
    base = quadext_mul(base, base);
  }
  return result;
}

QuadExtElem quadext_conjugate(const QuadExtElem& a) {
  // c0 + c1*(t + xi)
  return a.with(a.c0() + a.field().mul(a.c1(), a.xi()), a.c1());
}

FieldElement quadext_norm(const QuadExtElem& a) {
  const Field& f = a.field();
  return f.square(a.c0()) + f.mul(f.mul(a.c0(), a.c1()), a.xi()) +
         f.mul(f.square(a.c1()), a.constant());
}

QuadExtElem quadext_inv(const QuadExtElem& a) {
  const FieldElement norm = quadext_norm(a);
  if (norm.is_zero()) throw DivisionByZero("extension element is not invertible");
  const Field& f = a.field();
  const FieldElement scale = f.inv(norm);
  const QuadExtElem conj = quadext_conjugate(a);
  return a.with(f.mul(conj.c0(), scale), f.mul(conj.c1(), scale));
}

std::uint64_t extension_group_order(const Field& field) {
  const int twice = 2 * field.degree();
  return twice >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << twice) - 1;
}

}  // namespace gf2cube
