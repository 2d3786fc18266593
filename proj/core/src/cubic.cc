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

#include "gf2cube/cubic.h"

#include <algorithm>

#include "cube_root.h"
#include "gf2cube/error.h"
#include "gf2cube/poly.h"

namespace gf2cube {

std::string_view to_string(CubicClassification kind) {
  switch (kind) {
    case CubicClassification::kThreeLinear:
      return "ThreeLinear";
    case CubicClassification::kLinearTimesQuadratic:
      return "LinearTimesQuadratic";
    case CubicClassification::kIrreducible:
      return "Irreducible";
  }
  return "?";
}

std::string_view to_string(RootLabel label) {
  switch (label) {
    case RootLabel::kY0:
      return "Y0";
    case RootLabel::kY1:
      return "Y1";
    case RootLabel::kY3:
      return "Y3";
    case RootLabel::kZeroSpecial:
      return "ZeroSpecial";
  }
  return "?";
}

namespace {

bool is_cube_in_extension(const QuadExtElem& s) {
  return quadext_pow(s, extension_group_order(s.field()) / 3) == s.one();
}

// First z = c0 + c1*t (c1 >= 1, scanning c0 then c1) that is not a cube in
// the extension. A third of the unit group are cubes, so this ends quickly.
QuadExtElem extension_non_cube(const QuadExtElem& like) {
  const Field& f = like.field();
  for (std::uint64_t c1 = 1; c1 < f.order(); ++c1) {
    for (std::uint64_t c0 = 0; c0 < f.order(); ++c0) {
      const QuadExtElem z = like.with(f.element(c0), f.element(c1));
      if (quadext_norm(z).is_zero()) continue;
      if (!is_cube_in_extension(z)) return z;
    }
  }
  throw DomainError("extension has no non-cube");  // 3 always divides 4^n - 1
}

// All values r*w^j + (r*w^j)^-1 that land in the base field.
std::vector<FieldElement> roots_from_extension(const QuadExtElem& s) {
  const std::uint64_t order = extension_group_order(s.field());
  const QuadExtElem z = extension_non_cube(s);
  const auto r = internal::cube_root_cyclic(
      s, s.one(), z, order,
      [](const QuadExtElem& x, const QuadExtElem& y) { return quadext_mul(x, y); },
      [](const QuadExtElem& x, std::uint64_t e) { return quadext_pow(x, e); });
  if (!r) return {};
  const QuadExtElem w = quadext_pow(z, order / 3);
  std::vector<FieldElement> roots;
  QuadExtElem rw = *r;
  for (int j = 0; j < 3; ++j) {
    const QuadExtElem candidate = quadext_add(rw, quadext_inv(rw));
    if (candidate.in_base_field()) roots.push_back(candidate.c0());
    rw = quadext_mul(rw, w);
  }
  return roots;
}

std::vector<FieldElement> roots_from_field(const Field& field, FieldElement s) {
  const auto r = field.cube_root(s);
  if (!r) return {};
  const FieldElement w = field.unity_generator(3);
  std::vector<FieldElement> roots;
  FieldElement rw = *r;
  for (int j = 0; j < 3; ++j) {
    roots.push_back(rw + field.inv(rw));
    rw = field.mul(rw, w);
  }
  return roots;
}

}  // namespace

ResolventRoots resolvent_roots(const Field& field, FieldElement a, FieldElement b) {
  if (b.is_zero()) throw DomainError("resolvent degenerates for b = 0");
  const FieldElement a_cubed = field.mul(field.square(a), a);
  // t = b*u turns t^2 + b*t + a^3 into u^2 + u = a^3 / b^2.
  const FieldElement c = field.div(a_cubed, field.square(b));
  if (const auto u = field.solve_artin_schreier(c)) {
    const FieldElement t0 = field.mul(b, u->first);
    const FieldElement t1 = t0 + b;
    return std::make_pair(std::min(t0, t1), std::max(t0, t1));
  }
  return QuadExtElem::root_class(field, b, a_cubed);
}

CubicClassification classify_williams(const Field& field, FieldElement a, FieldElement b) {
  if (b.is_zero()) throw DomainError("Williams criterion requires b != 0");
  const FieldElement a_cubed = field.mul(field.square(a), a);
  if (field.trace(field.div(a_cubed, field.square(b))) != field.trace_of_one()) {
    return CubicClassification::kLinearTimesQuadratic;
  }
  // The resolvent roots multiply to a^3, a cube, so testing one root decides
  // both.
  const ResolventRoots roots = resolvent_roots(field, a, b);
  bool cube;
  if (const auto* pair = std::get_if<std::pair<FieldElement, FieldElement>>(&roots)) {
    // With a = 0 one root is 0 and carries no information.
    const FieldElement s = pair->first.is_zero() ? pair->second : pair->first;
    cube = field.is_cube(s);
  } else {
    cube = is_cube_in_extension(std::get<QuadExtElem>(roots));
  }
  return cube ? CubicClassification::kThreeLinear : CubicClassification::kIrreducible;
}

RootLabel label_of(const Field& field, FieldElement xi) {
  if (xi.is_zero()) return RootLabel::kZeroSpecial;
  // For a = 1, b = xi: Tr(a^3/b^2) = Tr(xi^-2) = Tr(xi^-1).
  if (field.trace(field.inv(xi)) != field.trace_of_one()) return RootLabel::kY1;
  const ResolventRoots roots = resolvent_roots(field, field.one(), xi);
  bool cube;
  if (const auto* pair = std::get_if<std::pair<FieldElement, FieldElement>>(&roots)) {
    cube = field.is_cube(pair->first);
  } else {
    cube = is_cube_in_extension(std::get<QuadExtElem>(roots));
  }
  return cube ? RootLabel::kY3 : RootLabel::kY0;
}

std::vector<FieldElement> roots_depressed_cubic(const Field& field, FieldElement xi) {
  if (xi.is_zero()) throw DomainError("x^3 + x has a double root; use count_field_roots");
  std::vector<FieldElement> roots;
  switch (label_of(field, xi)) {
    case RootLabel::kY0:
    case RootLabel::kZeroSpecial:
      break;
    case RootLabel::kY1: {
      // gcd(f, x^(2^n) - x) is the single linear factor x + root.
      const Poly f({xi, field.one(), field.zero(), field.one()});
      const Poly x_mod_f({field.zero(), field.one()});
      const Poly g = gcd(field, f, modpow_frobenius(field, f) + x_mod_f);
      roots.push_back(g.coeff(0));
      break;
    }
    case RootLabel::kY3: {
      const ResolventRoots s = resolvent_roots(field, field.one(), xi);
      if (const auto* pair = std::get_if<std::pair<FieldElement, FieldElement>>(&s)) {
        roots = roots_from_field(field, pair->first);
      } else {
        roots = roots_from_extension(std::get<QuadExtElem>(s));
      }
      break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

RootReport count_field_roots(const Field& field, FieldElement xi) {
  if (xi.is_zero()) {
    return RootReport{xi, RootLabel::kZeroSpecial, {field.zero(), field.one()}, true};
  }
  return RootReport{xi, label_of(field, xi), roots_depressed_cubic(field, xi), false};
}

}  // namespace gf2cube
