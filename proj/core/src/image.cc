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

#include "gf2cube/image.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "gf2cube/error.h"
#include "gf2cube/poly.h"
#include "gf2cube/quad_ext.h"
#include "parallel.h"

namespace gf2cube {
namespace {

void require_materializable(const Field& field) {
  if (field.degree() > kMaterializeLimit) {
    throw FeasibilityError("n = " + std::to_string(field.degree()) +
                           " exceeds the materialization bound of 24");
  }
}

void sort_unique(std::vector<FieldElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Trace value of 1/xi that marks the single-root values.
int y1_trace(const Field& field) { return field.degree() % 2 == 0 ? 1 : 0; }

// The fixed extension used for odd n: t^2 + xi0*t + 1 with Tr(1/xi0) = 1,
// irreducible because Tr(1) = 1 for odd n.
FieldElement odd_extension_xi(const Field& field) {
  for (std::uint64_t v = 1; v < field.order(); ++v) {
    const FieldElement xi = field.element(v);
    if (field.trace(field.inv(xi)) == 1) return xi;
  }
  throw DomainError("no extension parameter found");
}

// Element of exact order d in the unit group of the extension.
QuadExtElem extension_unity_generator(const QuadExtElem& like, std::uint64_t d) {
  const Field& f = like.field();
  const std::uint64_t order = extension_group_order(f);
  const std::vector<std::uint64_t> primes = prime_factors(d);
  for (std::uint64_t c1 = 1; c1 < f.order(); ++c1) {
    for (std::uint64_t c0 = 0; c0 < f.order(); ++c0) {
      const QuadExtElem z = like.with(f.element(c0), f.element(c1));
      const QuadExtElem h = quadext_pow(z, order / d);
      const bool exact = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
        return quadext_pow(h, d / p) != like.one();
      });
      if (exact) return h;
    }
  }
  throw DomainError("no element of the requested order");
}

// (2^n - 1)/3 for even n, (2^n + 1)/3 for odd n.
std::uint64_t y3_group_order(const Field& field) {
  return field.degree() % 2 == 0 ? field.group_order() / 3 : (field.order() + 1) / 3;
}

}  // namespace

std::vector<FieldElement> y1_set(const Field& field, unsigned jobs) {
  const int target = y1_trace(field);
  const unsigned chunks = internal::chunk_count(1, field.order(), jobs);
  std::vector<std::vector<FieldElement>> parts(chunks);
  internal::for_each_chunk(1, field.order(), jobs,
                           [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
                             auto& out = parts[k];
                             for (std::uint64_t v = lo; v < hi; ++v) {
                               const FieldElement nu(static_cast<std::uint32_t>(v));
                               if (field.trace(nu) == target) out.push_back(field.inv(nu));
                             }
                           });
  std::vector<FieldElement> result;
  for (auto& part : parts) result.insert(result.end(), part.begin(), part.end());
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<FieldElement> y3_set(const Field& field) {
  const std::uint64_t d = y3_group_order(field);
  std::vector<FieldElement> result;
  if (d <= 1) return result;
  result.reserve(d / 2);
  if (field.degree() % 2 == 0) {
    const FieldElement h = field.unity_generator(d);
    std::vector<FieldElement> powers(d);
    powers[0] = field.one();
    for (std::uint64_t i = 1; i < d; ++i) powers[i] = field.mul(powers[i - 1], h);
    // s = h^i and 1/s = h^(d-i); s = 1 is excluded.
    for (std::uint64_t i = 1; i <= d - i; ++i) result.push_back(powers[i] + powers[d - i]);
  } else {
    const FieldElement xi0 = odd_extension_xi(field);
    const QuadExtElem t = QuadExtElem::root_class(field, xi0, field.one());
    const QuadExtElem h = extension_unity_generator(t, d);
    // s has norm 1, so 1/s = s^(2^n) = conjugate(s) and s + 1/s = c1 * xi0.
    QuadExtElem s = h;
    for (std::uint64_t i = 1; i < d; ++i) {
      result.push_back(field.mul(s.c1(), xi0));
      s = quadext_mul(s, h);
    }
  }
  sort_unique(result);
  return result;
}

ImagePartition image_closed_form(const Field& field, unsigned jobs) {
  require_materializable(field);
  std::vector<std::uint8_t> counts(field.order(), 0);
  counts[0] = 2;
  for (FieldElement xi : y1_set(field, jobs)) counts[xi.bits()] = 1;
  for (FieldElement xi : y3_set(field)) counts[xi.bits()] = 3;
  return partition_from_counts(field, std::move(counts));
}

Membership member(const Field& field, FieldElement xi) {
  const RootLabel label = label_of(field, xi);
  return Membership{label != RootLabel::kY0, label};
}

std::vector<std::pair<FieldElement, std::uint32_t>> fiber_sizes_even(const Field& field) {
  if (field.degree() % 2 != 0) throw DomainError("fiber audit is defined for even n");
  require_materializable(field);
  std::vector<std::uint32_t> fibers(field.order(), 0);
  for (std::uint64_t v = 1; v < field.order(); ++v) {
    const FieldElement r(static_cast<std::uint32_t>(v));
    const FieldElement r3 = field.mul(field.square(r), r);
    ++fibers[(r3 + field.inv(r3)).bits()];
  }
  std::vector<std::pair<FieldElement, std::uint32_t>> result;
  for (std::uint64_t v = 0; v < fibers.size(); ++v) {
    if (fibers[v] != 0) result.emplace_back(FieldElement(static_cast<std::uint32_t>(v)), fibers[v]);
  }
  return result;
}

FieldElement evaluate(const Field& field, const CubicCoeffs& k, FieldElement x) {
  return eval(field, Poly({k.d, k.c, k.b, k.a}), x);
}

FieldElement evaluate_reduced(const Field& field, const ReducedCubic& r, FieldElement z) {
  const FieldElement z3 = field.mul(field.square(z), z);
  const FieldElement inner = r.branch == ReducedBranch::kCanonical ? z3 + z : z3;
  return field.mul(r.a_prime, inner) + r.d_prime;
}

ReducedCubic reduce_general_cubic(const Field& field, const CubicCoeffs& k) {
  if (k.a.is_zero()) throw DomainError("leading coefficient must be nonzero");
  const FieldElement disc = field.square(k.b) + field.mul(k.a, k.c);
  ReducedCubic r{};
  if (disc.is_zero()) {
    r.branch = ReducedBranch::kDegenerate;
    r.u = field.one();
  } else {
    r.branch = ReducedBranch::kCanonical;
    r.u = field.div(k.a, field.sqrt(disc));
  }
  // v removes the z^2 term.
  r.v = field.div(field.mul(k.b, r.u), k.a);

  // Expand the cubic in z by substituting x = (z + v)/u.
  const FieldElement u_inv = field.inv(r.u);
  const Poly x_of_z({field.mul(r.v, u_inv), u_inv});
  const Poly x2 = mul(field, x_of_z, x_of_z);
  const Poly x3 = mul(field, x2, x_of_z);
  const Poly in_z = Poly::constant(k.d) + scale(field, x_of_z, k.c) +
                    scale(field, x2, k.b) + scale(field, x3, k.a);
  r.a_prime = in_z.coeff(3);
  r.d_prime = in_z.coeff(0);

  const FieldElement linear = r.branch == ReducedBranch::kCanonical ? r.a_prime : field.zero();
  if (!in_z.coeff(2).is_zero() || in_z.coeff(1) != linear) {
    throw std::logic_error("affine reduction left stray terms");
  }
  return r;
}

std::vector<FieldElement> image_general_cubic(const Field& field, const CubicCoeffs& coeffs) {
  const ReducedCubic r = reduce_general_cubic(field, coeffs);
  if (r.branch == ReducedBranch::kCanonical) {
    return image_general_cubic(field, coeffs, image_closed_form(field));
  }
  return image_general_cubic(field, coeffs, ImagePartition{});
}

std::vector<FieldElement> image_general_cubic(const Field& field, const CubicCoeffs& coeffs,
                                              const ImagePartition& base) {
  const ReducedCubic r = reduce_general_cubic(field, coeffs);
  std::vector<FieldElement> result;
  if (r.branch == ReducedBranch::kCanonical) {
    if (base.n != field.degree() || base.modulus != field.modulus()) {
      throw UsageError("partition belongs to a different field");
    }
    result.reserve(base.image.size());
    for (FieldElement y : base.image) result.push_back(field.mul(r.a_prime, y) + r.d_prime);
  } else if (field.group_order() % 3 != 0) {
    // Cubing is a bijection, so every value is attained.
    require_materializable(field);
    result.reserve(field.order());
    for (std::uint64_t v = 0; v < field.order(); ++v) result.push_back(field.element(v));
    return result;
  } else {
    // Cubes are 0 and the subgroup of order (2^n - 1)/3.
    result.push_back(r.d_prime);
    for (FieldElement s : field.unity_group(field.group_order() / 3)) {
      result.push_back(field.mul(r.a_prime, s) + r.d_prime);
    }
  }
  sort_unique(result);
  return result;
}

ImageCounts predicted_counts(int n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  ImageCounts c;
  if (n % 2 == 0) {
    c.y1 = q / 2;
    c.y3 = (q - 4) / 6;
  } else {
    c.y1 = q / 2 - 1;
    c.y3 = (q - 2) / 6;
  }
  c.image = 1 + c.y1 + c.y3;
  c.y0 = q - 1 - c.y1 - c.y3;
  return c;
}

ImageCounts counts_of(const ImagePartition& p) {
  return ImageCounts{p.y1.size(), p.y3.size(), p.y0.size(), p.image.size()};
}

ImageCounts image_counts(const Field& field, unsigned jobs) {
  if (field.degree() <= kMaterializeLimit) return counts_of(image_closed_form(field, jobs));

  const int target = y1_trace(field);
  const unsigned chunks = internal::chunk_count(1, field.order(), jobs);
  std::vector<std::uint64_t> y1_parts(chunks, 0);
  internal::for_each_chunk(1, field.order(), jobs,
                           [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
                             std::uint64_t hits = 0;
                             for (std::uint64_t v = lo; v < hi; ++v) {
                               hits += field.trace(FieldElement(static_cast<std::uint32_t>(v))) ==
                                       target;
                             }
                             y1_parts[k] = hits;
                           });

  // Count s != 1 in the unity subgroup that precede 1/s; each such pair
  // {s, 1/s} yields one distinct value s + 1/s.
  const std::uint64_t d = y3_group_order(field);
  const unsigned y3_chunks = internal::chunk_count(1, d, jobs);
  std::vector<std::uint64_t> y3_parts(y3_chunks, 0);
  if (field.degree() % 2 == 0) {
    const FieldElement h = field.unity_generator(d);
    const FieldElement h_inv = field.inv(h);
    internal::for_each_chunk(1, d, jobs, [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
      FieldElement s = field.pow(h, lo), s_inv = field.pow(h_inv, lo);
      std::uint64_t pairs = 0;
      for (std::uint64_t i = lo; i < hi; ++i) {
        pairs += s < s_inv;
        s = field.mul(s, h);
        s_inv = field.mul(s_inv, h_inv);
      }
      y3_parts[k] = pairs;
    });
  } else {
    const FieldElement xi0 = odd_extension_xi(field);
    const QuadExtElem h =
        extension_unity_generator(QuadExtElem::root_class(field, xi0, field.one()), d);
    internal::for_each_chunk(1, d, jobs, [&](unsigned k, std::uint64_t lo, std::uint64_t hi) {
      QuadExtElem s = quadext_pow(h, lo);
      std::uint64_t pairs = 0;
      for (std::uint64_t i = lo; i < hi; ++i) {
        pairs += s.c0() < quadext_conjugate(s).c0();
        s = quadext_mul(s, h);
      }
      y3_parts[k] = pairs;
    });
  }

  ImageCounts c;
  for (auto p : y1_parts) c.y1 += p;
  for (auto p : y3_parts) c.y3 += p;
  c.image = 1 + c.y1 + c.y3;
  c.y0 = field.order() - 1 - c.y1 - c.y3;
  return c;
}

}  // namespace gf2cube
