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

#include "gf2cube/field.h"

#include <algorithm>
#include <bit>
#include <string>

#include "cube_root.h"
#include "gf2cube/error.h"

namespace gf2cube {
namespace gf2 {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // Inputs are reduced first, so both factors have degree < 32.
  a = mod(a, m);
  b = mod(b, m);
  std::uint64_t product = 0;
  for (; b != 0; b &= b - 1) product ^= a << std::countr_zero(b);
  return mod(product, m);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

// x^(2^k) mod m.
std::uint64_t frobenius_power_of_x(int k, std::uint64_t m) {
  std::uint64_t r = mod(2, m);
  for (int i = 0; i < k; ++i) r = mulmod(r, r, m);
  return r;
}

}  // namespace

bool is_irreducible(std::uint64_t m) {
  const int d = degree(m);
  if (d < 1) return false;
  const std::uint64_t x = mod(2, m);
  if (frobenius_power_of_x(d, m) != x) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(d))) {
    const std::uint64_t h = frobenius_power_of_x(d / static_cast<int>(p), m) ^ x;
    if (gcd(m, h) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw RangeError("degree must be in [1, 32], got " + std::to_string(n));
  }
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t candidate = top | 1; candidate < 2 * top; candidate += 2) {
    if (is_irreducible(candidate)) return candidate;
  }
  throw ModulusError("no irreducible polynomial found");  // unreachable
}

}  // namespace gf2

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= value; p += (p == 2 ? 1 : 2)) {
    if (value % p != 0) continue;
    primes.push_back(p);
    while (value % p == 0) value /= p;
  }
  if (value > 1) primes.push_back(value);
  return primes;
}

Field::Field(int n, std::optional<std::uint64_t> modulus) : n_(n) {
  if (n < 1 || n > kMaxDegree) {
    throw RangeError("degree must be in [1, 32], got " + std::to_string(n));
  }
  if (modulus) {
    if (gf2::degree(*modulus) != n) {
      throw ModulusError("modulus degree " + std::to_string(gf2::degree(*modulus)) +
                         " does not match n = " + std::to_string(n));
    }
    if (!gf2::is_irreducible(*modulus)) {
      throw ModulusError("modulus is reducible over GF(2)");
    }
    modulus_ = *modulus;
  } else {
    modulus_ = gf2::smallest_irreducible(n);
  }

  // Trace is GF(2)-linear: trace(a) is the parity of a & trace_mask_, where
  // bit i of the mask is Tr(x^i) evaluated from the definition.
  for (int i = 0; i < n_; ++i) {
    const FieldElement basis(std::uint32_t{1} << i);
    FieldElement sum, power = basis;
    for (int k = 0; k < n_; ++k) {
      sum += power;
      power = square(power);
    }
    if (sum == one()) trace_mask_ |= std::uint32_t{1} << i;
  }

  const std::uint64_t m = group_order();
  group_order_primes_ = prime_factors(m);
  generator_ = one();
  for (std::uint64_t g = 2; g < order(); ++g) {
    const FieldElement candidate(static_cast<std::uint32_t>(g));
    const bool primitive = std::all_of(
        group_order_primes_.begin(), group_order_primes_.end(),
        [&](std::uint64_t p) { return pow(candidate, m / p) != one(); });
    if (primitive) {
      generator_ = candidate;
      break;
    }
  }

  for (std::uint64_t v = 1; v < order(); ++v) {
    if (trace(FieldElement(static_cast<std::uint32_t>(v))) == 1) {
      trace_one_element_ = FieldElement(static_cast<std::uint32_t>(v));
      break;
    }
  }

  if (m % 3 == 0) {
    // A generator is never a cube.
    non_cube_ = generator_;
  } else {
    cube_exponent_ = (m % 3 == 1) ? (2 * m + 1) / 3 : (m + 1) / 3;
  }
}

FieldElement Field::element(std::uint64_t bits) const {
  if (bits >= order()) {
    throw RangeError("encoded element does not fit in " + std::to_string(n_) + " bits");
  }
  return FieldElement(static_cast<std::uint32_t>(bits));
}

std::uint32_t Field::reduce(std::uint64_t product) const {
  for (int d = gf2::degree(product); d >= n_; d = gf2::degree(product)) {
    product ^= modulus_ << (d - n_);
  }
  return static_cast<std::uint32_t>(product);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  const std::uint64_t wide = a.bits();
  std::uint64_t product = 0;
  for (std::uint32_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    product ^= wide << std::countr_zero(rest);
  }
  return FieldElement(reduce(product));
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = square(base);
  }
  return result;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero");
  std::uint64_t u = a.bits(), v = modulus_;
  std::uint64_t g1 = 1, g2 = 0;
  while (u != 1) {
    int shift = gf2::degree(u) - gf2::degree(v);
    if (shift < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      shift = -shift;
    }
    u ^= v << shift;
    g1 ^= g2 << shift;
  }
  return FieldElement(reduce(g1));
}

FieldElement Field::sqrt(FieldElement a) const {
  for (int i = 1; i < n_; ++i) a = square(a);
  return a;
}

int Field::trace(FieldElement a) const {
  return std::popcount(a.bits() & trace_mask_) & 1;
}

std::optional<std::pair<FieldElement, FieldElement>> Field::solve_artin_schreier(
    FieldElement c) const {
  if (trace(c) != 0) return std::nullopt;
  FieldElement u;
  if (n_ % 2 == 1) {
    // Half-trace: sum of c^(4^i) for i = 0..(n-1)/2.
    FieldElement term = c;
    for (int i = 0; i <= (n_ - 1) / 2; ++i) {
      u += term;
      term = square(square(term));
    }
  } else {
    // u = sum_{i=1}^{n-1} (c + c^2 + ... + c^(2^(i-1))) * delta^(2^i) with
    // Tr(delta) = 1.
    FieldElement partial;
    FieldElement c_power = c;
    FieldElement delta_power = trace_one_element_;
    for (int i = 1; i < n_; ++i) {
      partial += c_power;
      c_power = square(c_power);
      delta_power = square(delta_power);
      u += mul(partial, delta_power);
    }
  }
  const FieldElement other = u + one();
  return u < other ? std::make_pair(u, other) : std::make_pair(other, u);
}

bool Field::is_cube(FieldElement a) const {
  if (a.is_zero()) throw DomainError("cube test is defined on nonzero elements");
  const std::uint64_t m = group_order();
  if (m % 3 != 0) return true;
  return pow(a, m / 3) == one();
}

std::optional<FieldElement> Field::cube_root(FieldElement a) const {
  if (a.is_zero()) return a;
  const std::uint64_t m = group_order();
  if (m % 3 != 0) return pow(a, cube_exponent_);
  if (!is_cube(a)) return std::nullopt;
  const std::uint64_t q = m / 3;
  if (q % 3 != 0) {
    // 3e = 1 (mod q) and a^q = 1, so (a^e)^3 = a.
    const std::uint64_t e = (q % 3 == 1) ? (2 * q + 1) / 3 : (q + 1) / 3;
    return pow(a, e % q);
  }
  return internal::cube_root_cyclic(
      a, one(), non_cube_, m,
      [this](FieldElement x, FieldElement y) { return mul(x, y); },
      [this](FieldElement x, std::uint64_t e) { return pow(x, e); });
}

FieldElement Field::unity_generator(std::uint64_t d) const {
  if (d == 0 || group_order() % d != 0) {
    throw DomainError(std::to_string(d) + " does not divide 2^" + std::to_string(n_) +
                      " - 1");
  }
  return pow(generator_, group_order() / d);
}

std::vector<FieldElement> Field::unity_group(std::uint64_t d) const {
  const FieldElement h = unity_generator(d);
  std::vector<FieldElement> group;
  group.reserve(d);
  FieldElement power = one();
  for (std::uint64_t i = 0; i < d; ++i) {
    group.push_back(power);
    power = mul(power, h);
  }
  std::sort(group.begin(), group.end());
  return group;
}

}  // namespace gf2cube
