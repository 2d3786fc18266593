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

#ifndef GF2CUBE_FIELD_H_
#define GF2CUBE_FIELD_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gf2cube {

inline constexpr int kMaxDegree = 32;

// One element of GF(2^n) in the polynomial basis: bit i is the coefficient of
// x^i. Addition is XOR, so it needs no field context.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  constexpr FieldElement& operator+=(FieldElement other) {
    bits_ ^= other.bits_;
    return *this;
  }
  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement(a.bits_ ^ b.bits_);
  }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Polynomials over GF(2) packed into a machine word (bit i = coefficient of
// x^i). Used for moduli, which have degree at most 32.
namespace gf2 {

int degree(std::uint64_t p);  // -1 for the zero polynomial
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Rabin's test: m of degree d is irreducible iff x^(2^d) = x (mod m) and
// gcd(x^(2^(d/p)) - x, m) = 1 for every prime p dividing d.
bool is_irreducible(std::uint64_t m);

// Smallest encoded irreducible polynomial of degree n with nonzero constant
// term. For n = 1 this is x + 1.
std::uint64_t smallest_irreducible(int n);

}  // namespace gf2

// Distinct prime factors of `value`, ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

// Immutable description of GF(2^n), 1 <= n <= 32. All arithmetic is a pure
// function of the context and its arguments, so one instance can be shared
// across threads.
class Field {
 public:
  // Uses the smallest irreducible polynomial of degree n when `modulus` is
  // empty. Throws RangeError for n outside [1, 32] and ModulusError for a
  // modulus that is reducible or of the wrong degree.
  explicit Field(int n, std::optional<std::uint64_t> modulus = std::nullopt);

  int degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  // 2^n.
  std::uint64_t order() const { return std::uint64_t{1} << n_; }
  // 2^n - 1, the order of the multiplicative group.
  std::uint64_t group_order() const { return order() - 1; }
  int trace_of_one() const { return n_ & 1; }

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  // Throws RangeError if `bits` does not fit in n bits.
  FieldElement element(std::uint64_t bits) const;
  bool contains(FieldElement a) const { return a.bits() < order(); }

  FieldElement add(FieldElement a, FieldElement b) const { return a + b; }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Extended Euclid over GF(2)[x]. Throws DivisionByZero for a = 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  // The unique b with b^2 = a, i.e. a^(2^(n-1)).
  FieldElement sqrt(FieldElement a) const;

  // Absolute trace to GF(2), returned as 0 or 1.
  int trace(FieldElement a) const;

  // Solutions {u, u + 1} of u^2 + u = c, ascending, or nothing when
  // trace(c) = 1.
  std::optional<std::pair<FieldElement, FieldElement>> solve_artin_schreier(
      FieldElement c) const;

  // Throws DomainError for a = 0.
  bool is_cube(FieldElement a) const;
  std::optional<FieldElement> cube_root(FieldElement a) const;

  // Generator of the multiplicative group.
  FieldElement generator() const { return generator_; }
  // Some element of multiplicative order exactly d. Throws DomainError unless
  // d >= 1 and d divides 2^n - 1.
  FieldElement unity_generator(std::uint64_t d) const;
  // U_d = {x : x^d = 1}, ascending by encoding.
  std::vector<FieldElement> unity_group(std::uint64_t d) const;

  const std::vector<std::uint64_t>& group_order_primes() const {
    return group_order_primes_;
  }

 private:
  std::uint32_t reduce(std::uint64_t product) const;

  int n_;
  std::uint64_t modulus_;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint64_t> group_order_primes_;
  FieldElement generator_;
  // Element of trace one; used by the even-degree Artin-Schreier solver.
  FieldElement trace_one_element_;
  // Even n only.
  FieldElement non_cube_;
  // Odd n only: inverse of 3 modulo 2^n - 1.
  std::uint64_t cube_exponent_ = 0;
};

}  // namespace gf2cube

#endif  // GF2CUBE_FIELD_H_
