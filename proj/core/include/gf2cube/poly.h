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

#ifndef GF2CUBE_POLY_H_
#define GF2CUBE_POLY_H_

#include <climits>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gf2cube/field.h"

namespace gf2cube {

// Dense polynomial over GF(2^n); coefficient i multiplies x^i. Trailing zero
// coefficients are always trimmed, so the zero polynomial has no
// coefficients. The owning field is passed to every operation that
// multiplies.
class Poly {
 public:
  // Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = INT_MIN;

  Poly() = default;
  explicit Poly(std::vector<FieldElement> coeffs);
  Poly(std::initializer_list<FieldElement> coeffs)
      : Poly(std::vector<FieldElement>(coeffs)) {}

  static Poly constant(FieldElement c) { return Poly({c}); }
  // c * x^k
  static Poly monomial(FieldElement c, int k);

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero for indices beyond the degree.
  FieldElement coeff(int i) const;
  FieldElement leading() const { return coeffs_.empty() ? FieldElement() : coeffs_.back(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<FieldElement> coeffs_;
};

FieldElement eval(const Field& field, const Poly& p, FieldElement x);
Poly mul(const Field& field, const Poly& a, const Poly& b);
Poly scale(const Field& field, const Poly& p, FieldElement c);
Poly derivative(const Poly& p);
// Quotient and remainder. Throws DivisionByZero when `divisor` is zero.
std::pair<Poly, Poly> divmod(const Field& field, const Poly& dividend, const Poly& divisor);
Poly monic(const Field& field, const Poly& p);

// Monic gcd by Euclid's algorithm. Throws DomainError when both are zero.
Poly gcd(const Field& field, const Poly& a, const Poly& b);

// x^(2^n) mod f by n successive squarings. Throws DomainError if deg f < 1.
Poly modpow_frobenius(const Field& field, const Poly& f);

// Number of distinct roots of f in the field: deg gcd(f, x^(2^n) - x).
int count_roots_gcd(const Field& field, const Poly& f);

// "0x1*x^3 + 0x1*x + 0x2"; the zero polynomial prints as "0".
std::string to_string(const Poly& p);

}  // namespace gf2cube

#endif  // GF2CUBE_POLY_H_
