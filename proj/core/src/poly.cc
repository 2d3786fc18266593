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

#include "gf2cube/poly.h"

#include <algorithm>

#include "gf2cube/error.h"
#include "gf2cube/format.h"

namespace gf2cube {

Poly::Poly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(FieldElement c, int k) {
  std::vector<FieldElement> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

FieldElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement();
  return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<FieldElement> sum(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Poly(std::move(sum));
}

FieldElement eval(const Field& field, const Poly& p, FieldElement x) {
  FieldElement acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.mul(acc, x) + *it;
  return acc;
}

Poly mul(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<FieldElement> product(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      product[i + j] += field.mul(a.coeffs()[i], b.coeffs()[j]);
    }
  }
  return Poly(std::move(product));
}

Poly scale(const Field& field, const Poly& p, FieldElement c) {
  std::vector<FieldElement> out(p.coeffs());
  for (auto& x : out) x = field.mul(x, c);
  return Poly(std::move(out));
}

Poly derivative(const Poly& p) {
  // d/dx x^k = k x^(k-1), and k vanishes for even k in characteristic 2.
  if (p.degree() < 1) return Poly();
  std::vector<FieldElement> out(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); k += 2) out[k - 1] = p.coeffs()[k];
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& field, const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<FieldElement> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Poly(), dividend};
  std::vector<FieldElement> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  const FieldElement lead_inv = field.inv(divisor.leading());
  for (int k = dividend.degree(); k >= dd; --k) {
    const FieldElement top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const FieldElement factor = field.mul(top, lead_inv);
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k - dd + i)] +=
          field.mul(factor, divisor.coeffs()[static_cast<std::size_t>(i)]);
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly monic(const Field& field, const Poly& p) {
  if (p.is_zero()) return p;
  return scale(field, p, field.inv(p.leading()));
}

Poly gcd(const Field& field, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(field, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(field, x);
}

Poly modpow_frobenius(const Field& field, const Poly& f) {
  if (f.degree() < 1) throw DomainError("modulus polynomial must have degree >= 1");
  Poly r = divmod(field, Poly({field.zero(), field.one()}), f).second;
  for (int i = 0; i < field.degree(); ++i) r = divmod(field, mul(field, r, r), f).second;
  return r;
}

int count_roots_gcd(const Field& field, const Poly& f) {
  const Poly x_mod_f = divmod(field, Poly({field.zero(), field.one()}), f).second;
  const Poly h = modpow_frobenius(field, f) + x_mod_f;
  return gcd(field, f, h).degree();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const FieldElement c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += to_hex(c);
    if (k >= 1) out += "*x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace gf2cube
