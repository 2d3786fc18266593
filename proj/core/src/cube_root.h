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

#ifndef GF2CUBE_SRC_CUBE_ROOT_H_
#define GF2CUBE_SRC_CUBE_ROOT_H_

#include <cstdint>
#include <optional>

namespace gf2cube::internal {

// Cube root in a cyclic group of order `order` (Adleman-Manders-Miller for
// r = 3). `non_cube` must be a non-cube whenever 3 divides `order`; it is
// ignored otherwise. Returns nothing when `a` is not a cube.
//
// Writes order = 3^t * q with 3 not dividing q. x0 = a^e with 3e = 1 (mod q)
// satisfies x0^3 = a * s for some s in the 3-Sylow subgroup S. The base-3
// digits of log_c(s^-1) are peeled off one at a time, c = non_cube^q being a
// generator of S; a is a cube iff that logarithm is divisible by 3.
template <typename Elem, typename Mul, typename Pow>
std::optional<Elem> cube_root_cyclic(const Elem& a, const Elem& one,
                                     const Elem& non_cube, std::uint64_t order,
                                     Mul mul, Pow pow) {
  std::uint64_t q = order;
  int t = 0;
  while (q % 3 == 0) {
    q /= 3;
    ++t;
  }
  std::uint64_t e = 0;
  if (q % 3 == 1) {
    e = 2 * ((q - 1) / 3) + 1;  // (2q + 1) / 3 without overflow
  } else {
    e = (q + 1) / 3;
  }
  e %= q;  // q == 1 makes every exponent equivalent
  const Elem x0 = pow(a, e);
  if (t == 0) return x0;

  const Elem a_inv = pow(a, order - 1);
  const Elem s = mul(mul(mul(x0, x0), x0), a_inv);

  std::uint64_t sylow = 1;
  for (int i = 0; i < t; ++i) sylow *= 3;
  const Elem target = pow(s, sylow - 1);  // s^-1
  const Elem c = pow(non_cube, q);
  const Elem gamma = pow(c, sylow / 3);
  const Elem gamma2 = mul(gamma, gamma);

  std::uint64_t log = 0;
  std::uint64_t digit_weight = 1;
  for (int k = 0; k < t; ++k) {
    const Elem partial = mul(target, pow(c, (sylow - log) % sylow));
    const Elem h = pow(partial, sylow / (3 * digit_weight));
    std::uint64_t digit;
    if (h == one) {
      digit = 0;
    } else if (h == gamma) {
      digit = 1;
    } else if (h == gamma2) {
      digit = 2;
    } else {
      return std::nullopt;
    }
    log += digit * digit_weight;
    digit_weight *= 3;
  }
  if (log % 3 != 0) return std::nullopt;
  return mul(x0, pow(c, log / 3));
}

}  // namespace gf2cube::internal

#endif  // GF2CUBE_SRC_CUBE_ROOT_H_
