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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gf2cube/error.h"
#include "testing/reference.h"

namespace gf2cube {
namespace {

using testing::irreducible_by_factor_search;
using testing::ref_mul;
using testing::ref_trace;

FieldElement E(std::uint32_t bits) { return FieldElement(bits); }

constexpr FieldElement kW(0b10);   // generator of F4* under x^2 + x + 1
constexpr FieldElement kW2(0b11);  // w^2 = w + 1

TEST(FieldTest, DefaultModuliAreSmallestIrreducibles) {
  EXPECT_EQ(Field(2).modulus(), 0b111u);
  EXPECT_EQ(Field(4).modulus(), 0b10011u);
  EXPECT_EQ(Field(1).modulus(), 0b11u);
  // Independent sieve by trial division for every n up to 16.
  for (int n = 2; n <= 16; ++n) {
    std::uint64_t expected = 0;
    for (std::uint64_t m = (std::uint64_t{1} << n) | 1;; m += 2) {
      if (irreducible_by_factor_search(m)) {
        expected = m;
        break;
      }
    }
    EXPECT_EQ(Field(n).modulus(), expected) << "n = " << n;
  }
}

TEST(FieldTest, RabinAgreesWithFactorSearch) {
  for (std::uint64_t m = 2; m < (1u << 13); ++m) {
    ASSERT_EQ(gf2::is_irreducible(m), irreducible_by_factor_search(m)) << m;
  }
}

TEST(FieldTest, LargeDefaultModuliAreIrreducible) {
  for (int n = 17; n <= 32; ++n) {
    const Field f(n);
    EXPECT_EQ(gf2::degree(f.modulus()), n);
    EXPECT_TRUE(gf2::is_irreducible(f.modulus()));
  }
}

TEST(FieldTest, RejectsBadModuliAndDegrees) {
  EXPECT_THROW(Field(4, 0b10101), ModulusError);  // (x^2 + x + 1)^2
  EXPECT_THROW(Field(4, 0b111), ModulusError);    // wrong degree
  EXPECT_THROW(Field(0), RangeError);
  EXPECT_THROW(Field(33), RangeError);
  EXPECT_NO_THROW(Field(8, 0x11d));
  EXPECT_THROW(Field(3).element(8), RangeError);
}

TEST(FieldTest, SmallFieldExamples) {
  const Field f4(2);
  EXPECT_EQ(f4.mul(kW, kW), kW2);
  EXPECT_EQ(f4.mul(kW, kW2), f4.one());
  EXPECT_EQ(f4.mul(f4.zero(), kW), f4.zero());
  EXPECT_EQ(f4.inv(f4.one()), f4.one());
  EXPECT_EQ(f4.inv(kW), kW2);
  EXPECT_THROW(f4.inv(f4.zero()), DivisionByZero);
  EXPECT_EQ(f4.sqrt(kW2), kW);
  EXPECT_EQ(f4.sqrt(f4.zero()), f4.zero());
  EXPECT_EQ(f4.sqrt(f4.one()), f4.one());
  EXPECT_EQ(f4.trace(kW), 1);
}

TEST(FieldTest, TraceOfOneAlternatesWithParity) {
  for (int n = 1; n <= 32; ++n) {
    const Field f(n);
    EXPECT_EQ(f.trace(f.one()), n % 2) << n;
    EXPECT_EQ(f.trace_of_one(), n % 2);
    EXPECT_EQ(f.trace(f.zero()), 0);
  }
}

TEST(FieldTest, AxiomsExhaustiveUpToDegreeFive) {
  for (int n = 1; n <= 5; ++n) {
    const Field f(n);
    const std::uint32_t q = static_cast<std::uint32_t>(f.order());
    for (std::uint32_t a = 0; a < q; ++a) {
      if (a != 0) ASSERT_EQ(f.mul(E(a), f.inv(E(a))), f.one());
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.mul(E(a), E(b)).bits(), ref_mul(a, b, f.modulus()));
        for (std::uint32_t c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(f.mul(E(a), E(b)), E(c)), f.mul(E(a), f.mul(E(b), E(c))));
          ASSERT_EQ(f.mul(E(a), E(b) + E(c)), f.mul(E(a), E(b)) + f.mul(E(a), E(c)));
        }
      }
    }
  }
}

TEST(FieldTest, MulMatchesReferenceExhaustivelyForDegreeEight) {
  const Field f(8);
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      ASSERT_EQ(f.mul(E(a), E(b)).bits(), ref_mul(a, b, f.modulus()));
    }
  }
}

TEST(FieldTest, RandomAxiomsAllDegrees) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 32; ++n) {
    const Field f(n);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const FieldElement a = f.element(pick(rng)), b = f.element(pick(rng)),
                         c = f.element(pick(rng));
      ASSERT_EQ(f.mul(a, b).bits(), ref_mul(a.bits(), b.bits(), f.modulus()));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, b + c), f.mul(a, b) + f.mul(a, c));
      ASSERT_EQ(f.square(f.sqrt(a)), a);
      ASSERT_EQ(f.trace(a), ref_trace(a.bits(), f.modulus()));
      ASSERT_EQ(f.trace(a + b), f.trace(a) ^ f.trace(b));
      ASSERT_EQ(f.trace(f.square(a)), f.trace(a));
      if (!a.is_zero()) {
        ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
        ASSERT_EQ(f.pow(a, f.group_order()), f.one());
      }
    }
  }
}

TEST(FieldTest, TraceIsBalanced) {
  for (int n = 1; n <= 16; ++n) {
    const Field f(n);
    std::uint64_t ones = 0;
    for (std::uint64_t v = 0; v < f.order(); ++v) ones += f.trace(f.element(v));
    EXPECT_EQ(ones, f.order() / 2) << n;
  }
}

TEST(FieldTest, ArtinSchreierExamples) {
  const Field f4(2);
  const auto zero = f4.solve_artin_schreier(f4.zero());
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->first, f4.zero());
  EXPECT_EQ(zero->second, f4.one());
  EXPECT_FALSE(f4.solve_artin_schreier(kW));

  const Field f8(3, 0b1011);
  const auto alpha = f8.solve_artin_schreier(E(0b010));
  ASSERT_TRUE(alpha);
  EXPECT_EQ(alpha->first, E(0b100));   // alpha^2
  EXPECT_EQ(alpha->second, E(0b101));  // alpha^2 + 1
}

TEST(FieldTest, ArtinSchreierCriterionExhaustive) {
  for (int n = 1; n <= 12; ++n) {
    const Field f(n);
    for (std::uint64_t v = 0; v < f.order(); ++v) {
      const FieldElement c = f.element(v);
      const auto sol = f.solve_artin_schreier(c);
      ASSERT_EQ(sol.has_value(), f.trace(c) == 0) << "n=" << n << " c=" << v;
      if (sol) {
        ASSERT_EQ(f.square(sol->first) + sol->first, c);
        ASSERT_EQ(f.square(sol->second) + sol->second, c);
        ASSERT_EQ(sol->first + sol->second, f.one());
        ASSERT_LT(sol->first, sol->second);
      }
    }
  }
}

TEST(FieldTest, ArtinSchreierRandomLargeDegrees) {
  std::mt19937_64 rng(11);
  for (int n = 13; n <= 32; ++n) {
    const Field f(n);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    for (int i = 0; i < 100; ++i) {
      const FieldElement c = f.element(pick(rng));
      const auto sol = f.solve_artin_schreier(c);
      ASSERT_EQ(sol.has_value(), f.trace(c) == 0);
      if (sol) ASSERT_EQ(f.square(sol->first) + sol->first, c);
    }
  }
}

TEST(FieldTest, CubeTests) {
  const Field f4(2);
  EXPECT_FALSE(f4.is_cube(kW));
  EXPECT_TRUE(f4.is_cube(f4.one()));
  EXPECT_THROW(f4.is_cube(f4.zero()), DomainError);
  EXPECT_FALSE(f4.cube_root(kW));
  EXPECT_EQ(f4.cube_root(f4.zero()), f4.zero());

  for (int n : {1, 3, 5, 7, 9}) {
    const Field f(n);
    for (std::uint64_t v = 1; v < f.order(); ++v) ASSERT_TRUE(f.is_cube(f.element(v)));
  }

  const Field f16(4);
  for (std::uint64_t v = 1; v < 16; ++v) {
    const FieldElement a = f16.element(v);
    EXPECT_EQ(f16.is_cube(a), f16.pow(a, 5) == f16.one());
  }

  const Field f8(3);
  for (std::uint64_t v = 0; v < 8; ++v) {
    const auto r = f8.cube_root(f8.element(v));
    ASSERT_TRUE(r);
    EXPECT_EQ(f8.mul(f8.square(*r), *r), f8.element(v));
  }
}

// The set of cubes computed by cubing every element.
TEST(FieldTest, CubeCensusAndRootsExhaustive) {
  for (int n = 1; n <= 14; ++n) {
    const Field f(n);
    std::vector<bool> is_cube(f.order(), false);
    for (std::uint64_t v = 1; v < f.order(); ++v) {
      const FieldElement x = f.element(v);
      is_cube[f.mul(f.square(x), x).bits()] = true;
    }
    const auto census = std::count(is_cube.begin(), is_cube.end(), true);
    EXPECT_EQ(static_cast<std::uint64_t>(census),
              n % 2 == 0 ? f.group_order() / 3 : f.group_order());
    for (std::uint64_t v = 1; v < f.order(); ++v) {
      const FieldElement a = f.element(v);
      ASSERT_EQ(f.is_cube(a), is_cube[v]);
      const auto r = f.cube_root(a);
      ASSERT_EQ(r.has_value(), is_cube[v]) << "n=" << n << " a=" << v;
      if (r) ASSERT_EQ(f.mul(f.square(*r), *r), a);
    }
  }
}

// n = 18 has 27 | 2^18 - 1, exercising more than one peeled digit.
TEST(FieldTest, CubeRootsWithDeepSylowSubgroup) {
  std::mt19937_64 rng(3);
  for (int n : {6, 12, 18, 24, 30}) {
    const Field f(n);
    std::uniform_int_distribution<std::uint64_t> pick(1, f.order() - 1);
    for (int i = 0; i < 300; ++i) {
      const FieldElement x = f.element(pick(rng));
      const FieldElement cube = f.mul(f.square(x), x);
      const auto r = f.cube_root(cube);
      ASSERT_TRUE(r) << n;
      ASSERT_EQ(f.mul(f.square(*r), *r), cube);
      const FieldElement noncube = f.mul(cube, f.generator());
      ASSERT_FALSE(f.cube_root(noncube));
    }
  }
}

TEST(FieldTest, UnityGroups) {
  const Field f4(2);
  EXPECT_EQ(f4.unity_group(1), std::vector<FieldElement>{f4.one()});
  EXPECT_EQ(f4.unity_group(3), (std::vector<FieldElement>{E(1), E(2), E(3)}));
  EXPECT_THROW(f4.unity_group(5), DomainError);
  EXPECT_THROW(f4.unity_group(0), DomainError);

  for (int n = 1; n <= 12; ++n) {
    const Field f(n);
    for (std::uint64_t d = 1; d <= f.group_order(); ++d) {
      if (f.group_order() % d != 0) continue;
      const auto group = f.unity_group(d);
      ASSERT_EQ(group.size(), d);
      ASSERT_TRUE(std::is_sorted(group.begin(), group.end()));
      ASSERT_EQ(std::adjacent_find(group.begin(), group.end()), group.end());
      const std::set<FieldElement> members(group.begin(), group.end());
      for (FieldElement x : group) {
        ASSERT_EQ(f.pow(x, d), f.one());
        ASSERT_TRUE(members.count(f.inv(x)));
        ASSERT_TRUE(members.count(f.mul(x, group[group.size() / 2])));
      }
    }
  }
}

TEST(FieldTest, GeneratorHasFullOrder) {
  for (int n = 1; n <= 32; ++n) {
    const Field f(n);
    for (std::uint64_t p : f.group_order_primes()) {
      ASSERT_NE(f.pow(f.generator(), f.group_order() / p), f.one()) << n;
    }
    ASSERT_EQ(f.pow(f.generator(), f.group_order()), f.one());
  }
}

TEST(FieldTest, PrimeFactors) {
  EXPECT_EQ(prime_factors(1), std::vector<std::uint64_t>{});
  EXPECT_EQ(prime_factors(15), (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(prime_factors(4294967295u), (std::vector<std::uint64_t>{3, 5, 17, 257, 65537}));
  EXPECT_EQ(prime_factors(2147483647u), std::vector<std::uint64_t>{2147483647u});
}

}  // namespace
}  // namespace gf2cube
