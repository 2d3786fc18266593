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

#include "gf2cube/oracle.h"

#include <gtest/gtest.h>

#include "gf2cube/error.h"
#include "gf2cube/image.h"
#include "gf2cube/verify.h"
#include "testing/reference.h"

namespace gf2cube {
namespace {

FieldElement E(std::uint32_t bits) { return FieldElement(bits); }
using Set = std::vector<FieldElement>;

TEST(OracleTest, Examples) {
  const OracleReport r1 = image_bruteforce(Field(1));
  EXPECT_EQ(r1.n, 1);
  EXPECT_EQ(r1.partition.image, Set{E(0)});
  EXPECT_EQ(r1.partition.count_of(E(0)), 2);

  const ImagePartition p2 = image_bruteforce(Field(2)).partition;
  EXPECT_EQ(p2.image, (Set{E(0), E(2), E(3)}));
  EXPECT_EQ(p2.count_of(E(0)), 2);
  EXPECT_EQ(p2.count_of(E(2)), 1);
  EXPECT_EQ(p2.count_of(E(3)), 1);
  EXPECT_EQ(p2.count_of(E(1)), 0);

  EXPECT_EQ(image_bruteforce(Field(4)).partition.image.size(), 11u);
  EXPECT_THROW(image_bruteforce(Field(25)), FeasibilityError);
}

TEST(OracleTest, CountsMatchReferenceArithmetic) {
  for (int n = 1; n <= 10; ++n) {
    const Field f(n);
    std::vector<std::uint8_t> counts(f.order(), 0);
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      ++counts[testing::ref_cube_plus_x(x, f.modulus())];
    }
    EXPECT_EQ(image_bruteforce(f).partition.preimage_count, counts) << n;
  }
}

TEST(OracleTest, Preimages) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(preimages_bruteforce(Field(n), E(0)), (Set{E(0), E(1)}));
  }
  EXPECT_EQ(preimages_bruteforce(Field(3), E(1)).size(), 3u);
  EXPECT_TRUE(preimages_bruteforce(Field(4), E(1)).empty());
  EXPECT_THROW(preimages_bruteforce(Field(30), E(1)), FeasibilityError);
}

TEST(OracleTest, DeterministicAcrossJobCounts) {
  const Field f(14);
  const ImagePartition one = image_bruteforce(f, 1).partition;
  for (unsigned jobs : {2u, 3u, 8u}) {
    const ImagePartition many = image_bruteforce(f, jobs).partition;
    EXPECT_EQ(many.preimage_count, one.preimage_count);
    EXPECT_EQ(many.image, one.image);
    EXPECT_EQ(many.y3, one.y3);
  }
}

TEST(VerifyTest, SmallDegreesPass) {
  for (int n : {3, 4}) {
    const VerifyReport report = verify_partition(Field(n));
    EXPECT_TRUE(report.pass()) << n;
    EXPECT_TRUE(report.diff.empty());
  }
  EXPECT_FALSE(verify_partition(Field(3)).fibers);
  const VerifyReport even = verify_partition(Field(4));
  ASSERT_TRUE(even.fibers);
  EXPECT_EQ(even.fibers->size3_locations, Set{E(0)});
  EXPECT_EQ(even.fibers->size_histogram.at(6), 2u);
}

TEST(VerifyTest, InjectedFaultIsReported) {
  const Field f(4);
  const ImagePartition closed = image_closed_form(f);
  std::vector<std::uint8_t> counts = closed.preimage_count;
  // Move one Y1 value into Y0.
  const FieldElement victim = closed.y1.front();
  counts[victim.bits()] = 0;
  const ImagePartition faulty = partition_from_counts(f, counts);

  const PartitionDiff d = diff_partitions(faulty, closed);
  EXPECT_FALSE(d.empty());
  EXPECT_EQ(d.count_mismatches, Set{victim});
  EXPECT_EQ(d.y1.only_brute, Set{victim});
  EXPECT_TRUE(d.y1.only_closed.empty());
  EXPECT_EQ(d.y0.only_closed, Set{victim});
  EXPECT_EQ(d.image.only_brute, Set{victim});
  EXPECT_TRUE(d.y3.empty());
}

}  // namespace
}  // namespace gf2cube
