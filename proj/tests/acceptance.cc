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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gf2cube/gf2cube.h"
#include "testing/reference.h"

namespace {

using namespace gf2cube;
using Set = std::vector<FieldElement>;
using Clock = std::chrono::steady_clock;

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Each check returns an empty string on success, otherwise the first failure.
struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;  // 0 for no time bound
  std::function<std::string()> check;
};

std::string at(int n, const std::string& what) { return "n=" + std::to_string(n) + ": " + what; }

std::string closed_equals_brute() {
  for (int n = 1; n <= 16; ++n) {
    const Field f(n);
    const ImagePartition closed = image_closed_form(f, jobs());
    const ImagePartition brute = image_bruteforce(f, jobs()).partition;
    if (closed.image != brute.image) return at(n, "image differs");
    if (closed.y1 != brute.y1 || closed.y3 != brute.y3 || closed.y0 != brute.y0) {
      return at(n, "partition differs");
    }
    if (closed.preimage_count != brute.preimage_count) return at(n, "preimage counts differ");
  }
  return {};
}

std::string small_fields() {
  auto E = [](std::uint32_t v) { return FieldElement(v); };
  const ImagePartition p1 = image_closed_form(Field(1));
  if (p1.image != Set{E(0)}) return at(1, "image is not {0}");

  const ImagePartition p2 = image_closed_form(Field(2));
  if (p2.image != Set{E(0), E(2), E(3)}) return at(2, "image is not F4 \\ {1}");

  const ImagePartition p3 = image_closed_form(Field(3));
  if (p3.image.size() != 5) return at(3, "|image| != 5");
  if (p3.y3 != Set{E(1)}) return at(3, "Y3 != {1}");

  const ImagePartition p4 = image_closed_form(Field(4));
  if (p4.image.size() != 11 || p4.y1.size() != 8 || p4.y3.size() != 2) {
    return at(4, "sizes are not (11, 8, 2)");
  }
  for (const ImagePartition* p : {&p1, &p2, &p3, &p4}) {
    if (p->image != image_bruteforce(Field(p->n)).partition.image) {
      return at(p->n, "disagrees with brute force");
    }
  }
  return {};
}

std::string count_formulas() {
  for (int n = 2; n <= 24; ++n) {
    const std::uint64_t q = std::uint64_t{1} << n;
    const bool even = n % 2 == 0;
    const std::uint64_t y1 = even ? q / 2 : q / 2 - 1;
    const std::uint64_t y3 = even ? (q - 4) / 6 : (q - 2) / 6;
    const ImageCounts got = counts_of(image_closed_form(Field(n), jobs()));
    if (got.y1 != y1) return at(n, "|Y1| = " + std::to_string(got.y1));
    if (got.y3 != y3) return at(n, "|Y3| = " + std::to_string(got.y3));
    if (2 + got.y1 + 3 * got.y3 != q) return at(n, "2 + |Y1| + 3|Y3| != 2^n");
    if (got.image != 1 + y1 + y3) return at(n, "|image| inconsistent");
  }
  return {};
}

// Preimage counts of x^3 + x from the reference shift-and-add arithmetic.
std::vector<int> reference_counts(const Field& f) {
  std::vector<int> counts(f.order(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) ++counts[testing::ref_cube_plus_x(x, f.modulus())];
  return counts;
}

std::string four_routes() {
  for (int n = 2; n <= 12; ++n) {
    const Field f(n);
    const std::vector<int> counts = reference_counts(f);
    for (std::uint64_t v = 1; v < f.order(); ++v) {
      const FieldElement xi = f.element(v);
      const int brute = counts[v];
      const CubicClassification kind = classify_williams(f, f.one(), xi);
      const CubicClassification want = brute == 3   ? CubicClassification::kThreeLinear
                                       : brute == 1 ? CubicClassification::kLinearTimesQuadratic
                                                    : CubicClassification::kIrreducible;
      const std::string where = "xi=" + to_hex(xi);
      if (kind != want) return at(n, where + " Williams classification");
      if (count_roots_gcd(f, Poly({xi, f.one(), f.zero(), f.one()})) != brute) {
        return at(n, where + " gcd root count");
      }
      if (static_cast<int>(count_field_roots(f, xi).roots.size()) != brute) {
        return at(n, where + " field root count");
      }
    }
  }
  return {};
}

std::string explicit_roots() {
  for (int n = 1; n <= 10; ++n) {
    const Field f(n);
    const std::vector<int> counts = reference_counts(f);
    for (std::uint64_t v = 1; v < f.order(); ++v) {
      const FieldElement xi = f.element(v);
      const Set roots = roots_depressed_cubic(f, xi);
      const std::string where = "xi=" + to_hex(xi);
      for (FieldElement x : roots) {
        if (testing::ref_cube_plus_x(x.bits(), f.modulus()) != v) {
          return at(n, where + " root " + to_hex(x) + " does not solve x^3 + x = xi");
        }
      }
      if (static_cast<int>(roots.size()) != counts[v]) return at(n, where + " wrong root count");
      const std::size_t labelled = label_of(f, xi) == RootLabel::kY3   ? 3
                                   : label_of(f, xi) == RootLabel::kY1 ? 1
                                                                       : 0;
      if (roots.size() != labelled) return at(n, where + " size disagrees with label");
    }
  }
  return {};
}

std::string general_cubics() {
  std::mt19937_64 rng(20261018);
  for (int n : {3, 4, 8}) {
    const Field f(n);
    const ImagePartition base = image_closed_form(f);
    std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1), nz(1, f.order() - 1);
    for (int i = 0; i < 1000; ++i) {
      const CubicCoeffs k{f.element(nz(rng)), f.element(any(rng)), f.element(any(rng)),
                          f.element(any(rng))};
      const std::string where = "cubic #" + std::to_string(i);
      if (image_general_cubic(f, k, base) != image_bruteforce_general(f, k)) {
        return at(n, where + " image differs");
      }
      const ReducedCubic r = reduce_general_cubic(f, k);
      for (std::uint64_t v = 0; v < f.order(); ++v) {
        const std::uint32_t x = static_cast<std::uint32_t>(v);
        const std::uint64_t m = f.modulus();
        // a x^3 + b x^2 + c x + d with the reference arithmetic.
        const std::uint32_t x2 = testing::ref_mul(x, x, m);
        const std::uint32_t want = testing::ref_mul(k.a.bits(), testing::ref_mul(x2, x, m), m) ^
                                   testing::ref_mul(k.b.bits(), x2, m) ^
                                   testing::ref_mul(k.c.bits(), x, m) ^ k.d.bits();
        const FieldElement z = f.mul(r.u, f.element(v)) + r.v;
        if (evaluate_reduced(f, r, z).bits() != want) return at(n, where + " back-substitution");
      }
    }
  }
  return {};
}

std::string modulus_invariance() {
  const std::uint64_t moduli[] = {0x11b, 0x11d};
  for (std::uint64_t m : moduli) {
    if (!testing::irreducible_by_factor_search(m)) return "modulus " + to_hex(m) + " reducible";
  }
  const ImageCounts a = counts_of(image_closed_form(Field(8, moduli[0])));
  const ImageCounts b = counts_of(image_closed_form(Field(8, moduli[1])));
  const ImageCounts ab = counts_of(image_bruteforce(Field(8, moduli[0])).partition);
  const ImageCounts bb = counts_of(image_bruteforce(Field(8, moduli[1])).partition);
  if (!(a == b) || !(a == ab) || !(b == bb)) return "cardinalities depend on the modulus";
  return {};
}

std::string fiber_sizes() {
  std::string detail;
  for (int n : {2, 4, 6, 8}) {
    const VerifyReport report = verify_partition(Field(n));
    if (!report.fibers) return at(n, "no fiber audit in the report");
    for (const auto& [size, values] : report.fibers->size_histogram) {
      if (size != 3 && size != 6) return at(n, "fiber of size " + std::to_string(size));
    }
    if (!report.fibers->sizes_ok) return at(n, "audit flagged bad sizes");
    std::uint64_t size3 = report.fibers->size_histogram.count(3)
                              ? report.fibers->size_histogram.at(3)
                              : 0;
    if (size3 != report.fibers->size3_locations.size()) {
      return at(n, "size-3 locations missing from the report");
    }
    detail += " n=" + std::to_string(n) + ":[";
    for (std::size_t i = 0; i < report.fibers->size3_locations.size(); ++i) {
      detail += (i ? "," : "") + to_hex(report.fibers->size3_locations[i]);
    }
    detail += "]";
  }
  std::printf("       size-3 fibers:%s\n", detail.c_str());
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC-1", "closed form equals brute force, n = 1..16", 30, closed_equals_brute},
      {"AC-2", "small-field images n = 1..4", 0, small_fields},
      {"AC-3", "counting formulas n = 2..24", 0, count_formulas},
      {"AC-4", "four root-count routes agree, n = 2..12", 60, four_routes},
      {"AC-5", "explicit roots solve x^3 + x = xi, n <= 10", 0, explicit_roots},
      {"AC-6", "general cubics: image and back-substitution, n in {3,4,8}", 60, general_cubics},
      {"AC-7", "cardinalities independent of the modulus, n = 8", 0, modulus_invariance},
      {"AC-8", "even-n fiber sizes in {3, 6}", 0, fiber_sizes},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    std::string error;
    try {
      error = c.check();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (error.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      error = "took longer than " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    std::printf("%s %s  %s (%.2f s)%s%s\n", error.empty() ? "PASS" : "FAIL", c.id, c.title,
                seconds, error.empty() ? "" : ": ", error.c_str());
    if (!error.empty()) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
