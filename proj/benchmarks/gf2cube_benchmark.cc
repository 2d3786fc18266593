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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gf2cube/gf2cube.h"

namespace gf2cube {
namespace {

std::vector<FieldElement> random_elements(const Field& f, std::size_t count, bool nonzero) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(nonzero ? 1 : 0, f.order() - 1);
  std::vector<FieldElement> out(count);
  for (auto& x : out) x = f.element(pick(rng));
  return out;
}

void BM_Mul(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const auto xs = random_elements(f, 1024, false);
  FieldElement acc = f.one();
  for (auto _ : state) {
    for (FieldElement x : xs) acc = f.mul(acc, x) + f.one();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_Mul)->Arg(8)->Arg(16)->Arg(32);

void BM_Inv(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const auto xs = random_elements(f, 256, true);
  for (auto _ : state) {
    for (FieldElement x : xs) benchmark::DoNotOptimize(f.inv(x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_Inv)->Arg(8)->Arg(16)->Arg(32);

void BM_Member(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const auto xs = random_elements(f, 256, false);
  for (auto _ : state) {
    for (FieldElement x : xs) benchmark::DoNotOptimize(member(f, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_Member)->Arg(16)->Arg(31)->Arg(32);

void BM_RootsDepressedCubic(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  const auto xs = random_elements(f, 64, true);
  for (auto _ : state) {
    for (FieldElement x : xs) benchmark::DoNotOptimize(roots_depressed_cubic(f, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_RootsDepressedCubic)->Arg(16)->Arg(31)->Arg(32);

void BM_ImageClosedForm(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image_closed_form(f));
}
BENCHMARK(BM_ImageClosedForm)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ImageBruteforce(benchmark::State& state) {
  const Field f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(image_bruteforce(f));
}
BENCHMARK(BM_ImageBruteforce)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gf2cube

BENCHMARK_MAIN();
