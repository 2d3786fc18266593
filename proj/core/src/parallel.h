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

#ifndef GF2CUBE_SRC_PARALLEL_H_
#define GF2CUBE_SRC_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace gf2cube::internal {

// Splits [begin, end) into `jobs` contiguous chunks and runs
// fn(chunk_index, lo, hi) for each, on worker threads when jobs > 1. Chunk
// boundaries depend only on the range and the job count.
template <typename Fn>
void for_each_chunk(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn fn) {
  jobs = std::max(1u, jobs);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (jobs == 1 || total < 4096) {
    fn(0u, begin, end);
    return;
  }
  const std::uint64_t step = (total + jobs - 1) / jobs;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned k = 0; k < jobs; ++k) {
    const std::uint64_t lo = begin + std::min(total, step * k);
    const std::uint64_t hi = begin + std::min(total, step * (k + 1));
    workers.emplace_back([=] { fn(k, lo, hi); });
  }
  for (auto& w : workers) w.join();
}

// Number of chunks for_each_chunk will actually use.
inline unsigned chunk_count(std::uint64_t begin, std::uint64_t end, unsigned jobs) {
  jobs = std::max(1u, jobs);
  const std::uint64_t total = end > begin ? end - begin : 0;
  return (jobs == 1 || total < 4096) ? 1u : jobs;
}

}  // namespace gf2cube::internal

#endif  // GF2CUBE_SRC_PARALLEL_H_
