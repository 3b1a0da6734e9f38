// Copyright 2026 The rankguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace rankguard {

/// Worker count: RANKGUARD_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
inline std::size_t thread_count() {
  if (const char* env = std::getenv("RANKGUARD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into contiguous chunks, one per worker, and calls
/// body(chunk, begin, end). Callers reduce the per-chunk results in chunk
/// order, so output does not depend on scheduling.
template <class Body>
void parallel_chunks(std::uint64_t total, std::size_t workers, Body body) {
  if (workers <= 1 || total < 2) {
    body(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  if (workers > total) workers = static_cast<std::size_t>(total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * step;
    const std::uint64_t end = begin + step < total ? begin + step : total;
    pool.emplace_back([=, &body] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rankguard
