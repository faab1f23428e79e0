// Copyright 2026 The clgkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLG_PARALLEL_H_
#define CLG_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace clg {

// Runs fn(i) for every i in [0, n) on up to `workers` threads. Each thread
// owns a contiguous block, so callers writing to slot i get results that do
// not depend on the worker count. The first exception thrown by any worker
// is rethrown on the calling thread.
template <typename Fn>
void ParallelFor(size_t n, int workers, Fn &&fn) {
  size_t w = static_cast<size_t>(std::max(1, workers));
  if (w == 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  w = std::min(w, n);
  const size_t chunk = (n + w - 1) / w;
  std::vector<std::thread> threads;
  threads.reserve(w);
  std::exception_ptr error;
  std::mutex error_mu;
  for (size_t t = 0; t < w; ++t) {
    const size_t b = t * chunk;
    const size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([b, e, &fn, &error, &error_mu] {
      try {
        for (size_t i = b; i < e; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto &th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace clg

#endif  // CLG_PARALLEL_H_
