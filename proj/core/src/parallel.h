// Copyright 2026 The QVSS Authors
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

#ifndef QVSS_SRC_PARALLEL_H_
#define QVSS_SRC_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qvss::internal {

// Calls fn(l) for l = 1..count, striding pixels over `workers` threads.
// fn must only touch state owned by pixel l. The first exception thrown by
// any worker is rethrown on the calling thread.
template <typename Fn>
void ForEachPixel(size_t count, int workers, Fn&& fn) {
  const size_t w = static_cast<size_t>(std::clamp(workers, 1, 64));
  if (w == 1 || count < 2) {
    for (size_t l = 1; l <= count; ++l) fn(l);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (size_t t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (size_t l = 1 + t; l <= count; l += w) fn(l);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qvss::internal

#endif  // QVSS_SRC_PARALLEL_H_
