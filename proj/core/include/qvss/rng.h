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

#ifndef QVSS_RNG_H_
#define QVSS_RNG_H_

#include <cstdint>
#include <random>

namespace qvss {

// mt19937_64's output sequence is fixed by the standard, so results are
// reproducible across standard libraries as long as we avoid the
// implementation-defined <random> distributions. The helpers below do that.
using Rng = std::mt19937_64;

inline uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the independent stream for work item `index` (a pixel, a shot
/// batch, ...) under `master`. Streams do not depend on processing order.
inline uint64_t DeriveSeed(uint64_t master, uint64_t index) {
  return SplitMix64(master ^ SplitMix64(index));
}

inline Rng MakeRng(uint64_t seed) { return Rng(seed); }

/// Uniform double in [0, 1) with 53 random bits.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), unbiased. bound must be positive.
inline uint64_t UniformBelow(Rng& rng, uint64_t bound) {
  const uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const uint64_t r = rng();
    if (r >= limit) return r % bound;
  }
}

}  // namespace qvss

#endif  // QVSS_RNG_H_
