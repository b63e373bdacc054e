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

#ifndef QVSS_STATS_H_
#define QVSS_STATS_H_

#include <cstdint>
#include <span>

namespace qvss {

struct ChiSquareResult {
  double statistic = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// Pearson goodness-of-fit of observed counts against expected
/// probabilities. Bins with zero expected probability are dropped from the
/// statistic; any observation in such a bin forces p = 0.
ChiSquareResult ChiSquareTest(std::span<const uint64_t> observed,
                              std::span<const double> expected);

}  // namespace qvss

#endif  // QVSS_STATS_H_
