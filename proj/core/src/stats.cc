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

#include "qvss/stats.h"

#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

#include "qvss/error.h"

namespace qvss {

ChiSquareResult ChiSquareTest(std::span<const uint64_t> observed,
                              std::span<const double> expected) {
  if (observed.size() != expected.size() || observed.empty()) {
    Throw(ErrorKind::kArgument, "chi-square needs matching non-empty bins");
  }
  uint64_t total = 0;
  for (uint64_t c : observed) total += c;

  ChiSquareResult out;
  int bins = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0.0) {
      if (observed[i] != 0) {
        out.statistic = std::numeric_limits<double>::infinity();
        out.p_value = 0.0;
        return out;
      }
      continue;
    }
    const double e = expected[i] * static_cast<double>(total);
    const double d = static_cast<double>(observed[i]) - e;
    out.statistic += d * d / e;
    ++bins;
  }
  out.degrees_of_freedom = bins - 1;
  if (out.degrees_of_freedom < 1 || total == 0) {
    out.p_value = 1.0;
    return out;
  }
  const boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

}  // namespace qvss
