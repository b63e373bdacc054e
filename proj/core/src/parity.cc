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

#include "qvss/parity.h"

#include <bit>
#include <cmath>
#include <string>

#include "qvss/error.h"

namespace qvss {

void ParitySpec::Validate() const {
  if (n < 2) {
    Throw(ErrorKind::kArgument,
          "parity state needs n >= 2, got " + std::to_string(n));
  }
  if (b != 0 && b != 1) {
    Throw(ErrorKind::kArgument, "secret bit must be 0 or 1, got " +
                                    std::to_string(b));
  }
}

uint64_t NthParityIndex(uint64_t i, int b) {
  const uint64_t high = i << 1;
  const uint64_t parity = static_cast<uint64_t>(std::popcount(high) & 1);
  return high | (parity ^ static_cast<uint64_t>(b));
}

StateVector PrepareParityState(const ParitySpec& spec) {
  spec.Validate();
  if (spec.n > kMaxQubits) {
    Throw(ErrorKind::kSize, "parity register of " + std::to_string(spec.n) +
                                " qubits exceeds cap " +
                                std::to_string(kMaxQubits));
  }
  const uint64_t dim = uint64_t{1} << spec.n;
  const Amplitude weight =
      1.0 / std::sqrt(static_cast<double>(uint64_t{1} << (spec.n - 1)));
  std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
  for (uint64_t x = 0; x < dim; ++x) {
    if ((std::popcount(x) & 1) == spec.b) amps[x] = weight;
  }
  return StateVector::FromAmplitudes(std::move(amps));
}

std::vector<BasisOutcome> EnumerateParityBasis(const ParitySpec& spec) {
  spec.Validate();
  if (spec.n > kMaxEnumerableQubits) {
    Throw(ErrorKind::kSize, "refusing to enumerate 2^" +
                                std::to_string(spec.n - 1) + " strings");
  }
  const uint64_t count = uint64_t{1} << (spec.n - 1);
  std::vector<BasisOutcome> out;
  out.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    out.push_back(BasisOutcome::FromIndex(NthParityIndex(i, spec.b),
                                          spec.n));
  }
  return out;
}

Circuit BuildParityCircuit(const ParitySpec& spec) {
  spec.Validate();
  Circuit c(spec.n);
  for (int q = 1; q < spec.n; ++q) c.H(q);
  for (int q = 1; q < spec.n; ++q) c.Cnot(q, spec.n);
  if (spec.b == 1) c.X(spec.n);
  return c;
}

Circuit BuildXorCircuit(int n) {
  if (n < 2) {
    Throw(ErrorKind::kArgument,
          "XOR circuit needs n >= 2, got " + std::to_string(n));
  }
  Circuit c(n);
  for (int q = 1; q < n; ++q) c.Cnot(q, n);
  return c;
}

int XorDecode(std::span<const uint8_t> bits) {
  if (bits.empty()) Throw(ErrorKind::kArgument, "cannot decode an empty outcome");
  int acc = 0;
  for (uint8_t b : bits) acc ^= (b & 1);
  return acc;
}

}  // namespace qvss
