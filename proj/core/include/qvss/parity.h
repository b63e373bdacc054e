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

/**
 * @file
 * Parity superposition states.
 *
 * |C_b> on n qubits is the equal-weight superposition of the 2^(n-1) basis
 * strings whose bits XOR to b. A white pixel is encoded as |C_0>, a black
 * pixel as |C_1>. Any measurement of all n qubits yields a string of parity
 * b, while every proper subset of the qubits is uniformly distributed.
 */

#ifndef QVSS_PARITY_H_
#define QVSS_PARITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qvss/circuit.h"
#include "qvss/state_vector.h"

namespace qvss {

inline constexpr int kMaxEnumerableQubits = 24;

struct ParitySpec {
  int n;  // participants, one qubit each
  int b;  // secret bit: 0 white, 1 black

  /// Throws kArgument unless n >= 2 and b in {0, 1}.
  void Validate() const;
};

StateVector PrepareParityState(const ParitySpec& spec);

/// All parity-b strings of length n in ascending integer order.
std::vector<BasisOutcome> EnumerateParityBasis(const ParitySpec& spec);

/// The i-th (zero-based) element of EnumerateParityBasis as an integer:
/// the top n-1 bits are i and the last bit restores the parity.
uint64_t NthParityIndex(uint64_t i, int b);

/// H on 1..n-1, CNOT k -> n for k = 1..n-1, then X on n when b = 1.
Circuit BuildParityCircuit(const ParitySpec& spec);

/// CNOT k -> n for k = 1..n-1. On a basis input, qubit n ends up holding
/// the XOR of all n input bits.
Circuit BuildXorCircuit(int n);

int XorDecode(std::span<const uint8_t> bits);
inline int XorDecode(const BasisOutcome& outcome) { return XorDecode(outcome.bits); }

}  // namespace qvss

#endif  // QVSS_PARITY_H_
