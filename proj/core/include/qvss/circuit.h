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

#ifndef QVSS_CIRCUIT_H_
#define QVSS_CIRCUIT_H_

#include <string>
#include <string_view>
#include <vector>

#include "qvss/state_vector.h"

namespace qvss {

enum class GateKind { kH, kX, kZ, kCnot, kToffoli };

/// Operands are one-based qubit indices. For kCnot the order is
/// {control, target}; for kToffoli {control1, control2, target}.
struct Gate {
  GateKind kind;
  std::vector<int> qubits;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  Circuit& H(int q);
  Circuit& X(int q);
  Circuit& Z(int q);
  Circuit& Cnot(int control, int target);
  Circuit& Toffoli(int control1, int control2, int target);
  Circuit& Append(Gate gate);

  size_t CountKind(GateKind kind) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<Gate> gates_;
};

/// Runs the gates in order on a copy of `initial`.
StateVector Simulate(const Circuit& circuit, const StateVector& initial);

/// OpenQASM 2.0 text. Qubit j maps to register slot q[j-1]. The output is a
/// pure function of the circuit: LF endings, no trailing spaces, one gate
/// per line after the register declarations.
std::string EmitAssembly(const Circuit& circuit);

/// Reads text produced by EmitAssembly back into a circuit. Only the subset
/// of OpenQASM that the emitter writes is accepted.
Circuit ParseAssembly(std::string_view text);

}  // namespace qvss

#endif  // QVSS_CIRCUIT_H_
