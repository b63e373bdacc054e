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
 * Dense statevector of an n-qubit register.
 *
 * Qubits are numbered 1..n. Qubit 1 is the most significant bit of the
 * basis index, so the basis state |x1 x2 ... xn> lives at index
 * x1*2^(n-1) + ... + xn and printed bitstrings read left to right in
 * qubit order.
 */

#ifndef QVSS_STATE_VECTOR_H_
#define QVSS_STATE_VECTOR_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvss/rng.h"

namespace qvss {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 16;
inline constexpr double kAnalyticTolerance = 1e-12;
inline constexpr double kRuntimeNormTolerance = 1e-9;

/// Computational-basis measurement result; bits[j-1] is the value of qubit j.
struct BasisOutcome {
  std::vector<uint8_t> bits;

  static BasisOutcome FromString(std::string_view text);
  static BasisOutcome FromIndex(uint64_t index, int num_qubits);

  std::string ToString() const;
  uint64_t ToIndex() const;
  size_t size() const { return bits.size(); }

  friend bool operator==(const BasisOutcome&, const BasisOutcome&) = default;
};

struct MarginalDistribution {
  std::vector<int> subset;  // qubit indices, subset[0] is the high bit
  std::vector<double> probabilities;

  /// max |p - 2^-k| over all patterns.
  double MaxDeviationFromUniform() const;
};

class StateVector {
 public:
  /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
  explicit StateVector(int num_qubits);

  /// Takes ownership of explicit amplitudes. The length must be a power of two
  /// within the qubit cap; normalization is not enforced here.
  static StateVector FromAmplitudes(std::vector<Amplitude> amplitudes);

  static StateVector Basis(const BasisOutcome& outcome);

  int num_qubits() const { return num_qubits_; }
  size_t size() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](size_t index) const { return amplitudes_[index]; }

  double Norm() const;  // sum of |a|^2

  void ApplyH(int qubit);
  void ApplyX(int qubit);
  void ApplyZ(int qubit);
  void ApplyCnot(int control, int target);
  void ApplyToffoli(int control1, int control2, int target);

  /// Samples a basis state with probability |a|^2 and collapses onto it.
  BasisOutcome MeasureAll(Rng& rng);

  /// Samples without collapsing. Returns basis indices.
  std::vector<uint64_t> Sample(Rng& rng, size_t shots) const;

  double ProbabilityOf(const BasisOutcome& outcome) const;

  MarginalDistribution Marginal(std::span<const int> subset) const;

  /// max |a_i - b_i| over all amplitudes; states must have equal width.
  double MaxAbsDifference(const StateVector& other) const;

 private:
  StateVector(int num_qubits, std::vector<Amplitude> amplitudes);

  uint64_t BitMask(int qubit) const;  // validates qubit
  void CheckNormalized() const;
  uint64_t DrawIndex(double u) const;

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

}  // namespace qvss

#endif  // QVSS_STATE_VECTOR_H_
