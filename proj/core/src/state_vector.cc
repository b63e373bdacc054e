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

#include "qvss/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "qvss/error.h"

namespace qvss {
namespace {

void CheckWidth(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    Throw(ErrorKind::kSize, "register width " + std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

}  // namespace

BasisOutcome BasisOutcome::FromString(std::string_view text) {
  BasisOutcome out;
  out.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      Throw(ErrorKind::kArgument,
            "basis string '" + std::string(text) + "' must contain only 0/1");
    }
    out.bits.push_back(static_cast<uint8_t>(c - '0'));
  }
  return out;
}

BasisOutcome BasisOutcome::FromIndex(uint64_t index, int num_qubits) {
  BasisOutcome out;
  out.bits.resize(num_qubits);
  for (int j = 0; j < num_qubits; ++j) {
    out.bits[j] = static_cast<uint8_t>((index >> (num_qubits - 1 - j)) & 1u);
  }
  return out;
}

std::string BasisOutcome::ToString() const {
  std::string s;
  s.reserve(bits.size());
  for (uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

uint64_t BasisOutcome::ToIndex() const {
  uint64_t index = 0;
  for (uint8_t b : bits) index = (index << 1) | (b & 1u);
  return index;
}

double MarginalDistribution::MaxDeviationFromUniform() const {
  const double uniform = 1.0 / static_cast<double>(probabilities.size());
  double worst = 0.0;
  for (double p : probabilities) worst = std::max(worst, std::abs(p - uniform));
  return worst;
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  CheckWidth(num_qubits);
  amplitudes_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::FromAmplitudes(std::vector<Amplitude> amplitudes) {
  const size_t len = amplitudes.size();
  if (len < 2 || !std::has_single_bit(len)) {
    Throw(ErrorKind::kSize, "amplitude count " + std::to_string(len) +
                                " is not a power of two >= 2");
  }
  const int n = std::countr_zero(len);
  CheckWidth(n);
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::Basis(const BasisOutcome& outcome) {
  StateVector state(static_cast<int>(outcome.size()));
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[outcome.ToIndex()] = 1.0;
  return state;
}

double StateVector::Norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

uint64_t StateVector::BitMask(int qubit) const {
  if (qubit < 1 || qubit > num_qubits_) {
    Throw(ErrorKind::kIndex, "qubit " + std::to_string(qubit) +
                                 " outside [1, " +
                                 std::to_string(num_qubits_) + "]");
  }
  return uint64_t{1} << (num_qubits_ - qubit);
}

void StateVector::ApplyH(int qubit) {
  const uint64_t mask = BitMask(qubit);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amplitudes_[i];
    const Amplitude a1 = amplitudes_[i | mask];
    amplitudes_[i] = (a0 + a1) * inv_sqrt2;
    amplitudes_[i | mask] = (a0 - a1) * inv_sqrt2;
  }
}

void StateVector::ApplyX(int qubit) {
  const uint64_t mask = BitMask(qubit);
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (!(i & mask)) std::swap(amplitudes_[i], amplitudes_[i | mask]);
  }
}

void StateVector::ApplyZ(int qubit) {
  const uint64_t mask = BitMask(qubit);
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) amplitudes_[i] = -amplitudes_[i];
  }
}

void StateVector::ApplyCnot(int control, int target) {
  const uint64_t c = BitMask(control);
  const uint64_t t = BitMask(target);
  if (control == target) {
    Throw(ErrorKind::kArgument, "CNOT control and target are both qubit " +
                                    std::to_string(control));
  }
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amplitudes_[i], amplitudes_[i | t]);
  }
}

void StateVector::ApplyToffoli(int control1, int control2, int target) {
  const uint64_t c1 = BitMask(control1);
  const uint64_t c2 = BitMask(control2);
  const uint64_t t = BitMask(target);
  if (control1 == control2 || control1 == target || control2 == target) {
    Throw(ErrorKind::kArgument, "Toffoli operands must be pairwise distinct");
  }
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & c1) && (i & c2) && !(i & t)) {
      std::swap(amplitudes_[i], amplitudes_[i | t]);
    }
  }
}

void StateVector::CheckNormalized() const {
  const double norm = Norm();
  if (std::abs(norm - 1.0) > kRuntimeNormTolerance) {
    Throw(ErrorKind::kStateCorruption,
          "statevector norm " + std::to_string(norm) + " deviates from 1");
  }
}

uint64_t StateVector::DrawIndex(double u) const {
  double cumulative = 0.0;
  uint64_t last_nonzero = 0;
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    if (p == 0.0) continue;
    last_nonzero = i;
    cumulative += p;
    if (u < cumulative) return i;
  }
  // Rounding left u just above the accumulated mass.
  return last_nonzero;
}

BasisOutcome StateVector::MeasureAll(Rng& rng) {
  CheckNormalized();
  const uint64_t index = DrawIndex(UniformUnit(rng));
  std::fill(amplitudes_.begin(), amplitudes_.end(), Amplitude{0.0, 0.0});
  amplitudes_[index] = 1.0;
  return BasisOutcome::FromIndex(index, num_qubits_);
}

std::vector<uint64_t> StateVector::Sample(Rng& rng, size_t shots) const {
  CheckNormalized();
  std::vector<uint64_t> out;
  out.reserve(shots);
  for (size_t s = 0; s < shots; ++s) out.push_back(DrawIndex(UniformUnit(rng)));
  return out;
}

double StateVector::ProbabilityOf(const BasisOutcome& outcome) const {
  if (outcome.size() != static_cast<size_t>(num_qubits_)) {
    Throw(ErrorKind::kArgument,
          "outcome has " + std::to_string(outcome.size()) + " bits, register has " +
              std::to_string(num_qubits_));
  }
  return std::norm(amplitudes_[outcome.ToIndex()]);
}

MarginalDistribution StateVector::Marginal(std::span<const int> subset) const {
  if (subset.empty()) Throw(ErrorKind::kArgument, "marginal subset is empty");
  uint64_t seen = 0;
  std::vector<uint64_t> masks;
  masks.reserve(subset.size());
  for (int q : subset) {
    if (q < 1 || q > num_qubits_) {
      Throw(ErrorKind::kArgument, "marginal qubit " + std::to_string(q) +
                                      " outside [1, " +
                                      std::to_string(num_qubits_) + "]");
    }
    const uint64_t m = uint64_t{1} << (num_qubits_ - q);
    if (seen & m) {
      Throw(ErrorKind::kArgument,
            "marginal qubit " + std::to_string(q) + " listed twice");
    }
    seen |= m;
    masks.push_back(m);
  }

  MarginalDistribution out;
  out.subset.assign(subset.begin(), subset.end());
  out.probabilities.assign(size_t{1} << subset.size(), 0.0);
  for (uint64_t i = 0; i < amplitudes_.size(); ++i) {
    const double p = std::norm(amplitudes_[i]);
    if (p == 0.0) continue;
    uint64_t pattern = 0;
    for (uint64_t m : masks) pattern = (pattern << 1) | ((i & m) ? 1u : 0u);
    out.probabilities[pattern] += p;
  }
  return out;
}

double StateVector::MaxAbsDifference(const StateVector& other) const {
  if (other.num_qubits_ != num_qubits_) {
    Throw(ErrorKind::kArgument, "comparing registers of different width");
  }
  double worst = 0.0;
  for (size_t i = 0; i < amplitudes_.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
  }
  return worst;
}

}  // namespace qvss
