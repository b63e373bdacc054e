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
 * Dealer and participant sides of the (n, n) scheme.
 *
 * Sharing encodes pixel l with color bit b into |C_b> and hands qubit j of
 * that register to participant j. Recovery measures all n qubits of each
 * pixel in the computational basis and XORs the outcome.
 *
 * Two backends produce identically distributed observables:
 *  - kStatevector keeps the full register per pixel in the SessionStore. A
 *    qubit cannot be copied, so a ShareFile only carries handles
 *    (pixel, qubit) into the store, which stands in for the quantum channel.
 *  - kSampled measures at share time. Every later step is a computational
 *    basis measurement, so the measurement can be moved to the front without
 *    changing any distribution. ShareFile j then carries the bit x^j of each
 *    pixel, and n may go up to 64.
 */

#ifndef QVSS_PROTOCOL_H_
#define QVSS_PROTOCOL_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qvss/image.h"
#include "qvss/state_vector.h"

namespace qvss {

enum class Backend : uint8_t { kStatevector = 0, kSampled = 1 };

const char* BackendName(Backend backend);
Backend ParseBackend(std::string_view name);

inline constexpr int kMaxSampledParticipants = 64;

using SessionId = std::array<uint8_t, 16>;
std::string SessionIdHex(const SessionId& id);

struct QubitHandle {
  uint32_t pixel;  // one-based pixel index l
  uint16_t qubit;  // one-based qubit index j

  friend bool operator==(const QubitHandle&, const QubitHandle&) = default;
};

/// Statevector register, or the sampled outcome of one.
using PixelRegister = std::variant<StateVector, BasisOutcome>;

struct SessionStore {
  int n = 0;
  Backend backend = Backend::kStatevector;
  uint64_t master_seed = 0;
  SessionId id{};
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<PixelRegister> registers;  // registers[l-1] is pixel l

  size_t pixel_count() const { return registers.size(); }
};

struct ShareFile {
  Backend backend = Backend::kStatevector;
  int n = 0;
  int participant = 0;  // j in 1..n
  uint32_t width = 0;
  uint32_t height = 0;
  SessionId session_id{};
  std::vector<QubitHandle> handles;  // kStatevector payload
  std::vector<uint8_t> bits;         // kSampled payload, bits[l-1] = x^j

  size_t pixel_count() const {
    return backend == Backend::kStatevector ? handles.size() : bits.size();
  }

  friend bool operator==(const ShareFile&, const ShareFile&) = default;
};

struct SharingResult {
  SessionStore session;
  std::vector<ShareFile> shares;  // shares[j-1] belongs to participant j
};

/// Encodes every pixel and splits the registers among n participants.
/// Output depends only on (image, n, backend, seed); `workers` > 1 fans the
/// per-pixel work out over threads without changing a single byte.
SharingResult ShareImage(const BinaryImage& image, int n, Backend backend,
                         uint64_t seed, int workers = 1);

/// Cooperative recovery. Requires one share from each of the n participants,
/// all bound to `session`. In the statevector backend the session registers
/// collapse onto their measured outcomes.
BinaryImage RecoverImage(std::span<const ShareFile> shares,
                         SessionStore& session, uint64_t seed,
                         int workers = 1);

/// White iff the outcome has even parity.
Color RecoverPixel(const BasisOutcome& outcome);

enum class Verdict {
  kNoInformation,   // proper subset, marginals uniform
  kFullRecovery,    // all n participants, every pixel has a definite parity
  kInformationLeak, // proper subset, marginal departs from uniform
  kInconsistent,    // full subset but some register mixes both parities
};

const char* VerdictName(Verdict v);

inline constexpr double kAuditPValueThreshold = 0.001;

struct AuditReport {
  std::vector<int> subset;
  bool proper = true;
  Backend backend = Backend::kStatevector;
  // Exact per-pixel marginals (statevector backend only).
  std::vector<std::vector<double>> per_pixel;
  // Statevector: mean of per_pixel. Sampled: empirical pattern frequencies.
  std::vector<double> aggregate;
  std::vector<uint64_t> counts;  // sampled backend only
  double max_deviation = 0.0;
  double p_value = 1.0;  // chi-square vs uniform, sampled backend only
  Verdict verdict = Verdict::kNoInformation;
};

/// What a coalition of participants can learn from their qubits.
AuditReport AuditSubset(const SessionStore& session,
                        std::span<const int> subset);

std::vector<uint8_t> SerializeShare(const ShareFile& share);
ShareFile DeserializeShare(std::span<const uint8_t> bytes);
std::vector<uint8_t> SerializeSession(const SessionStore& session);
SessionStore DeserializeSession(std::span<const uint8_t> bytes);

}  // namespace qvss

#endif  // QVSS_PROTOCOL_H_
