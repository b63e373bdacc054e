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

#include "qvss/protocol.h"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>

#include "byte_io.h"
#include "parallel.h"
#include "qvss/error.h"
#include "qvss/parity.h"
#include "qvss/rng.h"
#include "qvss/stats.h"

namespace qvss {
namespace {

using internal::ByteReader;
using internal::ByteWriter;

constexpr uint8_t kFormatVersion = 1;
constexpr std::array<uint8_t, 4> kShareMagic = {'Q', 'V', 'S', 'S'};
constexpr std::array<uint8_t, 4> kSessionMagic = {'Q', 'V', 'S', 'E'};
constexpr uint64_t kSessionIdStream = 0x5345535349304e49ULL;

int MaxParticipants(Backend backend) {
  return backend == Backend::kStatevector ? kMaxQubits : kMaxSampledParticipants;
}

void CheckParticipants(int n, Backend backend) {
  if (n < 2 || n > MaxParticipants(backend)) {
    Throw(ErrorKind::kSize, "n = " + std::to_string(n) + " outside [2, " +
                                std::to_string(MaxParticipants(backend)) +
                                "] for the " + BackendName(backend) +
                                " backend");
  }
}

uint64_t Fnv1a(uint64_t h, uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SessionId MakeSessionId(const BinaryImage& image, int n, Backend backend,
                        uint64_t seed) {
  uint64_t h = 0xcbf29ce484222325ULL;
  h = Fnv1a(h, image.width(), 4);
  h = Fnv1a(h, image.height(), 4);
  h = Fnv1a(h, static_cast<uint64_t>(n), 2);
  h = Fnv1a(h, static_cast<uint64_t>(backend), 1);
  for (Color c : image.pixels()) h = Fnv1a(h, ToBit(c), 1);
  const uint64_t a = DeriveSeed(seed, kSessionIdStream) ^ h;
  const uint64_t b = SplitMix64(a ^ seed);
  SessionId id{};
  for (int i = 0; i < 8; ++i) {
    id[i] = static_cast<uint8_t>(a >> (8 * i));
    id[8 + i] = static_cast<uint8_t>(b >> (8 * i));
  }
  return id;
}

uint32_t Crc32(std::span<const uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; files here stay far below 4 GiB per call, but
  // chunk anyway.
  size_t pos = 0;
  while (pos < bytes.size()) {
    const size_t chunk = std::min<size_t>(bytes.size() - pos, 1u << 30);
    crc = crc32(crc, bytes.data() + pos, static_cast<uInt>(chunk));
    pos += chunk;
  }
  return static_cast<uint32_t>(crc);
}

struct Header {
  Backend backend;
  int n;
  int participant;
  uint32_t pixel_count;
  uint32_t width;
  uint32_t height;
  SessionId id;
};

void WriteHeader(ByteWriter& w, const std::array<uint8_t, 4>& magic,
                 const Header& h) {
  w.Bytes(magic);
  w.U8(kFormatVersion);
  w.U8(static_cast<uint8_t>(h.backend));
  w.U16(static_cast<uint16_t>(h.n));
  w.U16(static_cast<uint16_t>(h.participant));
  w.U32(h.pixel_count);
  w.U32(h.width);
  w.U32(h.height);
  w.Bytes(h.id);
}

Header ReadHeader(ByteReader& r, const std::array<uint8_t, 4>& magic) {
  const auto m = r.Bytes(4, "magic");
  if (!std::equal(m.begin(), m.end(), magic.begin())) {
    r.Fail("magic", "expected '" + std::string(magic.begin(), magic.end()) + "'");
  }
  const uint8_t version = r.U8("version");
  if (version != kFormatVersion) {
    r.Fail("version", "unsupported version " + std::to_string(version));
  }
  Header h{};
  const uint8_t backend = r.U8("backend");
  if (backend > 1) r.Fail("backend", "unknown backend id " + std::to_string(backend));
  h.backend = static_cast<Backend>(backend);
  h.n = r.U16("n");
  if (h.n < 2 || h.n > MaxParticipants(h.backend)) {
    r.Fail("n", "out of range: " + std::to_string(h.n));
  }
  h.participant = r.U16("participant");
  h.pixel_count = r.U32("pixel count");
  h.width = r.U32("width");
  h.height = r.U32("height");
  if (h.width == 0 || h.height == 0 || h.width > kMaxImageSide ||
      h.height > kMaxImageSide) {
    r.Fail("width", "image dimensions out of range");
  }
  if (static_cast<uint64_t>(h.width) * h.height != h.pixel_count) {
    r.Fail("pixel count", "does not equal width x height");
  }
  const auto id = r.Bytes(16, "session id");
  std::copy(id.begin(), id.end(), h.id.begin());
  return h;
}

// The stream length implied by the header must match exactly before the
// checksum is trusted.
void CheckLengthAndCrc(std::span<const uint8_t> bytes, size_t payload_end,
                       const char* what) {
  if (bytes.size() < payload_end + 4) {
    Throw(ErrorKind::kFormat, std::string(what) + " field 'payload': truncated stream (" +
                                  std::to_string(bytes.size()) + " of " +
                                  std::to_string(payload_end + 4) + " bytes)");
  }
  if (bytes.size() > payload_end + 4) {
    Throw(ErrorKind::kFormat, std::string(what) + " field 'checksum': " +
                                  std::to_string(bytes.size() - payload_end - 4) +
                                  " trailing bytes after trailer");
  }
  ByteReader trailer(bytes.subspan(payload_end), what);
  const uint32_t stored = trailer.U32("checksum");
  const uint32_t actual = Crc32(bytes.first(payload_end));
  if (stored != actual) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "CRC32 mismatch (stored %08x, computed %08x)",
                  stored, actual);
    Throw(ErrorKind::kFormat, std::string(what) + " field 'checksum': " + buf);
  }
}

void AppendCrc(ByteWriter& w) { w.U32(Crc32(w.data())); }

}  // namespace

const char* BackendName(Backend backend) {
  return backend == Backend::kStatevector ? "statevector" : "sampled";
}

Backend ParseBackend(std::string_view name) {
  if (name == "statevector") return Backend::kStatevector;
  if (name == "sampled") return Backend::kSampled;
  Throw(ErrorKind::kArgument, "unknown backend '" + std::string(name) + "'");
}

std::string SessionIdHex(const SessionId& id) {
  static const char* kHex = "0123456789abcdef";
  std::string s;
  for (uint8_t b : id) {
    s.push_back(kHex[b >> 4]);
    s.push_back(kHex[b & 15]);
  }
  return s;
}

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kNoInformation: return "no-information";
    case Verdict::kFullRecovery: return "full-recovery";
    case Verdict::kInformationLeak: return "information-leak";
    case Verdict::kInconsistent: return "inconsistent";
  }
  return "?";
}

SharingResult ShareImage(const BinaryImage& image, int n, Backend backend,
                         uint64_t seed, int workers) {
  CheckParticipants(n, backend);
  const size_t s = image.pixel_count();

  SharingResult out;
  SessionStore& session = out.session;
  session.n = n;
  session.backend = backend;
  session.master_seed = seed;
  session.id = MakeSessionId(image, n, backend, seed);
  session.width = image.width();
  session.height = image.height();

  out.shares.resize(n);
  for (int j = 1; j <= n; ++j) {
    ShareFile& share = out.shares[j - 1];
    share.backend = backend;
    share.n = n;
    share.participant = j;
    share.width = image.width();
    share.height = image.height();
    share.session_id = session.id;
  }

  if (backend == Backend::kStatevector) {
    const StateVector white = PrepareParityState({n, 0});
    const StateVector black = PrepareParityState({n, 1});
    session.registers.assign(s, white);
    for (ShareFile& share : out.shares) share.handles.resize(s);
    internal::ForEachPixel(s, workers, [&](size_t l) {
      const Color c = image.pixel(l);
      if (c == Color::kBlack) session.registers[l - 1] = black;
      for (int j = 1; j <= n; ++j) {
        out.shares[j - 1].handles[l - 1] = {static_cast<uint32_t>(l),
                                            static_cast<uint16_t>(j)};
      }
    });
    return out;
  }

  session.registers.assign(s, BasisOutcome{});
  for (ShareFile& share : out.shares) share.bits.resize(s);
  internal::ForEachPixel(s, workers, [&](size_t l) {
    Rng rng = MakeRng(DeriveSeed(seed, l));
    const int b = ToBit(image.pixel(l));
    // Uniform draw from the 2^(n-1) parity-b strings.
    const uint64_t i = UniformBelow(rng, uint64_t{1} << (n - 1));
    const uint64_t x = NthParityIndex(i, b);
    BasisOutcome outcome;
    outcome.bits.resize(n);
    for (int j = 1; j <= n; ++j) {
      const uint8_t bit = static_cast<uint8_t>((x >> (n - j)) & 1u);
      outcome.bits[j - 1] = bit;
      out.shares[j - 1].bits[l - 1] = bit;
    }
    session.registers[l - 1] = std::move(outcome);
  });
  return out;
}

Color RecoverPixel(const BasisOutcome& outcome) {
  return FromBit(XorDecode(outcome));
}

BinaryImage RecoverImage(std::span<const ShareFile> shares,
                         SessionStore& session, uint64_t seed, int workers) {
  const int n = session.n;
  const size_t s = session.pixel_count();
  std::vector<const ShareFile*> by_participant(n + 1, nullptr);
  for (const ShareFile& share : shares) {
    if (share.session_id != session.id) {
      Throw(ErrorKind::kIntegrity, "share of participant " +
                                       std::to_string(share.participant) +
                                       " belongs to session " +
                                       SessionIdHex(share.session_id) +
                                       ", not " + SessionIdHex(session.id));
    }
    if (share.backend != session.backend || share.n != n ||
        share.width != session.width || share.height != session.height) {
      Throw(ErrorKind::kIntegrity,
            "share of participant " + std::to_string(share.participant) +
                " disagrees with the session header");
    }
    if (share.participant < 1 || share.participant > n) {
      Throw(ErrorKind::kIntegrity, "participant index " +
                                       std::to_string(share.participant) +
                                       " outside [1, " + std::to_string(n) + "]");
    }
    if (by_participant[share.participant] != nullptr) {
      Throw(ErrorKind::kIntegrity, "participant " +
                                       std::to_string(share.participant) +
                                       " supplied more than one share");
    }
    if (share.pixel_count() != s) {
      Throw(ErrorKind::kIntegrity, "share of participant " +
                                       std::to_string(share.participant) +
                                       " covers " +
                                       std::to_string(share.pixel_count()) +
                                       " pixels, session has " +
                                       std::to_string(s));
    }
    by_participant[share.participant] = &share;
  }
  std::vector<int> missing;
  for (int j = 1; j <= n; ++j) {
    if (by_participant[j] == nullptr) missing.push_back(j);
  }
  if (!missing.empty()) {
    std::string list;
    for (int j : missing) list += (list.empty() ? "" : ",") + std::to_string(j);
    Throw(ErrorKind::kIncompleteShares,
          std::to_string(n - static_cast<int>(missing.size())) + " of " +
              std::to_string(n) + " shares present (missing " + list +
              "); refusing to guess");
  }

  BinaryImage image(session.width, session.height);
  std::vector<Color> colors(s, Color::kWhite);
  if (session.backend == Backend::kStatevector) {
    // Validate everything before the first register collapses.
    for (size_t l = 1; l <= s; ++l) {
      for (int j = 1; j <= n; ++j) {
        const QubitHandle h = by_participant[j]->handles[l - 1];
        if (h.pixel != l || h.qubit != j) {
          Throw(ErrorKind::kIntegrity,
                "participant " + std::to_string(j) + " holds handle (" +
                    std::to_string(h.pixel) + "," + std::to_string(h.qubit) +
                    ") in slot for pixel " + std::to_string(l));
        }
      }
      auto* reg = std::get_if<StateVector>(&session.registers[l - 1]);
      if (reg == nullptr || reg->num_qubits() != n) {
        Throw(ErrorKind::kIntegrity,
              "session register for pixel " + std::to_string(l) + " is not an " +
                  std::to_string(n) + "-qubit state");
      }
    }
    internal::ForEachPixel(s, workers, [&](size_t l) {
      Rng rng = MakeRng(DeriveSeed(seed, l));
      auto& reg = std::get<StateVector>(session.registers[l - 1]);
      colors[l - 1] = RecoverPixel(reg.MeasureAll(rng));
    });
  } else {
    internal::ForEachPixel(s, workers, [&](size_t l) {
      BasisOutcome outcome;
      outcome.bits.resize(n);
      for (int j = 1; j <= n; ++j) {
        outcome.bits[j - 1] = by_participant[j]->bits[l - 1];
      }
      colors[l - 1] = RecoverPixel(outcome);
    });
  }
  return BinaryImage::FromPixels(session.width, session.height, colors);
}

AuditReport AuditSubset(const SessionStore& session,
                        std::span<const int> subset) {
  const int n = session.n;
  if (subset.empty()) Throw(ErrorKind::kArgument, "audit subset is empty");
  std::set<int> distinct;
  for (int j : subset) {
    if (j < 1 || j > n) {
      Throw(ErrorKind::kArgument, "participant " + std::to_string(j) +
                                      " outside [1, " + std::to_string(n) + "]");
    }
    if (!distinct.insert(j).second) {
      Throw(ErrorKind::kArgument,
            "participant " + std::to_string(j) + " listed twice");
    }
  }
  if (session.pixel_count() == 0) {
    Throw(ErrorKind::kArgument, "session holds no pixels");
  }
  if (subset.size() > 24) {
    Throw(ErrorKind::kSize, "audit subsets are limited to 24 participants");
  }

  AuditReport report;
  report.subset.assign(subset.begin(), subset.end());
  report.proper = static_cast<int>(subset.size()) < n;
  report.backend = session.backend;
  const size_t patterns = size_t{1} << subset.size();
  const double uniform = 1.0 / static_cast<double>(patterns);
  report.aggregate.assign(patterns, 0.0);

  if (session.backend == Backend::kStatevector) {
    bool mixed_parity = false;
    for (const PixelRegister& reg : session.registers) {
      const StateVector& state = std::get<StateVector>(reg);
      MarginalDistribution m = state.Marginal(subset);
      report.max_deviation =
          std::max(report.max_deviation, m.MaxDeviationFromUniform());
      double even = 0.0, odd = 0.0;
      for (size_t p = 0; p < patterns; ++p) {
        report.aggregate[p] += m.probabilities[p];
        (std::popcount(p) & 1 ? odd : even) += m.probabilities[p];
      }
      if (even > kAnalyticTolerance && odd > kAnalyticTolerance) mixed_parity = true;
      report.per_pixel.push_back(std::move(m.probabilities));
    }
    for (double& p : report.aggregate) {
      p /= static_cast<double>(session.pixel_count());
    }
    if (report.proper) {
      report.verdict = report.max_deviation < kAnalyticTolerance
                           ? Verdict::kNoInformation
                           : Verdict::kInformationLeak;
    } else {
      report.verdict = mixed_parity ? Verdict::kInconsistent : Verdict::kFullRecovery;
    }
    return report;
  }

  report.counts.assign(patterns, 0);
  for (const PixelRegister& reg : session.registers) {
    const BasisOutcome& outcome = std::get<BasisOutcome>(reg);
    size_t pattern = 0;
    for (int j : subset) pattern = (pattern << 1) | outcome.bits[j - 1];
    ++report.counts[pattern];
  }
  for (size_t p = 0; p < patterns; ++p) {
    report.aggregate[p] = static_cast<double>(report.counts[p]) /
                          static_cast<double>(session.pixel_count());
    report.max_deviation =
        std::max(report.max_deviation, std::abs(report.aggregate[p] - uniform));
  }
  if (report.proper) {
    const std::vector<double> expected(patterns, uniform);
    report.p_value = ChiSquareTest(report.counts, expected).p_value;
    report.verdict = report.p_value > kAuditPValueThreshold
                         ? Verdict::kNoInformation
                         : Verdict::kInformationLeak;
  } else {
    // A sampled register is a definite bitstring, so its parity is fixed.
    report.verdict = Verdict::kFullRecovery;
  }
  return report;
}

std::vector<uint8_t> SerializeShare(const ShareFile& share) {
  ByteWriter w;
  WriteHeader(w, kShareMagic,
              {share.backend, share.n, share.participant,
               static_cast<uint32_t>(share.pixel_count()), share.width,
               share.height, share.session_id});
  if (share.backend == Backend::kStatevector) {
    for (const QubitHandle& h : share.handles) {
      w.U32(h.pixel);
      w.U16(h.qubit);
    }
  } else {
    w.Bytes(internal::PackBits(share.bits));
  }
  AppendCrc(w);
  return std::move(w.data());
}

ShareFile DeserializeShare(std::span<const uint8_t> bytes) {
  ByteReader r(bytes, "share");
  const Header h = ReadHeader(r, kShareMagic);
  if (h.participant < 1 || h.participant > h.n) {
    r.Fail("participant", "index " + std::to_string(h.participant) +
                              " outside [1, n]");
  }
  const size_t payload = h.backend == Backend::kStatevector
                             ? size_t{h.pixel_count} * 6
                             : (size_t{h.pixel_count} + 7) / 8;
  CheckLengthAndCrc(bytes, r.offset() + payload, "share");

  ShareFile share;
  share.backend = h.backend;
  share.n = h.n;
  share.participant = h.participant;
  share.width = h.width;
  share.height = h.height;
  share.session_id = h.id;
  if (h.backend == Backend::kStatevector) {
    share.handles.resize(h.pixel_count);
    for (QubitHandle& handle : share.handles) {
      handle.pixel = r.U32("payload");
      handle.qubit = r.U16("payload");
    }
  } else {
    share.bits = internal::UnpackBits(r.Bytes(payload, "payload"), h.pixel_count);
  }
  return share;
}

std::vector<uint8_t> SerializeSession(const SessionStore& session) {
  ByteWriter w;
  WriteHeader(w, kSessionMagic,
              {session.backend, session.n, 0,
               static_cast<uint32_t>(session.pixel_count()), session.width,
               session.height, session.id});
  w.U64(session.master_seed);
  if (session.backend == Backend::kStatevector) {
    for (const PixelRegister& reg : session.registers) {
      const StateVector& state = std::get<StateVector>(reg);
      w.U16(static_cast<uint16_t>(state.num_qubits()));
      for (const Amplitude& a : state.amplitudes()) {
        w.F64(a.real());
        w.F64(a.imag());
      }
    }
  } else {
    std::vector<uint8_t> bits;
    bits.reserve(session.pixel_count() * session.n);
    for (const PixelRegister& reg : session.registers) {
      const BasisOutcome& o = std::get<BasisOutcome>(reg);
      bits.insert(bits.end(), o.bits.begin(), o.bits.end());
    }
    w.Bytes(internal::PackBits(bits));
  }
  AppendCrc(w);
  return std::move(w.data());
}

SessionStore DeserializeSession(std::span<const uint8_t> bytes) {
  ByteReader r(bytes, "session");
  const Header h = ReadHeader(r, kSessionMagic);
  const size_t blob = h.backend == Backend::kStatevector
                          ? 2 + (size_t{16} << h.n)
                          : 0;
  const size_t payload =
      8 + (h.backend == Backend::kStatevector
               ? size_t{h.pixel_count} * blob
               : (size_t{h.pixel_count} * static_cast<size_t>(h.n) + 7) / 8);
  CheckLengthAndCrc(bytes, r.offset() + payload, "session");

  SessionStore session;
  session.n = h.n;
  session.backend = h.backend;
  session.id = h.id;
  session.width = h.width;
  session.height = h.height;
  session.master_seed = r.U64("master seed");
  session.registers.reserve(h.pixel_count);
  if (h.backend == Backend::kStatevector) {
    for (uint32_t l = 1; l <= h.pixel_count; ++l) {
      const uint16_t width = r.U16("register");
      if (width != h.n) {
        r.Fail("register", "pixel " + std::to_string(l) + " declares " +
                               std::to_string(width) + " qubits");
      }
      std::vector<Amplitude> amps(size_t{1} << h.n);
      for (Amplitude& a : amps) {
        const double re = r.F64("register");
        const double im = r.F64("register");
        a = {re, im};
      }
      StateVector state = StateVector::FromAmplitudes(std::move(amps));
      if (std::abs(state.Norm() - 1.0) > kRuntimeNormTolerance) {
        r.Fail("register", "pixel " + std::to_string(l) + " is not normalized");
      }
      session.registers.emplace_back(std::move(state));
    }
  } else {
    const size_t total = size_t{h.pixel_count} * static_cast<size_t>(h.n);
    const auto bits =
        internal::UnpackBits(r.Bytes((total + 7) / 8, "register"), total);
    for (uint32_t l = 0; l < h.pixel_count; ++l) {
      BasisOutcome o;
      o.bits.assign(bits.begin() + static_cast<ptrdiff_t>(l) * h.n,
                    bits.begin() + static_cast<ptrdiff_t>(l + 1) * h.n);
      session.registers.emplace_back(std::move(o));
    }
  }
  return session;
}

}  // namespace qvss
