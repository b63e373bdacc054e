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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "qvss/error.h"
#include "qvss/parity.h"
#include "test_util.h"

namespace qvss {
namespace {

constexpr double kTol = 1e-12;
constexpr Backend kBackends[] = {Backend::kStatevector, Backend::kSampled};

struct Caught {
  ErrorKind kind;
  std::string message;
};

Caught Catch(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  ADD_FAILURE() << "expected qvss::Error";
  return {ErrorKind::kArgument, ""};
}

bool Contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

TEST(Protocol, WorkedExampleRegisters) {
  const SharingResult r =
      ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 42);
  ASSERT_EQ(r.session.pixel_count(), 4u);
  const int bits[] = {0, 1, 1, 0};
  for (size_t l = 0; l < 4; ++l) {
    const auto& reg = std::get<StateVector>(r.session.registers[l]);
    for (uint64_t i = 0; i < 8; ++i) {
      const bool match = testing::CountOnes(testing::BitsOf(i, 3)) % 2 == bits[l];
      EXPECT_NEAR(std::abs(reg[i] - (match ? 0.5 : 0.0)), 0.0, kTol);
    }
  }
  ASSERT_EQ(r.shares.size(), 3u);
  for (int j = 1; j <= 3; ++j) {
    const ShareFile& s = r.shares[j - 1];
    EXPECT_EQ(s.participant, j);
    ASSERT_EQ(s.handles.size(), 4u);
    for (uint32_t l = 1; l <= 4; ++l) {
      EXPECT_EQ(s.handles[l - 1], (QubitHandle{l, static_cast<uint16_t>(j)}));
    }
  }
}

TEST(Protocol, RecoverWorkedExample) {
  for (Backend backend : kBackends) {
    for (uint64_t seed : {1u, 2u, 42u}) {
      SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, backend, seed);
      EXPECT_EQ(RecoverImage(r.shares, r.session, seed), testing::WorkedExampleImage());
    }
  }
}

TEST(Protocol, RecoverPixelXors) {
  EXPECT_EQ(RecoverPixel(BasisOutcome::FromString("011")), Color::kWhite);
  EXPECT_EQ(RecoverPixel(BasisOutcome::FromString("111")), Color::kBlack);
}

TEST(Protocol, SampledBitsHaveImageParity) {
  Rng rng = MakeRng(404);
  const BinaryImage img = testing::RandomImage(9, 7, rng);
  for (int n : {2, 5, 17, 64}) {
    const SharingResult r = ShareImage(img, n, Backend::kSampled, 9);
    for (size_t l = 1; l <= img.pixel_count(); ++l) {
      int x = 0;
      for (const ShareFile& s : r.shares) x ^= s.bits[l - 1];
      EXPECT_EQ(x, ToBit(img.pixel(l)));
    }
  }
}

TEST(Protocol, ParticipantLimits) {
  const BinaryImage img = testing::WorkedExampleImage();
  EXPECT_EQ(Catch([&] { ShareImage(img, 1, Backend::kSampled, 1); }).kind, ErrorKind::kSize);
  EXPECT_EQ(Catch([&] { ShareImage(img, kMaxQubits + 1, Backend::kStatevector, 1); }).kind,
            ErrorKind::kSize);
  EXPECT_EQ(Catch([&] { ShareImage(img, 65, Backend::kSampled, 1); }).kind, ErrorKind::kSize);
  EXPECT_NO_THROW(ShareImage(img, kMaxQubits, Backend::kStatevector, 1));
}

TEST(Protocol, DeterministicForFixedSeed) {
  Rng rng = MakeRng(5);
  const BinaryImage img = testing::RandomImage(16, 16, rng);
  for (Backend backend : kBackends) {
    const SharingResult a = ShareImage(img, 4, backend, 77);
    const SharingResult b = ShareImage(img, 4, backend, 77);
    EXPECT_EQ(SerializeSession(a.session), SerializeSession(b.session));
    for (int j = 0; j < 4; ++j) EXPECT_EQ(SerializeShare(a.shares[j]), SerializeShare(b.shares[j]));
  }
}

TEST(Protocol, WorkerCountDoesNotChangeOutput) {
  Rng rng = MakeRng(6);
  const BinaryImage img = testing::RandomImage(23, 11, rng);
  for (Backend backend : kBackends) {
    SharingResult one = ShareImage(img, 3, backend, 5, 1);
    SharingResult many = ShareImage(img, 3, backend, 5, 7);
    EXPECT_EQ(SerializeSession(one.session), SerializeSession(many.session));
    for (int j = 0; j < 3; ++j) EXPECT_EQ(one.shares[j], many.shares[j]);
    EXPECT_EQ(RecoverImage(one.shares, one.session, 8, 1), img);
    EXPECT_EQ(RecoverImage(many.shares, many.session, 8, 5), img);
  }
}

TEST(Protocol, RoundTripRandomImages) {
  Rng rng = MakeRng(2026);
  for (int trial = 0; trial < 8; ++trial) {
    const uint32_t w = 1 + static_cast<uint32_t>(UniformBelow(rng, 32));
    const uint32_t h = 1 + static_cast<uint32_t>(UniformBelow(rng, 32));
    const BinaryImage img = testing::RandomImage(w, h, rng);
    for (int n : {2, 3, 6}) {
      for (Backend backend : kBackends) {
        SharingResult r = ShareImage(img, n, backend, rng());
        EXPECT_EQ(RecoverImage(r.shares, r.session, rng()), img);
      }
    }
  }
}

TEST(Protocol, RefusesIncompleteShares) {
  for (Backend backend : kBackends) {
    SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, backend, 3);
    std::vector<ShareFile> two = {r.shares[0], r.shares[2]};
    const Caught c = Catch([&] { RecoverImage(two, r.session, 1); });
    EXPECT_EQ(c.kind, ErrorKind::kIncompleteShares);
    EXPECT_TRUE(Contains(c.message, "2 of 3")) << c.message;
    EXPECT_TRUE(Contains(c.message, "missing 2")) << c.message;
    EXPECT_EQ(Catch([&] { RecoverImage(std::span<const ShareFile>{}, r.session, 1); }).kind,
              ErrorKind::kIncompleteShares);
  }
}

TEST(Protocol, RefusalLeavesRegistersIntact) {
  SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 3);
  const auto before = SerializeSession(r.session);
  std::vector<ShareFile> two = {r.shares[0], r.shares[1]};
  EXPECT_THROW(RecoverImage(two, r.session, 1), Error);
  std::vector<ShareFile> bad = r.shares;
  bad[2].handles[3].qubit = 2;
  EXPECT_THROW(RecoverImage(bad, r.session, 1), Error);
  EXPECT_EQ(SerializeSession(r.session), before);
}

TEST(Protocol, IntegrityErrors) {
  const BinaryImage img = testing::WorkedExampleImage();
  for (Backend backend : kBackends) {
    SharingResult r = ShareImage(img, 3, backend, 3);
    SharingResult other = ShareImage(img, 3, backend, 4);

    std::vector<ShareFile> foreign = r.shares;
    foreign[1] = other.shares[1];
    EXPECT_EQ(Catch([&] { RecoverImage(foreign, r.session, 1); }).kind, ErrorKind::kIntegrity);

    std::vector<ShareFile> dup = r.shares;
    dup[2] = dup[1];
    EXPECT_EQ(Catch([&] { RecoverImage(dup, r.session, 1); }).kind, ErrorKind::kIntegrity);

    std::vector<ShareFile> range = r.shares;
    range[0].participant = 9;
    EXPECT_EQ(Catch([&] { RecoverImage(range, r.session, 1); }).kind, ErrorKind::kIntegrity);

    std::vector<ShareFile> shape = r.shares;
    shape[0].width = 2;
    shape[0].height = 2;
    EXPECT_EQ(Catch([&] { RecoverImage(shape, r.session, 1); }).kind, ErrorKind::kIntegrity);
  }
}

TEST(Protocol, ShareSerializationRoundTrip) {
  Rng rng = MakeRng(10);
  const BinaryImage img = testing::RandomImage(13, 5, rng);
  for (Backend backend : kBackends) {
    const SharingResult r = ShareImage(img, 5, backend, 10);
    for (const ShareFile& s : r.shares) EXPECT_EQ(DeserializeShare(SerializeShare(s)), s);
    const SessionStore back = DeserializeSession(SerializeSession(r.session));
    EXPECT_EQ(SerializeSession(back), SerializeSession(r.session));
    EXPECT_EQ(back.id, r.session.id);
    EXPECT_EQ(back.master_seed, 10u);
  }
}

TEST(Protocol, ShareHeaderLayout) {
  const SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kSampled, 1);
  const auto bytes = SerializeShare(r.shares[1]);
  ASSERT_GE(bytes.size(), 38u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "QVSS");
  EXPECT_EQ(bytes[4], 1);  // version
  EXPECT_EQ(bytes[5], 1);  // sampled
  EXPECT_EQ(bytes[6] | bytes[7] << 8, 3);
  EXPECT_EQ(bytes[8] | bytes[9] << 8, 2);
  EXPECT_EQ(bytes[10], 4);  // pixel count, little-endian
  EXPECT_EQ(bytes[14], 4);  // width
  EXPECT_EQ(bytes[18], 1);  // height
  // header 38 + one packed byte + crc
  EXPECT_EQ(bytes.size(), 38u + 1 + 4);
}

TEST(Protocol, TruncationNamesTheField) {
  const SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 1);
  const auto bytes = SerializeShare(r.shares[0]);
  for (size_t cut = 0; cut < bytes.size(); ++cut) {
    const std::vector<uint8_t> part(bytes.begin(), bytes.begin() + cut);
    const Caught c = Catch([&] { DeserializeShare(part); });
    EXPECT_EQ(c.kind, ErrorKind::kFormat);
    EXPECT_TRUE(Contains(c.message, "field '")) << c.message;
    EXPECT_TRUE(Contains(c.message, "truncated")) << c.message;
  }
  const auto session = SerializeSession(r.session);
  const std::vector<uint8_t> half(session.begin(), session.begin() + session.size() / 2);
  EXPECT_EQ(Catch([&] { DeserializeSession(half); }).kind, ErrorKind::kFormat);
}

TEST(Protocol, CorruptionIsDetected) {
  const SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kSampled, 1);
  auto bytes = SerializeShare(r.shares[0]);

  auto magic = bytes;
  magic[0] = 'X';
  EXPECT_TRUE(Contains(Catch([&] { DeserializeShare(magic); }).message, "'magic'"));

  auto version = bytes;
  version[4] = 2;
  EXPECT_TRUE(Contains(Catch([&] { DeserializeShare(version); }).message, "'version'"));

  auto flipped = bytes;
  flipped[38] ^= 0x80;
  const Caught c = Catch([&] { DeserializeShare(flipped); });
  EXPECT_EQ(c.kind, ErrorKind::kFormat);
  EXPECT_TRUE(Contains(c.message, "'checksum'")) << c.message;

  auto trailing = bytes;
  trailing.push_back(0);
  EXPECT_EQ(Catch([&] { DeserializeShare(trailing); }).kind, ErrorKind::kFormat);

  // A session file is not a share file.
  EXPECT_EQ(Catch([&] { DeserializeShare(SerializeSession(r.session)); }).kind,
            ErrorKind::kFormat);
}

TEST(Protocol, AuditProperSubsetsAreUniform) {
  SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 42);
  for (const auto& subset : testing::ProperSubsets(3)) {
    const AuditReport rep = AuditSubset(r.session, subset);
    EXPECT_TRUE(rep.proper);
    EXPECT_EQ(rep.verdict, Verdict::kNoInformation);
    EXPECT_LT(rep.max_deviation, kTol);
    const double expect = 1.0 / static_cast<double>(1u << subset.size());
    for (const auto& pixel : rep.per_pixel)
      for (double p : pixel) EXPECT_NEAR(p, expect, kTol);
  }
}

TEST(Protocol, AuditWorkedSubsetAllPixels) {
  SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 42);
  const AuditReport rep = AuditSubset(r.session, std::vector<int>{1, 2});
  ASSERT_EQ(rep.per_pixel.size(), 4u);
  for (const auto& pixel : rep.per_pixel) {
    ASSERT_EQ(pixel.size(), 4u);
    for (double p : pixel) EXPECT_NEAR(p, 0.25, kTol);
  }
}

TEST(Protocol, AuditFullSubset) {
  for (Backend backend : kBackends) {
    SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, backend, 42);
    const AuditReport rep = AuditSubset(r.session, std::vector<int>{1, 2, 3});
    EXPECT_FALSE(rep.proper);
    EXPECT_EQ(rep.verdict, Verdict::kFullRecovery);
  }
}

TEST(Protocol, AuditFlagsMixedRegister) {
  SharingResult r = ShareImage(testing::WorkedExampleImage(), 2, Backend::kStatevector, 42);
  // (|00> + |01>)/sqrt2 mixes both parities.
  const double s = 1.0 / std::sqrt(2.0);
  r.session.registers[0] = StateVector::FromAmplitudes({s, s, 0.0, 0.0});
  EXPECT_EQ(AuditSubset(r.session, std::vector<int>{1, 2}).verdict, Verdict::kInconsistent);
  // Qubit 1 now reads 0 with certainty.
  EXPECT_EQ(AuditSubset(r.session, std::vector<int>{1}).verdict, Verdict::kInformationLeak);
}

TEST(Protocol, AuditSampledChiSquare) {
  Rng rng = MakeRng(8);
  const BinaryImage img = testing::RandomImage(50, 40, rng);
  SharingResult r = ShareImage(img, 4, Backend::kSampled, 123);
  const AuditReport rep = AuditSubset(r.session, std::vector<int>{1, 3});
  EXPECT_EQ(rep.counts.size(), 4u);
  uint64_t total = 0;
  for (uint64_t c : rep.counts) total += c;
  EXPECT_EQ(total, img.pixel_count());
  EXPECT_GT(rep.p_value, kAuditPValueThreshold);
  EXPECT_EQ(rep.verdict, Verdict::kNoInformation);
}

TEST(Protocol, AuditArgumentErrors) {
  SharingResult r = ShareImage(testing::WorkedExampleImage(), 3, Backend::kStatevector, 1);
  EXPECT_EQ(Catch([&] { AuditSubset(r.session, std::vector<int>{}); }).kind,
            ErrorKind::kArgument);
  EXPECT_EQ(Catch([&] { AuditSubset(r.session, std::vector<int>{4}); }).kind,
            ErrorKind::kArgument);
  EXPECT_EQ(Catch([&] { AuditSubset(r.session, std::vector<int>{1, 1}); }).kind,
            ErrorKind::kArgument);
}

TEST(Protocol, BackendNames) {
  EXPECT_EQ(ParseBackend("statevector"), Backend::kStatevector);
  EXPECT_EQ(ParseBackend("sampled"), Backend::kSampled);
  EXPECT_STREQ(BackendName(Backend::kSampled), "sampled");
  EXPECT_THROW(ParseBackend("dense"), Error);
}

}  // namespace
}  // namespace qvss
