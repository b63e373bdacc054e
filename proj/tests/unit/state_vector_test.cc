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

#include <gtest/gtest.h>

#include <cmath>

#include "qvss/error.h"
#include "qvss/parity.h"
#include "test_util.h"

namespace qvss {
namespace {

using testing::Cplx;

constexpr double kTol = 1e-12;

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected qvss::Error";
  return ErrorKind::kArgument;
}

TEST(StateVector, ZeroState) {
  StateVector one(1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], Cplx(1.0));
  EXPECT_EQ(one[1], Cplx(0.0));

  StateVector two(2);
  ASSERT_EQ(two.size(), 4u);
  EXPECT_EQ(two[0], Cplx(1.0));
  for (size_t i = 1; i < 4; ++i) EXPECT_EQ(two[i], Cplx(0.0));

  StateVector three(3);
  EXPECT_EQ(three.ProbabilityOf(BasisOutcome::FromString("000")), 1.0);
}

TEST(StateVector, WidthLimits) {
  EXPECT_EQ(KindOf([] { StateVector s(0); }), ErrorKind::kSize);
  EXPECT_EQ(KindOf([] { StateVector s(kMaxQubits + 1); }), ErrorKind::kSize);
  StateVector widest(kMaxQubits);
  EXPECT_EQ(widest.size(), size_t{1} << kMaxQubits);
}

TEST(StateVector, HadamardOnZero) {
  StateVector s(1);
  s.ApplyH(1);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(s[0] - r), 0.0, kTol);
  EXPECT_NEAR(std::abs(s[1] - r), 0.0, kTol);
}

TEST(StateVector, HadamardOnFirstOfTwo) {
  StateVector s(2);
  s.ApplyH(1);
  const double r = 1.0 / std::sqrt(2.0);
  // (|00> + |10>)/sqrt2: qubit 1 is the high bit.
  EXPECT_NEAR(std::abs(s[0b00] - r), 0.0, kTol);
  EXPECT_NEAR(std::abs(s[0b10] - r), 0.0, kTol);
  EXPECT_EQ(s[0b01], Cplx(0.0));
  EXPECT_EQ(s[0b11], Cplx(0.0));
}

TEST(StateVector, PauliActions) {
  StateVector x(1);
  x.ApplyX(1);
  EXPECT_EQ(x.ProbabilityOf(BasisOutcome::FromString("1")), 1.0);

  StateVector z(1);
  z.ApplyZ(1);
  EXPECT_EQ(z[0], Cplx(1.0));
  EXPECT_EQ(z[1], Cplx(0.0));
}

TEST(StateVector, CnotTruthTable) {
  StateVector s = StateVector::Basis(BasisOutcome::FromString("10"));
  s.ApplyCnot(1, 2);
  EXPECT_EQ(s.ProbabilityOf(BasisOutcome::FromString("11")), 1.0);

  StateVector z(2);
  z.ApplyCnot(1, 2);
  EXPECT_EQ(z.ProbabilityOf(BasisOutcome::FromString("00")), 1.0);

  EXPECT_EQ(KindOf([] { StateVector t(2); t.ApplyCnot(1, 1); }), ErrorKind::kArgument);
  EXPECT_EQ(KindOf([] { StateVector t(2); t.ApplyCnot(1, 3); }), ErrorKind::kIndex);
}

TEST(StateVector, ToffoliTruthTable) {
  auto run = [](const char* in) {
    StateVector s = StateVector::Basis(BasisOutcome::FromString(in));
    s.ApplyToffoli(1, 2, 3);
    for (uint64_t i = 0; i < s.size(); ++i) {
      if (std::norm(s[i]) > 0.5) return BasisOutcome::FromIndex(i, 3).ToString();
    }
    return std::string("?");
  };
  EXPECT_EQ(run("110"), "111");
  EXPECT_EQ(run("100"), "100");
  EXPECT_EQ(run("111"), "110");
  EXPECT_EQ(run("010"), "010");
  EXPECT_EQ(run("000"), "000");
  EXPECT_EQ(KindOf([] { StateVector t(3); t.ApplyToffoli(1, 2, 2); }),
            ErrorKind::kArgument);
}

TEST(StateVector, QubitIndexErrors) {
  StateVector s(3);
  EXPECT_EQ(KindOf([&] { s.ApplyH(0); }), ErrorKind::kIndex);
  EXPECT_EQ(KindOf([&] { s.ApplyX(4); }), ErrorKind::kIndex);
  EXPECT_EQ(KindOf([&] { s.ApplyZ(-1); }), ErrorKind::kIndex);
}

// Every gate against its dense Kronecker / truth-table matrix.
TEST(StateVector, GatesMatchDenseMatrices) {
  Rng rng = MakeRng(1234);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const StateVector psi = testing::RandomState(n, rng);
      for (int q = 1; q <= n; ++q) {
        StateVector h = psi, x = psi, z = psi;
        h.ApplyH(q);
        x.ApplyX(q);
        z.ApplyZ(q);
        EXPECT_LT(testing::MaxDiff(h.amplitudes(),
                                   testing::MatVec(testing::EmbedSingle(testing::HadamardMatrix(), q, n),
                                                   psi.amplitudes())),
                  kTol);
        EXPECT_LT(testing::MaxDiff(x.amplitudes(),
                                   testing::MatVec(testing::EmbedSingle(testing::PauliXMatrix(), q, n),
                                                   psi.amplitudes())),
                  kTol);
        EXPECT_LT(testing::MaxDiff(z.amplitudes(),
                                   testing::MatVec(testing::EmbedSingle(testing::PauliZMatrix(), q, n),
                                                   psi.amplitudes())),
                  kTol);
        for (int t = 1; t <= n; ++t) {
          if (t == q) continue;
          StateVector c = psi;
          c.ApplyCnot(q, t);
          EXPECT_LT(testing::MaxDiff(c.amplitudes(),
                                     testing::MatVec(testing::ControlledFlip({q}, t, n),
                                                     psi.amplitudes())),
                    kTol);
          for (int u = 1; u <= n; ++u) {
            if (u == q || u == t) continue;
            StateVector cc = psi;
            cc.ApplyToffoli(q, t, u);
            EXPECT_LT(testing::MaxDiff(cc.amplitudes(),
                                       testing::MatVec(testing::ControlledFlip({q, t}, u, n),
                                                       psi.amplitudes())),
                      kTol);
          }
        }
      }
    }
  }
}

TEST(StateVector, InvolutionsAndNormPreservation) {
  Rng rng = MakeRng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(UniformBelow(rng, 6));
    const StateVector psi = testing::RandomState(n, rng);
    StateVector s = psi;
    const int q = 1 + static_cast<int>(UniformBelow(rng, n));
    const int t = 1 + (q % n);
    const int u = 1 + (t % n);
    s.ApplyH(q); s.ApplyH(q);
    EXPECT_LT(s.MaxAbsDifference(psi), kTol);
    s.ApplyX(q); s.ApplyX(q);
    s.ApplyZ(t); s.ApplyZ(t);
    s.ApplyCnot(q, t); s.ApplyCnot(q, t);
    s.ApplyToffoli(q, t, u); s.ApplyToffoli(q, t, u);
    EXPECT_LT(s.MaxAbsDifference(psi), kTol);

    // Random gate sequence keeps the norm.
    for (int g = 0; g < 50; ++g) {
      const int a = 1 + static_cast<int>(UniformBelow(rng, n));
      const int b = 1 + (a % n);
      const int c = 1 + (b % n);
      switch (UniformBelow(rng, 5)) {
        case 0: s.ApplyH(a); break;
        case 1: s.ApplyX(a); break;
        case 2: s.ApplyZ(a); break;
        case 3: s.ApplyCnot(a, b); break;
        default: s.ApplyToffoli(a, b, c); break;
      }
    }
    EXPECT_NEAR(s.Norm(), 1.0, kTol);
  }
}

TEST(StateVector, MeasureBasisStateIsCertain) {
  Rng rng = MakeRng(5);
  StateVector s(3);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(s.MeasureAll(rng).ToString(), "000");
  }
}

TEST(StateVector, MeasureCollapses) {
  Rng rng = MakeRng(6);
  StateVector s = PrepareParityState({3, 0});
  const BasisOutcome first = s.MeasureAll(rng);
  EXPECT_EQ(s.ProbabilityOf(first), 1.0);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(s.MeasureAll(rng), first);
}

TEST(StateVector, MeasureParityStateNeverOdd) {
  Rng rng = MakeRng(7);
  const StateVector c0 = PrepareParityState({3, 0});
  for (int i = 0; i < 1000; ++i) {
    StateVector s = c0;
    const std::string bits = s.MeasureAll(rng).ToString();
    EXPECT_TRUE(bits == "000" || bits == "011" || bits == "101" || bits == "110") << bits;
  }
}

TEST(StateVector, MeasureRejectsUnnormalized) {
  Rng rng = MakeRng(8);
  StateVector s = StateVector::FromAmplitudes({Cplx(1.0), Cplx(1.0)});
  EXPECT_EQ(KindOf([&] { s.MeasureAll(rng); }), ErrorKind::kStateCorruption);
}

// Frequencies over 8192 draws stay within 3 binomial sigmas of |a|^2.
TEST(StateVector, SamplingMatchesProbabilities) {
  Rng state_rng = MakeRng(11);
  const StateVector psi = testing::RandomState(4, state_rng);
  constexpr size_t kShots = 8192;
  Rng rng = MakeRng(12);
  std::vector<uint64_t> counts(psi.size(), 0);
  for (size_t i = 0; i < kShots; ++i) {
    StateVector s = psi;
    ++counts[s.MeasureAll(rng).ToIndex()];
  }
  for (uint64_t i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    const double sigma = std::sqrt(p * (1 - p) / kShots);
    EXPECT_NEAR(static_cast<double>(counts[i]) / kShots, p, 3 * sigma + 1e-12) << i;
  }
}

TEST(StateVector, ParityStateSamplingNearUniform) {
  const StateVector c0 = PrepareParityState({6, 0});
  Rng rng = MakeRng(2024);
  std::vector<uint64_t> counts(c0.size(), 0);
  for (uint64_t idx : c0.Sample(rng, 8192)) ++counts[idx];
  for (const auto& bits : EnumerateParityBasis({6, 0})) {
    EXPECT_NEAR(counts[bits.ToIndex()] / 8192.0, 1.0 / 32, 0.006);
  }
}

TEST(StateVector, ProbabilityOf) {
  const StateVector c0 = PrepareParityState({3, 0});
  EXPECT_NEAR(c0.ProbabilityOf(BasisOutcome::FromString("011")), 0.25, kTol);
  EXPECT_EQ(c0.ProbabilityOf(BasisOutcome::FromString("001")), 0.0);
  EXPECT_EQ(KindOf([&] { (void)c0.ProbabilityOf(BasisOutcome::FromString("01")); }),
            ErrorKind::kArgument);
}

TEST(StateVector, MarginalExamples) {
  for (int b : {0, 1}) {
    const StateVector c = PrepareParityState({3, b});
    const auto m = c.Marginal(std::vector<int>{1});
    ASSERT_EQ(m.probabilities.size(), 2u);
    EXPECT_NEAR(m.probabilities[0], 0.5, kTol);
    EXPECT_NEAR(m.probabilities[1], 0.5, kTol);
  }
  // n = 6, subset {1,2,3}: brute force over the amplitude list gives 1/8.
  for (int b : {0, 1}) {
    const auto oracle = testing::BruteForceMarginal(6, b, {1, 2, 3});
    ASSERT_EQ(oracle.size(), 8u);
    for (const auto& [pattern, p] : oracle) EXPECT_NEAR(p, 0.125, kTol);
    const auto m = PrepareParityState({6, b}).Marginal(std::vector<int>{1, 2, 3});
    for (size_t k = 0; k < 8; ++k) EXPECT_NEAR(m.probabilities[k], 0.125, kTol);
  }
  const auto z = StateVector(3).Marginal(std::vector<int>{2, 3});
  EXPECT_EQ(z.probabilities, (std::vector<double>{1, 0, 0, 0}));
}

TEST(StateVector, MarginalOrderingFollowsSubset) {
  const StateVector s = StateVector::Basis(BasisOutcome::FromString("100"));
  // subset {3,1}: pattern bits are (q3, q1) = (0, 1) -> index 1.
  const auto m = s.Marginal(std::vector<int>{3, 1});
  EXPECT_EQ(m.probabilities, (std::vector<double>{0, 1, 0, 0}));
}

TEST(StateVector, MarginalErrors) {
  const StateVector s(3);
  EXPECT_EQ(KindOf([&] { (void)s.Marginal(std::vector<int>{}); }), ErrorKind::kArgument);
  EXPECT_EQ(KindOf([&] { (void)s.Marginal(std::vector<int>{1, 1}); }), ErrorKind::kArgument);
  EXPECT_EQ(KindOf([&] { (void)s.Marginal(std::vector<int>{4}); }), ErrorKind::kArgument);
}

TEST(StateVector, FullMarginalEqualsBasisProbabilities) {
  Rng rng = MakeRng(31);
  for (int n = 1; n <= 6; ++n) {
    const StateVector psi = testing::RandomState(n, rng);
    std::vector<int> all;
    for (int q = 1; q <= n; ++q) all.push_back(q);
    const auto m = psi.Marginal(all);
    double total = 0.0;
    for (uint64_t i = 0; i < psi.size(); ++i) {
      EXPECT_EQ(m.probabilities[i], std::norm(psi[i]));
      total += m.probabilities[i];
    }
    EXPECT_NEAR(total, 1.0, kTol);
  }
}

TEST(BasisOutcome, StringAndIndexAgree) {
  for (uint64_t i = 0; i < 64; ++i) {
    const BasisOutcome o = BasisOutcome::FromIndex(i, 6);
    EXPECT_EQ(o.ToIndex(), i);
    EXPECT_EQ(o.ToString(), testing::BitsOf(i, 6));
    EXPECT_EQ(BasisOutcome::FromString(o.ToString()), o);
  }
  EXPECT_THROW(BasisOutcome::FromString("10x"), Error);
}

}  // namespace
}  // namespace qvss
