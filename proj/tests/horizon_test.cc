// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "oracles/circulation_oracle.h"
#include "quickest/errors.h"
#include "quickest/generator.h"
#include "quickest/horizon.h"
#include "quickest/ssp.h"
#include "test_instances.h"

namespace quickest {
namespace {

using testing::InstanceB;
using testing::kS1S2;
using testing::SingleArc;

const SspProfile& ProfileB() {
  static const SspProfile profile = ComputeProfile(InstanceB().network, kS1S2);
  return profile;
}

const SspProfile& ProfileSingle() {
  static const SspProfile profile =
      ComputeProfile(SingleArc().network, TerminalSet(1));
  return profile;
}

TEST(OThetaTest, Examples) {
  // Temporally repeated: 2 units/time for 2 time units plus 1 unit/time for 1.
  EXPECT_EQ(OTheta(ProfileB(), Rat(2)), 5);
  EXPECT_EQ(OTheta(ProfileB(), Rat(0)), 0);
  EXPECT_EQ(OTheta(ProfileSingle(), Rat(5)), 3);
  EXPECT_THROW(OTheta(ProfileB(), Rat(-1)), std::invalid_argument);
}

TEST(DThetaTest, Examples) {
  const Instance single = SingleArc();
  EXPECT_EQ(DTheta(ProfileSingle(), single.supply, TerminalSet(1), Rat(5)), 0);
  EXPECT_EQ(DTheta(ProfileSingle(), single.supply, TerminalSet(1), Rat(0)), -3);
  EXPECT_EQ(DTheta(ProfileB(), InstanceB(5, 1).supply, kS1S2, Rat(2)), -1);
}

TEST(CutTest, Examples) {
  EXPECT_EQ(CutLeft(ProfileB(), Rat(2)), 3);
  EXPECT_EQ(CutLeft(ProfileB(), Rat(1)), 2);
  EXPECT_EQ(CutRight(ProfileB(), Rat(1)), 3);
  EXPECT_EQ(CutLeft(ProfileSingle(), Rat(1)), 0);
  EXPECT_EQ(CutRight(ProfileSingle(), Rat(1)), 0);
  EXPECT_THROW(CutLeft(ProfileB(), Rat(0)), std::invalid_argument);
}

TEST(ZeroOfTest, Examples) {
  EXPECT_EQ(ZeroOf(ProfileSingle(), SingleArc().supply, TerminalSet(1)), 5);
  // 2*theta + (theta - 1) = 6 on the second segment.
  EXPECT_EQ(ZeroOf(ProfileB(), InstanceB(5, 1).supply, kS1S2), MakeRat(7, 3));
  // b({t}) = -6 <= 0.
  const SspProfile sink_only =
      ComputeProfile(InstanceB().network, TerminalSet(4));
  EXPECT_EQ(ZeroOf(sink_only, InstanceB().supply, TerminalSet(4)), 0);
}

TEST(ZeroOfTest, ZeroOnBreakpoint) {
  // b(S) = 2 is reached exactly at theta = 1, the second path's length.
  EXPECT_EQ(ZeroOf(ProfileB(), InstanceB(1, 1).supply, kS1S2), 1);
}

TEST(ZeroOfTest, InfeasibleForeverWithoutPath) {
  Instance instance = SingleArc();
  instance.network.arcs[0].capacity = 0;
  const SspProfile profile = ComputeProfile(instance.network, TerminalSet(1));
  EXPECT_THROW(ZeroOf(profile, instance.supply, TerminalSet(1)),
               InfeasibleForeverError);
}

TEST(TruncatedProfileTest, CertifiesOnlyBelowLastLength) {
  const SspProfile truncated =
      ComputeProfile(InstanceB().network, kS1S2, /*max_segments=*/1);
  // Only the length-0 path is known; the next one is at least that long.
  EXPECT_THROW(OTheta(truncated, Rat(1)), TruncatedProfileError);
  EXPECT_THROW(CutLeft(truncated, Rat(1)), TruncatedProfileError);
  EXPECT_EQ(OTheta(truncated, Rat(0)), 0);
  const SspProfile none = ComputeProfile(InstanceB().network, kS1S2, 0);
  EXPECT_THROW(ZeroOf(none, InstanceB().supply, kS1S2), TruncatedProfileError);
}

TEST(BreakpointsTest, Examples) {
  const auto bps = Breakpoints(ProfileB());
  ASSERT_EQ(bps.size(), 2U);
  EXPECT_EQ(bps[0].theta, 0);
  EXPECT_EQ(bps[1].theta, 1);
  EXPECT_EQ(bps[1].certificate, (std::vector<std::int8_t>{0, 1}));
  EXPECT_TRUE(
      Breakpoints(ComputeProfile(InstanceB().network, TerminalSet())).empty());
  const auto single = Breakpoints(ProfileSingle());
  ASSERT_EQ(single.size(), 1U);
  EXPECT_EQ(single[0].theta, 2);
}

class HorizonPropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(HorizonPropertyTest, DerivativesAndZeros) {
  const Instance instance = GenerateInstance(CorpusParams(GetParam()));
  const std::uint64_t subsets = std::uint64_t{1}
                                << instance.network.terminal_count();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const TerminalSet set(bits);
    const SspProfile profile = ComputeProfile(instance.network, set);

    std::vector<Rat> probes = {MakeRat(1, 7), Rat(1), MakeRat(5, 2), Rat(6),
                               MakeRat(23, 2), Rat(40)};
    for (const Breakpoint& bp : Breakpoints(profile)) {
      probes.push_back(bp.theta);
      probes.push_back(Rat(bp.theta + MakeRat(1, 3)));
    }
    Rat previous_right = 0;
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    for (const Rat& theta : probes) {
      if (theta <= 0) continue;
      const Rat left = CutLeft(profile, theta);
      const Rat right = CutRight(profile, theta);
      EXPECT_LE(left, right);
      EXPECT_LE(previous_right, left);
      previous_right = right;
    }

    // Interior of each linear piece: both derivatives equal the secant slope
    // and the return-arc flow of the independent circulation.
    std::vector<Rat> knots = {Rat(0)};
    for (const Breakpoint& bp : Breakpoints(profile)) knots.push_back(bp.theta);
    knots.push_back(Rat(knots.back() + 4));
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      if (knots[i] == knots[i + 1]) continue;
      const Rat mid = (knots[i] + knots[i + 1]) / 2;
      const Rat delta = (knots[i + 1] - mid) / 2;
      const Rat secant =
          (OTheta(profile, Rat(mid + delta)) - OTheta(profile, mid)) / delta;
      EXPECT_EQ(CutLeft(profile, mid), secant);
      EXPECT_EQ(CutRight(profile, mid), secant);
      EXPECT_EQ(testing::ReturnArcFlow(instance.network, set, mid), secant);
    }

    const Rat b = SupplyOfSet(instance.supply, set);
    const Rat zero = ZeroOf(profile, instance.supply, set);
    if (b > 0) {
      EXPECT_EQ(DTheta(profile, instance.supply, set, zero), 0);
      const Rat before = zero - Rat(zero / 1000);
      EXPECT_LT(DTheta(profile, instance.supply, set, before), 0);
      EXPECT_GT(CutLeft(profile, zero), 0);
    } else {
      EXPECT_EQ(zero, 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Corpus, HorizonPropertyTest,
                         ::testing::Range<std::uint64_t>(100, 120));

}  // namespace
}  // namespace quickest
