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

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "quickest/network.h"
#include "quickest/rational.h"
#include "test_instances.h"

namespace quickest {
namespace {

using testing::InstanceB;
using testing::SingleArc;

bool HasViolation(const std::vector<std::string>& violations,
                  const std::string& needle) {
  for (const auto& v : violations) {
    if (v.find(needle) != std::string::npos) return true;
  }
  return false;
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ParseRat("7/3"), MakeRat(7, 3));
  EXPECT_EQ(ParseRat("-4/6"), MakeRat(-2, 3));
  EXPECT_EQ(ToString(ParseRat("10/5")), "2");
  EXPECT_EQ(ToString(MakeRat(5, 2)), "5/2");
  EXPECT_EQ(ToString(MakeRat(-1, 3)), "-1/3");
  EXPECT_EQ(ToDecimalString(Rat(5)), "5.0");
  EXPECT_EQ(ToDecimalString(MakeRat(5, 2)), "2.5");
  EXPECT_THROW(ParseRat("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseRat("1.5"), std::invalid_argument);
  EXPECT_THROW(ParseRat(""), std::invalid_argument);
  EXPECT_THROW(ParseRat("3/-2"), std::invalid_argument);
}

TEST(RationalTest, ArithmeticIsExactOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rat a = MakeRat(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                          static_cast<std::int64_t>(rng() % 9999) + 1);
    const Rat b = MakeRat(static_cast<std::int64_t>(rng() % 2000001) - 1000000,
                          static_cast<std::int64_t>(rng() % 9999) + 1);
    const Rat sum = a + b;
    EXPECT_EQ(Rat(sum - b), a);
    if (b != 0) EXPECT_EQ(Rat(Rat(a / b) * b), a);
    // Canonical form: positive denominator, reduced.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(), sum.get_den().get_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_GT(sum.get_den(), 0);
    EXPECT_EQ(ParseRat(ToString(a)), a);
  }
}

TEST(ValidateInstanceTest, SingleArcIsValid) {
  EXPECT_TRUE(ValidateInstance(SingleArc()).empty());
  EXPECT_TRUE(ValidateInstance(InstanceB()).empty());
}

TEST(ValidateInstanceTest, UnbalancedSupplies) {
  Instance instance = SingleArc();
  instance.supply.values = {Rat(3), Rat(-2)};
  EXPECT_TRUE(HasViolation(ValidateInstance(instance),
                           "supplies do not sum to zero"));
}

TEST(ValidateInstanceTest, OverlappingTerminals) {
  Instance instance = SingleArc();
  instance.network.sinks = {0};
  EXPECT_TRUE(HasViolation(ValidateInstance(instance),
                           "terminal sets overlap"));
}

TEST(ValidateInstanceTest, ReportsEveryViolation) {
  Instance instance = SingleArc();
  instance.network.arcs.push_back({1, 1, Rat(-1), Rat(-2)});
  instance.network.arcs.push_back({0, 7, Rat(1), Rat(0)});
  instance.supply.values = {Rat(-1), Rat(2)};
  const auto violations = ValidateInstance(instance);
  EXPECT_TRUE(HasViolation(violations, "self-loop"));
  EXPECT_TRUE(HasViolation(violations, "negative capacity"));
  EXPECT_TRUE(HasViolation(violations, "negative transit"));
  EXPECT_TRUE(HasViolation(violations, "out of range"));
  EXPECT_TRUE(HasViolation(violations, "negative supply"));
  EXPECT_TRUE(HasViolation(violations, "positive demand"));
}

TEST(ValidateInstanceTest, TooManyTerminals) {
  Instance instance;
  instance.network.node_count = 64;
  for (int v = 0; v < 32; ++v) instance.network.sources.push_back(v);
  for (int v = 32; v < 63; ++v) instance.network.sinks.push_back(v);
  instance.supply.values.assign(63, Rat(0));
  EXPECT_TRUE(HasViolation(ValidateInstance(instance), "too many terminals"));
}

TEST(SupplyOfSetTest, Examples) {
  EXPECT_EQ(SupplyOfSet(SingleArc().supply, TerminalSet()), 0);
  EXPECT_EQ(SupplyOfSet(SingleArc().supply, TerminalSet(1)), 3);
  EXPECT_EQ(SupplyOfSet(InstanceB(5, 1).supply, TerminalSet(3)), 6);
}

TEST(SupplyOfSetTest, AdditiveOverDisjointSets) {
  std::mt19937_64 rng(11);
  SupplyVector supply;
  for (int i = 0; i < 12; ++i) {
    supply.values.push_back(MakeRat(static_cast<std::int64_t>(rng() % 61) - 30,
                                    static_cast<std::int64_t>(rng() % 5) + 1));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t a = rng() & 0xFFF;
    const std::uint64_t b = rng() & 0xFFF & ~a;
    EXPECT_EQ(Rat(SupplyOfSet(supply, TerminalSet(a)) +
                  SupplyOfSet(supply, TerminalSet(b))),
              SupplyOfSet(supply, TerminalSet(a | b)));
  }
}

TEST(TerminalSetTest, Basics) {
  const TerminalSet set = TerminalSet().with(0).with(3);
  EXPECT_TRUE(set.contains(3));
  EXPECT_FALSE(set.contains(1));
  EXPECT_EQ(set.size(), 2);
  EXPECT_EQ(set.members(), (std::vector<int>{0, 3}));
  EXPECT_EQ(TerminalSet::All(3).bits(), 7U);
  EXPECT_TRUE(TerminalSet(5).is_subset_of(TerminalSet(7)));
  EXPECT_EQ(FormatTerminalSet(InstanceB().network, TerminalSet(5)), "{0,2}");
}

}  // namespace
}  // namespace quickest
