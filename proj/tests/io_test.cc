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
#include <string>

#include "gtest/gtest.h"
#include "quickest/errors.h"
#include "quickest/expansion.h"
#include "quickest/generator.h"
#include "quickest/instance_io.h"
#include "test_instances.h"

namespace quickest {
namespace {

constexpr char kSingleArc[] = R"({
  "nodes": 2,
  "arcs": [{"tail": 0, "head": 1, "capacity": 1, "transit": 2}],
  "sources": [{"node": 0, "supply": 3}],
  "sinks": [{"node": 1, "demand": -3}]
})";

TEST(ParseInstanceTest, SingleArc) {
  EXPECT_EQ(ParseInstance(kSingleArc), testing::SingleArc());
}

TEST(ParseInstanceTest, RationalTransit) {
  std::string doc = kSingleArc;
  doc.replace(doc.find("\"transit\": 2"), 12, "\"transit\": \"7/3\"");
  EXPECT_EQ(ParseInstance(doc).network.arcs[0].transit, MakeRat(7, 3));
}

TEST(ParseInstanceTest, NegativeCapacityIsRejected) {
  std::string doc = kSingleArc;
  doc.replace(doc.find("\"capacity\": 1"), 13, "\"capacity\": \"-1\"");
  try {
    ParseInstance(doc);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("negative capacity"),
              std::string::npos);
  }
}

TEST(ParseInstanceTest, MalformedDocuments) {
  EXPECT_THROW(ParseInstance("{"), InputError);
  EXPECT_THROW(ParseInstance("[]"), InputError);
  EXPECT_THROW(ParseInstance(R"({"nodes": 2, "arcs": [], "sources": []})"),
               InputError);
  std::string doc = kSingleArc;
  doc.replace(doc.find("\"transit\": 2"), 12, "\"transit\": 2.5");
  try {
    ParseInstance(doc);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("arcs[0].transit"), std::string::npos);
  }
}

TEST(SerializeInstanceTest, RoundTripOnCorpus) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance instance = GenerateInstance(CorpusParams(seed));
    instance.network.arcs[0].transit = MakeRat(static_cast<long>(seed), 7);
    const std::string text = SerializeInstance(instance);
    EXPECT_EQ(ParseInstance(text), instance);
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
  }
}

TEST(FlowDocumentTest, RoundTrip) {
  const Instance b = testing::InstanceB(4, 2);
  const FlowOverTime flow = ExtractTransshipment(b.network, b.supply, Rat(3));
  const FlowOverTime parsed = ParseFlow(SerializeFlow(b.network, flow), b.network);
  EXPECT_EQ(parsed.horizon, flow.horizon);
  ASSERT_EQ(parsed.arcs.size(), flow.arcs.size());
  for (std::size_t a = 0; a < flow.arcs.size(); ++a) {
    ASSERT_EQ(parsed.arcs[a].pieces.size(), flow.arcs[a].pieces.size());
    for (std::size_t i = 0; i < flow.arcs[a].pieces.size(); ++i) {
      EXPECT_EQ(parsed.arcs[a].pieces[i].time, flow.arcs[a].pieces[i].time);
      EXPECT_EQ(parsed.arcs[a].pieces[i].rate, flow.arcs[a].pieces[i].rate);
    }
  }
}

TEST(GenerateInstanceTest, DeterministicPerSeed) {
  GeneratorParams p;
  p.nodes = 6;
  p.arcs = 12;
  p.terminals = 4;
  p.seed = 1;
  EXPECT_EQ(SerializeInstance(GenerateInstance(p)),
            SerializeInstance(GenerateInstance(p)));
  p.seed = 2;
  const std::string other = SerializeInstance(GenerateInstance(p));
  p.seed = 1;
  EXPECT_NE(SerializeInstance(GenerateInstance(p)), other);
}

TEST(GenerateInstanceTest, ParameterDomain) {
  GeneratorParams p;
  p.nodes = 3;
  p.terminals = 4;
  EXPECT_THROW(GenerateInstance(p), InputError);
  p.terminals = 1;
  EXPECT_THROW(GenerateInstance(p), InputError);
  p.terminals = 2;
  p.arcs = 1;
  EXPECT_THROW(GenerateInstance(p), InputError);
}

TEST(GenerateInstanceTest, CorpusInstancesAreValidAndInRange) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const GeneratorParams p = CorpusParams(seed);
    EXPECT_LE(p.nodes, 10);
    EXPECT_LE(p.arcs, 25);
    EXPECT_GE(p.terminals, 2);
    EXPECT_LE(p.terminals, 6);
    const Instance instance = GenerateInstance(p);
    EXPECT_TRUE(ValidateInstance(instance).empty());
    EXPECT_EQ(instance.network.arc_count(), p.arcs);
    for (const Arc& arc : instance.network.arcs) {
      EXPECT_LE(arc.capacity, 10);
      EXPECT_LE(arc.transit, 10);
    }
    for (const Rat& b : instance.supply.values) EXPECT_LE(abs(b), 30);
  }
}

}  // namespace
}  // namespace quickest
