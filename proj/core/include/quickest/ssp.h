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

#ifndef QUICKEST_SSP_H_
#define QUICKEST_SSP_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "quickest/network.h"
#include "quickest/rational.h"

namespace quickest {

// The network N^S: the base network plus a super source wired to every source
// in S and every sink outside S wired to a super sink. Auxiliary arcs have
// zero transit time and capacity FlowNetwork::total_capacity().
struct ExtendedNetwork {
  int node_count = 0;
  NodeId super_source = 0;
  NodeId super_sink = 0;
  // Base arcs keep their indices [0, base_arc_count); auxiliary arcs follow.
  std::vector<Arc> arcs;
  int base_arc_count = 0;
};

ExtendedNetwork BuildExtended(const FlowNetwork& network, TerminalSet set);

// One augmenting path of the successive-shortest-path run.
struct SspSegment {
  Rat length;  // residual path cost, with transit times as costs
  Rat amount;  // bottleneck flow pushed along the path, > 0
  // Signed incidence of the path on base arcs: +1 forward, -1 backward.
  // length == sum_a certificate[a] * transit[a] holds exactly.
  std::vector<std::int8_t> certificate;
};

// Exact description of the convex piecewise-linear function
//
//   o(theta) = sum over segments with length <= theta of amount*(theta-length)
//
// i.e. the value of a maximum flow over time with horizon theta from the
// sources in S to the sinks outside S (temporally repeated flow).
struct SspProfile {
  std::vector<SspSegment> segments;  // lengths nondecreasing
  Rat max_static_value;              // sum of amounts
  bool exhausted = true;             // no augmenting path is left
};

inline constexpr int kUnlimitedSegments = std::numeric_limits<int>::max();

// Runs successive shortest paths on N^S. Dijkstra with node potentials;
// among equally short labels the lowest node id is settled first, so the
// result is deterministic. Stops early (exhausted == false) after
// `max_segments` augmentations.
SspProfile ComputeProfile(const FlowNetwork& network, TerminalSet set,
                          int max_segments = kUnlimitedSegments);

// Static max-flow value from the sources in S to the sinks outside S.
// Throws TruncatedProfileError if the profile is not exhausted.
Rat MaxStaticValue(const SspProfile& profile);

}  // namespace quickest

#endif  // QUICKEST_SSP_H_
