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

#ifndef QUICKEST_EXPANSION_H_
#define QUICKEST_EXPANSION_H_

#include <cstdint>
#include <string>
#include <vector>

#include "quickest/network.h"
#include "quickest/rational.h"

namespace quickest {

// Discrete/continuous bridge. Stretching time by q turns rational transit
// times and horizon into integers; capacities become u/q per unit step so
// that one step of the stretched model carries the volume of rate u over
// time 1/q. Supplies are unchanged.
struct ScaledNetwork {
  FlowNetwork network;
  std::int64_t horizon = 0;  // q * theta
  std::int64_t scale = 1;    // q
};

// q = lcm of the denominators of theta and of all transit times.
ScaledNetwork ScaleToIntegral(const FlowNetwork& network, const Rat& theta);

// Same, with an explicit multiple q (must make everything integral).
ScaledNetwork ScaleBy(const FlowNetwork& network, const Rat& theta,
                      std::int64_t scale);

inline constexpr std::int64_t kDefaultExpansionNodeCap = 200000;

// Static network over layers 0..T. Layer t stands for the step [t, t+1).
//  * movement copy (v,t) -> (w,t+tau) of arc a for every t with t+tau < T
//    (flow entering during step t has arrived by the end of step t+tau),
//    capacity u_a;
//  * holdover (v,t) -> (v,t+1) for t < T, capacity = total supply;
//  * super source -> (s,0) with capacity b(s);
//  * (t,T) -> super sink with capacity -b(t).
// Sinks collect early arrivals through their holdover arcs.
struct TimeExpandedNetwork {
  struct StaticArc {
    NodeId tail = 0;
    NodeId head = 0;
    Rat capacity;
    ArcIndex base_arc = -1;   // -1 for holdover and terminal arcs
    std::int64_t layer = 0;   // departure step for movement copies
  };

  std::int64_t horizon = 0;
  int base_node_count = 0;
  NodeId super_source = 0;
  NodeId super_sink = 0;
  int node_count = 0;
  std::vector<StaticArc> arcs;
  std::int64_t movement_arc_count = 0;

  NodeId NodeAt(NodeId base_node, std::int64_t layer) const {
    return static_cast<NodeId>(layer * base_node_count + base_node);
  }
};

// Requires integral transit times. Throws CapExceededError if
// (T+1)*n > node_cap.
TimeExpandedNetwork BuildTimeExpanded(
    const FlowNetwork& network, const SupplyVector& supply,
    std::int64_t horizon, std::int64_t node_cap = kDefaultExpansionNodeCap);

// Is there a transshipment over time with horizon theta? Decided by a max
// flow in the time-expanded network of the scaled instance.
bool FeasibleByExpansion(const FlowNetwork& network, const SupplyVector& supply,
                         const Rat& theta,
                         std::int64_t node_cap = kDefaultExpansionNodeCap);

// Piecewise-constant inflow rate on a base arc. The rate of piece i holds on
// [pieces[i].time, pieces[i+1].time); the last piece extends to infinity.
struct RatePiece {
  Rat time;
  Rat rate;
};

struct ArcRate {
  std::vector<RatePiece> pieces;  // times strictly increasing
};

struct FlowOverTime {
  Rat horizon;
  std::vector<ArcRate> arcs;  // one per base arc
};

// A transshipment over time with horizon theta, from a max flow in the
// time-expanded network. Throws InputError("infeasible horizon") when theta
// is not feasible.
FlowOverTime ExtractTransshipment(
    const FlowNetwork& network, const SupplyVector& supply, const Rat& theta,
    std::int64_t node_cap = kDefaultExpansionNodeCap);

// Checks capacity bounds, nonnegative prefix excess at every node (storage
// allowed, nothing created from nothing), supplies met and demands received
// by theta, no arrivals after theta, nothing left in storage at theta.
std::vector<std::string> VerifyFlow(const FlowNetwork& network,
                                    const SupplyVector& supply,
                                    const FlowOverTime& flow, const Rat& theta);

}  // namespace quickest

#endif  // QUICKEST_EXPANSION_H_
