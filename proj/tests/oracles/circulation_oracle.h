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

#ifndef QUICKEST_TESTS_ORACLES_CIRCULATION_ORACLE_H_
#define QUICKEST_TESTS_ORACLES_CIRCULATION_ORACLE_H_

#include <cstdint>

#include "quickest/network.h"
#include "quickest/rational.h"

namespace quickest::testing {

// o^theta(S) as minus the minimum cost of a static circulation in N^{S,theta}
// (N^S plus a return arc t->s of cost -theta), found by canceling negative
// cycles located with Bellman-Ford. Shares no code with the SSP engine.
Rat MaxFlowOverTimeByCirculation(const FlowNetwork& network, TerminalSet set,
                                 const Rat& theta);

// Flow on the return arc of that optimal circulation. At a breakpoint the
// optimum is not unique; between breakpoints it is the slope of o^theta(S).
Rat ReturnArcFlow(const FlowNetwork& network, TerminalSet set,
                  const Rat& theta);

}  // namespace quickest::testing

#endif  // QUICKEST_TESTS_ORACLES_CIRCULATION_ORACLE_H_
