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

#ifndef QUICKEST_GENERATOR_H_
#define QUICKEST_GENERATOR_H_

#include <cstdint>

#include "quickest/network.h"

namespace quickest {

struct GeneratorParams {
  int nodes = 6;
  int arcs = 12;
  int terminals = 4;
  int max_capacity = 10;
  int max_transit = 10;
  int max_supply = 30;
  std::uint64_t seed = 1;
};

// Random weakly connected instance with integral data, deterministic per
// parameter set. Arcs form an in-tree towards one sink plus random extra
// arcs, so every source reaches a sink. Supplies are drawn in
// [1, max_supply] and balanced; instances where some subset can never be
// served are redrawn. Throws InputError on an invalid parameter domain.
Instance GenerateInstance(const GeneratorParams& params);

// Parameters of the seeded corpus used by tests and benchmarks:
// n <= 10, m <= 25, k in [2, 6], tau <= 10, u <= 10, |b| <= 30.
GeneratorParams CorpusParams(std::uint64_t seed);

}  // namespace quickest

#endif  // QUICKEST_GENERATOR_H_
