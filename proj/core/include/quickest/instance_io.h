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

#ifndef QUICKEST_INSTANCE_IO_H_
#define QUICKEST_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include "quickest/expansion.h"
#include "quickest/network.h"

namespace quickest {

// Instance document (JSON):
//
//   {
//     "nodes": 3,
//     "arcs": [{"tail": 0, "head": 2, "capacity": 2, "transit": "1/2"}, ...],
//     "sources": [{"node": 0, "supply": 5}, ...],
//     "sinks": [{"node": 2, "demand": -6}, ...]
//   }
//
// Numbers are JSON integers or "p/q" strings. Sink demands are the
// non-positive values b(t).

// Throws InputError with the offending field on malformed documents and with
// the violation list on invalid instances.
Instance ParseInstance(std::string_view text);

// Canonical serialization: integers bare, other rationals as "p/q" strings,
// two-space indentation, trailing newline.
std::string SerializeInstance(const Instance& instance);

// {"horizon": "5", "arcs": [{"arc": 0, "tail": 0, "head": 1,
//   "pieces": [{"time": "0", "rate": "1"}, ...]}, ...]}
std::string SerializeFlow(const FlowNetwork& network, const FlowOverTime& flow);
FlowOverTime ParseFlow(std::string_view text, const FlowNetwork& network);

}  // namespace quickest

#endif  // QUICKEST_INSTANCE_IO_H_
