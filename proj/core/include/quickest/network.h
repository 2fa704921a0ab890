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

#ifndef QUICKEST_NETWORK_H_
#define QUICKEST_NETWORK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "quickest/rational.h"

namespace quickest {

using NodeId = int;
using ArcIndex = int;

// Maximum number of terminals, so that a TerminalSet fits one machine word.
inline constexpr int kMaxTerminals = 62;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  Rat capacity;  // flow per unit of time
  Rat transit;   // time

  bool operator==(const Arc&) const = default;
};

// Directed graph with capacities, transit times and disjoint terminal sets.
// Terminals are indexed in the concatenated order: sources first, then sinks.
struct FlowNetwork {
  int node_count = 0;
  std::vector<Arc> arcs;
  std::vector<NodeId> sources;
  std::vector<NodeId> sinks;

  int arc_count() const { return static_cast<int>(arcs.size()); }
  int terminal_count() const {
    return static_cast<int>(sources.size() + sinks.size());
  }
  NodeId terminal_node(int terminal) const;
  bool is_source_terminal(int terminal) const {
    return terminal < static_cast<int>(sources.size());
  }

  // Sum of all arc capacities. Stands in for "infinite" capacity on the
  // auxiliary arcs of extended networks: no s-t flow can exceed it.
  Rat total_capacity() const;

  bool operator==(const FlowNetwork&) const = default;
};

// A subset of terminals, bit i <-> terminal i of FlowNetwork's order.
class TerminalSet {
 public:
  constexpr TerminalSet() = default;
  constexpr explicit TerminalSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr TerminalSet All(int terminal_count) {
    return TerminalSet(terminal_count >= 64
                           ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << terminal_count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int terminal) const {
    return (bits_ >> terminal) & 1U;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }

  constexpr TerminalSet with(int terminal) const {
    return TerminalSet(bits_ | (std::uint64_t{1} << terminal));
  }
  constexpr TerminalSet operator|(TerminalSet other) const {
    return TerminalSet(bits_ | other.bits_);
  }
  constexpr TerminalSet operator&(TerminalSet other) const {
    return TerminalSet(bits_ & other.bits_);
  }
  constexpr bool is_subset_of(TerminalSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool operator==(const TerminalSet&) const = default;

  // Terminal indices in increasing order.
  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

// b(v) for every terminal, in terminal order. Sources carry supplies (>= 0),
// sinks carry demands as non-positive numbers.
struct SupplyVector {
  std::vector<Rat> values;

  bool is_zero() const;

  bool operator==(const SupplyVector&) const = default;
};

struct Instance {
  FlowNetwork network;
  SupplyVector supply;

  bool operator==(const Instance&) const = default;
};

// Every violated structural invariant, as human-readable messages. Empty
// means the instance is valid.
std::vector<std::string> ValidateInstance(const FlowNetwork& network,
                                          const SupplyVector& supply);
inline std::vector<std::string> ValidateInstance(const Instance& instance) {
  return ValidateInstance(instance.network, instance.supply);
}

// b(S) := sum of b(v) over v in S.
Rat SupplyOfSet(const SupplyVector& supply, TerminalSet set);

// Total supply of all sources.
Rat TotalSupply(const FlowNetwork& network, const SupplyVector& supply);

// "{2,5}" using node ids of the member terminals.
std::string FormatTerminalSet(const FlowNetwork& network, TerminalSet set);

}  // namespace quickest

#endif  // QUICKEST_NETWORK_H_
