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

#include "quickest/network.h"

#include <set>
#include <string>
#include <vector>

namespace quickest {

NodeId FlowNetwork::terminal_node(int terminal) const {
  const int source_count = static_cast<int>(sources.size());
  return terminal < source_count ? sources[terminal]
                                 : sinks[terminal - source_count];
}

Rat FlowNetwork::total_capacity() const {
  Rat total = 0;
  for (const Arc& arc : arcs) total += arc.capacity;
  return total;
}

std::vector<int> TerminalSet::members() const {
  std::vector<int> result;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    result.push_back(__builtin_ctzll(rest));
  }
  return result;
}

bool SupplyVector::is_zero() const {
  for (const Rat& v : values) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<std::string> ValidateInstance(const FlowNetwork& network,
                                          const SupplyVector& supply) {
  std::vector<std::string> violations;
  const int n = network.node_count;
  if (n < 0) violations.push_back("negative node count");

  for (int a = 0; a < network.arc_count(); ++a) {
    const Arc& arc = network.arcs[a];
    const std::string where = "arc " + std::to_string(a) + ": ";
    if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) {
      violations.push_back(where + "node id out of range");
    }
    if (arc.tail == arc.head) violations.push_back(where + "self-loop");
    if (arc.capacity < 0) violations.push_back(where + "negative capacity");
    if (arc.transit < 0) violations.push_back(where + "negative transit time");
  }

  std::set<NodeId> sources;
  for (NodeId v : network.sources) {
    if (v < 0 || v >= n) {
      violations.push_back("source " + std::to_string(v) + " out of range");
    }
    if (!sources.insert(v).second) {
      violations.push_back("source " + std::to_string(v) + " listed twice");
    }
  }
  std::set<NodeId> sinks;
  for (NodeId v : network.sinks) {
    if (v < 0 || v >= n) {
      violations.push_back("sink " + std::to_string(v) + " out of range");
    }
    if (!sinks.insert(v).second) {
      violations.push_back("sink " + std::to_string(v) + " listed twice");
    }
    if (sources.count(v) != 0) {
      violations.push_back("terminal sets overlap at node " +
                           std::to_string(v));
    }
  }

  const int k = network.terminal_count();
  if (k > kMaxTerminals) {
    violations.push_back("too many terminals: " + std::to_string(k) + " > " +
                         std::to_string(kMaxTerminals));
  }

  if (static_cast<int>(supply.values.size()) != k) {
    violations.push_back("supply vector has " +
                         std::to_string(supply.values.size()) +
                         " entries for " + std::to_string(k) + " terminals");
    return violations;
  }
  Rat total = 0;
  for (int i = 0; i < k; ++i) {
    const Rat& b = supply.values[i];
    total += b;
    if (network.is_source_terminal(i) && b < 0) {
      violations.push_back("negative supply at source " +
                           std::to_string(network.terminal_node(i)));
    }
    if (!network.is_source_terminal(i) && b > 0) {
      violations.push_back("positive demand at sink " +
                           std::to_string(network.terminal_node(i)));
    }
  }
  if (total != 0) violations.push_back("supplies do not sum to zero");
  return violations;
}

Rat SupplyOfSet(const SupplyVector& supply, TerminalSet set) {
  Rat total = 0;
  for (int terminal : set.members()) total += supply.values[terminal];
  return total;
}

Rat TotalSupply(const FlowNetwork& network, const SupplyVector& supply) {
  Rat total = 0;
  for (std::size_t i = 0; i < network.sources.size(); ++i) {
    total += supply.values[i];
  }
  return total;
}

std::string FormatTerminalSet(const FlowNetwork& network, TerminalSet set) {
  std::string text = "{";
  bool first = true;
  for (int terminal : set.members()) {
    if (!first) text += ",";
    text += std::to_string(network.terminal_node(terminal));
    first = false;
  }
  return text + "}";
}

}  // namespace quickest
