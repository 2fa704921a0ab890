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

#include "oracles/circulation_oracle.h"

#include <optional>
#include <utility>
#include <vector>

namespace quickest::testing {
namespace {

struct Edge {
  int to;
  Rat residual;
  Rat cost;
};

struct Circulation {
  Rat cost = 0;
  Rat return_flow = 0;
};

Circulation Solve(const FlowNetwork& network, TerminalSet set,
                  const Rat& theta) {
  const int n = network.node_count + 2;
  const int s = network.node_count;
  const int t = network.node_count + 1;
  Rat big = 0;
  for (const Arc& arc : network.arcs) big += arc.capacity;

  std::vector<Edge> edges;
  auto add = [&](int from, int to, const Rat& cap, const Rat& cost) {
    edges.push_back({to, cap, cost});
    edges.push_back({from, Rat(0), Rat(-cost)});
  };
  for (const Arc& arc : network.arcs) {
    add(arc.tail, arc.head, arc.capacity, arc.transit);
  }
  for (int i = 0; i < network.terminal_count(); ++i) {
    const bool source = network.is_source_terminal(i);
    if (source && set.contains(i)) add(s, network.terminal_node(i), big, Rat(0));
    if (!source && !set.contains(i)) {
      add(network.terminal_node(i), t, big, Rat(0));
    }
  }
  const int return_edge = static_cast<int>(edges.size());
  add(t, s, big, Rat(-theta));

  auto tail_of = [&](int e) { return edges[e ^ 1].to; };

  Circulation result;
  for (;;) {
    // Bellman-Ford from a virtual root connected to all nodes.
    std::vector<Rat> dist(n, Rat(0));
    std::vector<int> parent(n, -1);
    int touched = -1;
    for (int round = 0; round < n; ++round) {
      touched = -1;
      for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].residual <= 0) continue;
        const int u = tail_of(e);
        const int v = edges[e].to;
        Rat candidate = dist[u] + edges[e].cost;
        if (candidate < dist[v]) {
          dist[v] = candidate;
          parent[v] = e;
          touched = v;
        }
      }
      if (touched < 0) break;
    }
    if (touched < 0) break;

    int v = touched;
    for (int i = 0; i < n; ++i) v = tail_of(parent[v]);
    std::vector<int> cycle;
    for (int u = v;;) {
      const int e = parent[u];
      cycle.push_back(e);
      u = tail_of(e);
      if (u == v) break;
    }
    Rat bottleneck = edges[cycle.front()].residual;
    for (int e : cycle) {
      if (edges[e].residual < bottleneck) bottleneck = edges[e].residual;
    }
    for (int e : cycle) {
      edges[e].residual -= bottleneck;
      edges[e ^ 1].residual += bottleneck;
      result.cost += bottleneck * edges[e].cost;
    }
  }
  result.return_flow = edges[return_edge ^ 1].residual;
  return result;
}

}  // namespace

Rat MaxFlowOverTimeByCirculation(const FlowNetwork& network, TerminalSet set,
                                 const Rat& theta) {
  return -Solve(network, set, theta).cost;
}

Rat ReturnArcFlow(const FlowNetwork& network, TerminalSet set,
                  const Rat& theta) {
  return Solve(network, set, theta).return_flow;
}

}  // namespace quickest::testing
