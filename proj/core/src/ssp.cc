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

#include "quickest/ssp.h"

#include <cstdint>
#include <optional>
#include <vector>

#include "quickest/errors.h"

namespace quickest {

ExtendedNetwork BuildExtended(const FlowNetwork& network, TerminalSet set) {
  ExtendedNetwork extended;
  const int n = network.node_count;
  extended.node_count = n + 2;
  extended.super_source = n;
  extended.super_sink = n + 1;
  extended.arcs = network.arcs;
  extended.base_arc_count = network.arc_count();

  const Rat unbounded = network.total_capacity();
  for (int i = 0; i < network.terminal_count(); ++i) {
    const NodeId v = network.terminal_node(i);
    if (network.is_source_terminal(i) && set.contains(i)) {
      extended.arcs.push_back({extended.super_source, v, unbounded, Rat(0)});
    } else if (!network.is_source_terminal(i) && !set.contains(i)) {
      extended.arcs.push_back({v, extended.super_sink, unbounded, Rat(0)});
    }
  }
  return extended;
}

namespace {

// Residual graph over an ExtendedNetwork. Edge 2i is arc i forward, edge
// 2i+1 its reverse.
class Residual {
 public:
  explicit Residual(const ExtendedNetwork& net)
      : net_(net), adjacency_(net.node_count) {
    const int arcs = static_cast<int>(net.arcs.size());
    residual_.resize(2 * arcs);
    for (int i = 0; i < arcs; ++i) {
      residual_[2 * i] = net.arcs[i].capacity;
      residual_[2 * i + 1] = 0;
      adjacency_[net.arcs[i].tail].push_back(2 * i);
      adjacency_[net.arcs[i].head].push_back(2 * i + 1);
    }
  }

  NodeId Head(int edge) const {
    const Arc& arc = net_.arcs[edge / 2];
    return edge % 2 == 0 ? arc.head : arc.tail;
  }
  NodeId Tail(int edge) const { return Head(edge ^ 1); }
  Rat Cost(int edge) const {
    const Rat& tau = net_.arcs[edge / 2].transit;
    return edge % 2 == 0 ? tau : Rat(-tau);
  }
  const Rat& Capacity(int edge) const { return residual_[edge]; }
  void Push(int edge, const Rat& amount) {
    residual_[edge] -= amount;
    residual_[edge ^ 1] += amount;
  }
  const std::vector<int>& Out(NodeId v) const { return adjacency_[v]; }

 private:
  const ExtendedNetwork& net_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Rat> residual_;
};

struct ShortestPaths {
  std::vector<std::optional<Rat>> reduced_distance;
  std::vector<int> parent_edge;
};

// Label-setting shortest paths on reduced costs, which are nonnegative under
// the maintained potentials. O(V^2) selection keeps tie-breaking simple:
// smallest distance, then smallest node id.
ShortestPaths Dijkstra(const Residual& residual, const std::vector<Rat>& pot,
                       NodeId source, int node_count) {
  ShortestPaths sp;
  sp.reduced_distance.assign(node_count, std::nullopt);
  sp.parent_edge.assign(node_count, -1);
  std::vector<bool> settled(node_count, false);
  sp.reduced_distance[source] = Rat(0);

  for (;;) {
    NodeId best = -1;
    for (NodeId v = 0; v < node_count; ++v) {
      if (settled[v] || !sp.reduced_distance[v]) continue;
      if (best < 0 || *sp.reduced_distance[v] < *sp.reduced_distance[best]) {
        best = v;
      }
    }
    if (best < 0) break;
    settled[best] = true;
    for (int edge : residual.Out(best)) {
      if (residual.Capacity(edge) <= 0) continue;
      const NodeId head = residual.Head(edge);
      if (settled[head]) continue;
      Rat reduced = residual.Cost(edge) + pot[best] - pot[head];
      if (reduced < 0) {
        throw InvariantViolation("negative reduced cost in SSP");
      }
      Rat candidate = *sp.reduced_distance[best] + reduced;
      if (!sp.reduced_distance[head] || candidate < *sp.reduced_distance[head]) {
        sp.reduced_distance[head] = candidate;
        sp.parent_edge[head] = edge;
      }
    }
  }
  return sp;
}

}  // namespace

SspProfile ComputeProfile(const FlowNetwork& network, TerminalSet set,
                          int max_segments) {
  const ExtendedNetwork extended = BuildExtended(network, set);
  const int node_count = extended.node_count;
  const NodeId s = extended.super_source;
  const NodeId t = extended.super_sink;

  Residual residual(extended);
  // All transit times are nonnegative, so zero potentials are feasible.
  std::vector<Rat> potential(node_count, Rat(0));

  SspProfile profile;
  profile.max_static_value = 0;
  for (;;) {
    ShortestPaths sp = Dijkstra(residual, potential, s, node_count);
    if (!sp.reduced_distance[t]) {
      profile.exhausted = true;
      break;
    }
    if (static_cast<int>(profile.segments.size()) >= max_segments) {
      profile.exhausted = false;
      break;
    }

    SspSegment segment;
    segment.certificate.assign(extended.base_arc_count, 0);
    bool first = true;
    for (NodeId v = t; v != s; v = residual.Tail(sp.parent_edge[v])) {
      const int edge = sp.parent_edge[v];
      if (first || residual.Capacity(edge) < segment.amount) {
        segment.amount = residual.Capacity(edge);
        first = false;
      }
      const int arc = edge / 2;
      if (arc < extended.base_arc_count) {
        auto& entry = segment.certificate[arc];
        entry += edge % 2 == 0 ? 1 : -1;
        if (entry < -1 || entry > 1) {
          throw InvariantViolation("augmenting path reuses an arc");
        }
      }
    }
    segment.length = 0;
    for (int a = 0; a < extended.base_arc_count; ++a) {
      if (segment.certificate[a] != 0) {
        segment.length += segment.certificate[a] * extended.arcs[a].transit;
      }
    }
    Rat true_distance = *sp.reduced_distance[t] + potential[t] - potential[s];
    if (true_distance != segment.length) {
      throw InvariantViolation("SSP path length disagrees with its labels");
    }
    if (!profile.segments.empty() &&
        segment.length < profile.segments.back().length) {
      throw InvariantViolation("SSP path lengths decreased");
    }

    for (NodeId v = t; v != s; v = residual.Tail(sp.parent_edge[v])) {
      residual.Push(sp.parent_edge[v], segment.amount);
    }

    Rat farthest = 0;
    for (NodeId v = 0; v < node_count; ++v) {
      if (sp.reduced_distance[v] && *sp.reduced_distance[v] > farthest) {
        farthest = *sp.reduced_distance[v];
      }
    }
    for (NodeId v = 0; v < node_count; ++v) {
      potential[v] +=
          sp.reduced_distance[v] ? *sp.reduced_distance[v] : farthest;
    }

    profile.max_static_value += segment.amount;
    profile.segments.push_back(std::move(segment));
  }
  return profile;
}

Rat MaxStaticValue(const SspProfile& profile) {
  if (!profile.exhausted) {
    throw TruncatedProfileError(
        "profile was truncated; static max-flow value unknown");
  }
  return profile.max_static_value;
}

}  // namespace quickest
