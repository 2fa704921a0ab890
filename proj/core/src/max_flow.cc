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

#include "quickest/max_flow.h"

#include <deque>
#include <vector>

namespace quickest {

MaxFlow::MaxFlow(int node_count)
    : node_count_(node_count), adjacency_(node_count) {}

int MaxFlow::AddArc(NodeId tail, NodeId head, const Rat& capacity) {
  const int index = static_cast<int>(head_.size() / 2);
  head_.push_back(head);
  capacity_.push_back(capacity);
  flow_.emplace_back(0);
  adjacency_[tail].push_back(2 * index);
  head_.push_back(tail);
  capacity_.emplace_back(0);
  flow_.emplace_back(0);
  adjacency_[head].push_back(2 * index + 1);
  return index;
}

bool MaxFlow::BuildLevels(NodeId source, NodeId sink) {
  level_.assign(node_count_, -1);
  level_[source] = 0;
  std::deque<NodeId> queue = {source};
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (int edge : adjacency_[v]) {
      const NodeId w = head_[edge];
      if (level_[w] < 0 && flow_[edge] < capacity_[edge]) {
        level_[w] = level_[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return level_[sink] >= 0;
}

Rat MaxFlow::Solve(NodeId source, NodeId sink) {
  Rat total = 0;
  if (source == sink) return total;
  std::vector<int> path;
  while (BuildLevels(source, sink)) {
    next_edge_.assign(node_count_, 0);
    for (;;) {
      // Walk the level graph; dead ends are pruned by clearing their level.
      path.clear();
      NodeId v = source;
      while (v != sink) {
        bool advanced = false;
        for (; next_edge_[v] < adjacency_[v].size(); ++next_edge_[v]) {
          const int edge = adjacency_[v][next_edge_[v]];
          const NodeId w = head_[edge];
          if (level_[w] == level_[v] + 1 && flow_[edge] < capacity_[edge]) {
            path.push_back(edge);
            v = w;
            advanced = true;
            break;
          }
        }
        if (advanced) continue;
        level_[v] = -1;
        if (path.empty()) break;
        v = head_[path.back() ^ 1];
        path.pop_back();
        ++next_edge_[v];
      }
      if (v != sink) break;

      Rat bottleneck = capacity_[path.front()] - flow_[path.front()];
      for (int edge : path) {
        Rat residual = capacity_[edge] - flow_[edge];
        if (residual < bottleneck) bottleneck = residual;
      }
      for (int edge : path) {
        flow_[edge] += bottleneck;
        flow_[edge ^ 1] -= bottleneck;
      }
      total += bottleneck;
    }
  }
  return total;
}

}  // namespace quickest
