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

#ifndef QUICKEST_MAX_FLOW_H_
#define QUICKEST_MAX_FLOW_H_

#include <vector>

#include "quickest/network.h"
#include "quickest/rational.h"

namespace quickest {

// Dinic's algorithm over exact rational capacities. Arcs are stored in
// forward/reverse pairs; arc 2i is the i-th added arc.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count);

  // Returns the index of the new arc, usable with Flow().
  int AddArc(NodeId tail, NodeId head, const Rat& capacity);

  Rat Solve(NodeId source, NodeId sink);

  const Rat& Flow(int arc) const { return flow_[2 * arc]; }
  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(head_.size() / 2); }

 private:
  bool BuildLevels(NodeId source, NodeId sink);

  int node_count_;
  std::vector<NodeId> head_;
  std::vector<Rat> capacity_;
  std::vector<Rat> flow_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace quickest

#endif  // QUICKEST_MAX_FLOW_H_
