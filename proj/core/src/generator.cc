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

#include "quickest/generator.h"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quickest/errors.h"

namespace quickest {
namespace {

// Modulo reduction on raw engine output: the standard distributions are
// implementation-defined and would break cross-platform reproducibility.
int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

std::vector<int> Permutation(std::mt19937_64& rng, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[UniformInt(rng, 0, i)]);
  }
  return order;
}

// True if some terminal subset has positive net supply but no path from its
// sources to the sinks outside it. For a source set A the worst subset is A
// plus every sink reachable from A.
bool HasUnservableSubset(const Instance& instance) {
  const FlowNetwork& network = instance.network;
  const int n = network.node_count;
  const int source_count = static_cast<int>(network.sources.size());
  if (source_count > 20) return false;

  std::vector<std::vector<NodeId>> out(n);
  for (const Arc& arc : network.arcs) {
    if (arc.capacity > 0) out[arc.tail].push_back(arc.head);
  }
  std::vector<int> sink_index(n, -1);
  for (std::size_t j = 0; j < network.sinks.size(); ++j) {
    sink_index[network.sinks[j]] = static_cast<int>(j);
  }
  std::vector<std::uint64_t> reachable_sinks(source_count, 0);
  for (int i = 0; i < source_count; ++i) {
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack = {network.sources[i]};
    seen[network.sources[i]] = true;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      if (sink_index[v] >= 0) {
        reachable_sinks[i] |= std::uint64_t{1} << sink_index[v];
      }
      for (NodeId w : out[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }

  for (std::uint64_t a = 1; a < (std::uint64_t{1} << source_count); ++a) {
    Rat net = 0;
    std::uint64_t sinks = 0;
    for (int i = 0; i < source_count; ++i) {
      if ((a >> i) & 1U) {
        net += instance.supply.values[i];
        sinks |= reachable_sinks[i];
      }
    }
    for (std::size_t j = 0; j < network.sinks.size(); ++j) {
      if ((sinks >> j) & 1U) net += instance.supply.values[source_count + j];
    }
    if (net > 0) return true;
  }
  return false;
}

Instance Draw(const GeneratorParams& p, std::mt19937_64& rng) {
  Instance instance;
  FlowNetwork& network = instance.network;
  network.node_count = p.nodes;

  const std::vector<int> terminals = Permutation(rng, p.nodes);
  const int source_count = UniformInt(rng, 1, p.terminals - 1);
  for (int i = 0; i < p.terminals; ++i) {
    (i < source_count ? network.sources : network.sinks)
        .push_back(terminals[i]);
  }

  auto add_arc = [&](NodeId tail, NodeId head) {
    network.arcs.push_back(
        {tail, head, Rat(UniformInt(rng, 1, p.max_capacity)),
         Rat(UniformInt(rng, 0, p.max_transit))});
  };

  // In-tree towards the first sink.
  std::vector<int> order = Permutation(rng, p.nodes);
  std::iter_swap(order.begin(),
                 std::find(order.begin(), order.end(), network.sinks.front()));
  for (int i = 1; i < p.nodes; ++i) {
    add_arc(order[i], order[UniformInt(rng, 0, i - 1)]);
  }
  for (int extra = p.nodes - 1; extra < p.arcs; ++extra) {
    const NodeId tail = UniformInt(rng, 0, p.nodes - 1);
    NodeId head = UniformInt(rng, 0, p.nodes - 2);
    if (head >= tail) ++head;
    add_arc(tail, head);
  }

  std::vector<int> magnitude(p.terminals);
  for (int& m : magnitude) m = UniformInt(rng, 1, p.max_supply);
  auto side_sum = [&](bool sources) {
    int total = 0;
    for (int i = 0; i < p.terminals; ++i) {
      if ((i < source_count) == sources) total += magnitude[i];
    }
    return total;
  };
  for (;;) {
    const int diff = side_sum(true) - side_sum(false);
    if (diff == 0) break;
    const bool shrink_sources = diff > 0;
    std::vector<int> candidates;
    for (int i = 0; i < p.terminals; ++i) {
      if ((i < source_count) == shrink_sources && magnitude[i] > 0) {
        candidates.push_back(i);
      }
    }
    const int pick =
        candidates[UniformInt(rng, 0, static_cast<int>(candidates.size()) - 1)];
    magnitude[pick] -=
        UniformInt(rng, 1, std::min(magnitude[pick], diff > 0 ? diff : -diff));
  }
  for (int i = 0; i < p.terminals; ++i) {
    instance.supply.values.emplace_back(i < source_count ? magnitude[i]
                                                         : -magnitude[i]);
  }
  return instance;
}

}  // namespace

Instance GenerateInstance(const GeneratorParams& params) {
  if (params.nodes < 2) throw InputError("need at least 2 nodes");
  if (params.terminals < 2) throw InputError("need at least 2 terminals");
  if (params.terminals > std::min(params.nodes, kMaxTerminals)) {
    throw InputError("terminal count " + std::to_string(params.terminals) +
                     " exceeds min(nodes, " + std::to_string(kMaxTerminals) +
                     ")");
  }
  if (params.arcs < params.nodes - 1) {
    throw InputError("need at least nodes-1 arcs for connectivity");
  }
  if (params.max_capacity < 1 || params.max_supply < 1 ||
      params.max_transit < 0) {
    throw InputError("capacity and supply bounds must be positive, transit "
                     "bound nonnegative");
  }

  std::mt19937_64 rng(params.seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Instance instance = Draw(params, rng);
    if (!HasUnservableSubset(instance)) return instance;
  }
  throw InputError("could not draw a servable instance for seed " +
                   std::to_string(params.seed));
}

GeneratorParams CorpusParams(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x5DEECE66DULL);
  GeneratorParams p;
  p.nodes = UniformInt(rng, 4, 10);
  p.terminals = UniformInt(rng, 2, std::min(6, p.nodes));
  p.arcs = UniformInt(rng, p.nodes - 1, 25);
  p.max_capacity = 10;
  p.max_transit = 10;
  p.max_supply = 30;
  p.seed = seed;
  return p;
}

}  // namespace quickest
