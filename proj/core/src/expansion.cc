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

#include "quickest/expansion.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "quickest/errors.h"
#include "quickest/max_flow.h"

namespace quickest {
namespace {

std::int64_t ToInt64(const mpz_class& value, const char* what) {
  if (!value.fits_slong_p()) {
    throw CapExceededError(std::string(what) + " does not fit 64 bits");
  }
  return value.get_si();
}

struct ExpandedFlow {
  TimeExpandedNetwork expanded;
  MaxFlow solver;
  Rat value;
  Rat required;
  std::int64_t scale = 1;
};

ExpandedFlow SolveExpanded(const FlowNetwork& network,
                           const SupplyVector& supply, const Rat& theta,
                           std::int64_t node_cap) {
  if (theta < 0) throw std::invalid_argument("negative time horizon");
  ScaledNetwork scaled = ScaleToIntegral(network, theta);
  TimeExpandedNetwork expanded =
      BuildTimeExpanded(scaled.network, supply, scaled.horizon, node_cap);
  MaxFlow solver(expanded.node_count);
  for (const auto& arc : expanded.arcs) {
    solver.AddArc(arc.tail, arc.head, arc.capacity);
  }
  Rat value = solver.Solve(expanded.super_source, expanded.super_sink);
  return {std::move(expanded), std::move(solver), std::move(value),
          TotalSupply(network, supply), scaled.scale};
}

// Integral of a piecewise-constant rate over [0, upto].
Rat VolumeUntil(const ArcRate& rate, const Rat& upto) {
  Rat volume = 0;
  for (std::size_t i = 0; i < rate.pieces.size(); ++i) {
    const RatePiece& piece = rate.pieces[i];
    if (piece.time >= upto) break;
    if (piece.rate == 0) continue;
    const bool last = i + 1 == rate.pieces.size();
    Rat end = last || rate.pieces[i + 1].time > upto ? upto
                                                     : rate.pieces[i + 1].time;
    Rat start = piece.time < 0 ? Rat(0) : piece.time;
    if (end > start) volume += piece.rate * (end - start);
  }
  return volume;
}

}  // namespace

ScaledNetwork ScaleBy(const FlowNetwork& network, const Rat& theta,
                      std::int64_t scale) {
  if (scale <= 0) throw InputError("scale must be positive");
  const Rat q(static_cast<long>(scale));
  ScaledNetwork scaled;
  scaled.scale = scale;
  scaled.network = network;
  for (Arc& arc : scaled.network.arcs) {
    arc.transit *= q;
    arc.capacity /= q;
    if (!IsIntegral(arc.transit)) {
      throw InputError("scale does not make transit times integral");
    }
  }
  Rat horizon = theta * q;
  if (!IsIntegral(horizon)) {
    throw InputError("scale does not make the horizon integral");
  }
  scaled.horizon = ToInt64(horizon.get_num(), "scaled horizon");
  return scaled;
}

ScaledNetwork ScaleToIntegral(const FlowNetwork& network, const Rat& theta) {
  mpz_class q = theta.get_den();
  for (const Arc& arc : network.arcs) q = Lcm(q, arc.transit.get_den());
  return ScaleBy(network, theta, ToInt64(q, "time scale"));
}

TimeExpandedNetwork BuildTimeExpanded(const FlowNetwork& network,
                                      const SupplyVector& supply,
                                      std::int64_t horizon,
                                      std::int64_t node_cap) {
  if (horizon < 0) throw InputError("negative horizon");
  const std::int64_t n = network.node_count;
  if (n > 0 && horizon + 1 > node_cap / n) {
    const long double wanted = (static_cast<long double>(horizon) + 1) * n;
    throw CapExceededError(
        "time-expanded network needs " +
        std::to_string(static_cast<long long>(wanted)) +
        " nodes, cap is " + std::to_string(node_cap));
  }

  TimeExpandedNetwork expanded;
  expanded.horizon = horizon;
  expanded.base_node_count = static_cast<int>(n);
  const std::int64_t layered = (horizon + 1) * n;
  expanded.super_source = static_cast<NodeId>(layered);
  expanded.super_sink = static_cast<NodeId>(layered + 1);
  expanded.node_count = static_cast<int>(layered + 2);

  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    const Arc& arc = network.arcs[a];
    if (!IsIntegral(arc.transit)) {
      throw InputError("time expansion needs integral transit times");
    }
    const std::int64_t tau = ToInt64(arc.transit.get_num(), "transit time");
    for (std::int64_t t = 0; t + tau < horizon; ++t) {
      expanded.arcs.push_back({expanded.NodeAt(arc.tail, t),
                               expanded.NodeAt(arc.head, t + tau),
                               arc.capacity, a, t});
      ++expanded.movement_arc_count;
    }
  }

  // Nothing can pile up beyond the total supply.
  const Rat storage = TotalSupply(network, supply);
  for (NodeId v = 0; v < n; ++v) {
    for (std::int64_t t = 0; t < horizon; ++t) {
      expanded.arcs.push_back(
          {expanded.NodeAt(v, t), expanded.NodeAt(v, t + 1), storage, -1, t});
    }
  }
  for (int i = 0; i < network.terminal_count(); ++i) {
    const NodeId v = network.terminal_node(i);
    if (network.is_source_terminal(i)) {
      expanded.arcs.push_back({expanded.super_source, expanded.NodeAt(v, 0),
                               supply.values[i], -1, 0});
    } else {
      expanded.arcs.push_back({expanded.NodeAt(v, horizon),
                               expanded.super_sink, Rat(-supply.values[i]), -1,
                               horizon});
    }
  }
  return expanded;
}

bool FeasibleByExpansion(const FlowNetwork& network, const SupplyVector& supply,
                         const Rat& theta, std::int64_t node_cap) {
  ExpandedFlow result = SolveExpanded(network, supply, theta, node_cap);
  return result.value == result.required;
}

FlowOverTime ExtractTransshipment(const FlowNetwork& network,
                                  const SupplyVector& supply, const Rat& theta,
                                  std::int64_t node_cap) {
  ExpandedFlow result = SolveExpanded(network, supply, theta, node_cap);
  if (result.value != result.required) {
    throw InputError("infeasible horizon " + ToString(theta) + ": only " +
                     ToString(result.value) + " of " +
                     ToString(result.required) + " units can be shipped");
  }

  const std::int64_t steps = result.expanded.horizon;
  const Rat q(static_cast<long>(result.scale));
  std::vector<std::vector<Rat>> rates(network.arc_count(),
                                      std::vector<Rat>(steps, Rat(0)));
  for (std::size_t i = 0; i < result.expanded.arcs.size(); ++i) {
    const auto& arc = result.expanded.arcs[i];
    if (arc.base_arc < 0) continue;
    // Volume x over a step of length 1/q is rate x*q.
    rates[arc.base_arc][arc.layer] += result.solver.Flow(static_cast<int>(i)) * q;
  }

  FlowOverTime flow;
  flow.horizon = theta;
  flow.arcs.resize(network.arc_count());
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    auto& pieces = flow.arcs[a].pieces;
    pieces.push_back({Rat(0), steps > 0 ? rates[a][0] : Rat(0)});
    for (std::int64_t t = 1; t < steps; ++t) {
      if (rates[a][t] != rates[a][t - 1]) {
        pieces.push_back({Rat(static_cast<long>(t)) / q, rates[a][t]});
      }
    }
    if (pieces.back().rate != 0) {
      pieces.push_back({Rat(static_cast<long>(steps)) / q, Rat(0)});
    }
  }
  return flow;
}

std::vector<std::string> VerifyFlow(const FlowNetwork& network,
                                    const SupplyVector& supply,
                                    const FlowOverTime& flow,
                                    const Rat& theta) {
  std::vector<std::string> violations;
  if (static_cast<int>(flow.arcs.size()) != network.arc_count()) {
    violations.push_back("flow has " + std::to_string(flow.arcs.size()) +
                         " arcs, network has " +
                         std::to_string(network.arc_count()));
    return violations;
  }

  std::set<Rat> events = {Rat(0), theta};
  for (ArcIndex a = 0; a < network.arc_count(); ++a) {
    const Arc& arc = network.arcs[a];
    const auto& pieces = flow.arcs[a].pieces;
    const std::string where = "arc " + std::to_string(a) + ": ";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const RatePiece& piece = pieces[i];
      const bool last = i + 1 == pieces.size();
      if (!last && !(piece.time < pieces[i + 1].time)) {
        violations.push_back(where + "piece times not increasing");
      }
      if (piece.rate < 0) {
        violations.push_back(where + "negative rate at time " +
                             ToString(piece.time));
      }
      if (piece.rate > arc.capacity) {
        violations.push_back(where + "capacity exceeded at time " +
                             ToString(piece.time));
      }
      if (piece.rate != 0) {
        if (piece.time < 0) {
          violations.push_back(where + "flow before time 0");
        }
        if (last || pieces[i + 1].time > theta - arc.transit) {
          violations.push_back(where + "flow arrives after the horizon");
        }
      }
      events.insert(piece.time);
      events.insert(Rat(piece.time + arc.transit));
    }
  }
  if (!violations.empty()) return violations;

  std::vector<Rat> initial(network.node_count, Rat(0));
  std::vector<int> role(network.node_count, 0);  // 1 source, -1 sink
  for (int i = 0; i < network.terminal_count(); ++i) {
    const NodeId v = network.terminal_node(i);
    role[v] = network.is_source_terminal(i) ? 1 : -1;
    if (role[v] == 1) initial[v] = supply.values[i];
  }

  for (const Rat& t : events) {
    if (t < 0 || t > theta) continue;
    std::vector<Rat> excess = initial;
    for (ArcIndex a = 0; a < network.arc_count(); ++a) {
      const Arc& arc = network.arcs[a];
      excess[arc.tail] -= VolumeUntil(flow.arcs[a], t);
      if (t >= arc.transit) {
        excess[arc.head] +=
            VolumeUntil(flow.arcs[a], Rat(t - arc.transit));
      }
    }
    for (NodeId v = 0; v < network.node_count; ++v) {
      if (excess[v] < 0) {
        violations.push_back("node " + std::to_string(v) +
                             " sends more than it holds at time " +
                             ToString(t));
      }
    }
    if (t != theta) continue;
    for (int i = 0; i < network.terminal_count(); ++i) {
      const NodeId v = network.terminal_node(i);
      if (role[v] == 1 && excess[v] != 0) {
        violations.push_back("source " + std::to_string(v) + " keeps " +
                             ToString(excess[v]) + " of its supply");
      }
      if (role[v] == -1 && excess[v] != -supply.values[i]) {
        violations.push_back("sink " + std::to_string(v) + " receives " +
                             ToString(excess[v]) + " instead of " +
                             ToString(Rat(-supply.values[i])));
      }
    }
    for (NodeId v = 0; v < network.node_count; ++v) {
      if (role[v] == 0 && excess[v] != 0) {
        violations.push_back("node " + std::to_string(v) + " still stores " +
                             ToString(excess[v]) + " at the horizon");
      }
    }
  }
  return violations;
}

}  // namespace quickest
