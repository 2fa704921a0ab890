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

#include "quickest/solver.h"

#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "quickest/errors.h"
#include "quickest/horizon.h"

namespace quickest {
namespace {

// Memoizes d-minimizations within one solve; both solvers revisit horizons
// (theta_{i+1} == theta'_i, or a jump target already probed in Line 5).
class EnvelopeMemo {
 public:
  EnvelopeMemo(const ProfileOracle& oracle, const SfmConfig& config)
      : oracle_(oracle), config_(config) {}

  const SfmResult& At(const Rat& theta) {
    auto it = memo_.find(theta);
    if (it == memo_.end()) {
      it = memo_.emplace(theta, MinimizeD(oracle_, theta, config_)).first;
    }
    return it->second;
  }

 private:
  const ProfileOracle& oracle_;
  const SfmConfig& config_;
  std::map<Rat, SfmResult> memo_;
};

void CheckProgress(const std::vector<IterationRecord>& trace,
                   std::unordered_set<std::uint64_t>& seen_sets) {
  const IterationRecord& last = trace.back();
  if (!(last.theta < last.next_theta)) {
    throw InvariantViolation("time horizon did not strictly increase at "
                             "iteration " + std::to_string(last.index));
  }
  if (!seen_sets.insert(last.set.bits()).second) {
    throw InvariantViolation("minimizer repeated at iteration " +
                             std::to_string(last.index));
  }
}

std::int64_t MaxJump(int terminal_count) {
  return terminal_count >= 2 ? JumpSet(terminal_count).back() : 0;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kSimple ? "simple" : "jumps";
}

std::string_view IterationClassName(IterationClass label) {
  switch (label) {
    case IterationClass::kI1:
      return "I1";
    case IterationClass::kI2:
      return "I2";
    case IterationClass::kI3:
      return "I3";
  }
  return "?";
}

std::vector<std::int64_t> JumpSet(int terminal_count) {
  if (terminal_count < 2) {
    throw std::invalid_argument("jump set needs at least two terminals");
  }
  // Smallest e with 2^e >= k^2/4, i.e. 4 * 2^e >= k^2.
  const std::int64_t k_squared =
      static_cast<std::int64_t>(terminal_count) * terminal_count;
  std::vector<std::int64_t> jumps = {1};
  while (4 * jumps.back() < k_squared) jumps.push_back(2 * jumps.back());
  return jumps;
}

SolveResult SolveNewtonSimple(const ProfileOracle& oracle,
                              const SolverOptions& options) {
  SolveResult result;
  result.algorithm = Algorithm::kSimple;
  result.terminal_count = oracle.terminal_count();
  EnvelopeMemo envelope(oracle, options.sfm);
  std::unordered_set<std::uint64_t> seen_sets;

  Rat theta = 0;
  for (;;) {
    const SfmResult minimum = envelope.At(theta);
    if (minimum.value >= 0) break;

    IterationRecord record;
    record.index = static_cast<int>(result.trace.size());
    record.theta = theta;
    record.set = minimum.minimizer;
    record.d_at_theta = minimum.value;
    record.theta_prime = oracle.Zero(minimum.minimizer);
    record.next_theta = record.theta_prime;
    result.trace.push_back(std::move(record));
    CheckProgress(result.trace, seen_sets);
    theta = result.trace.back().next_theta;
  }
  result.theta_star = theta;
  return result;
}

SolveResult SolveNewtonJumps(const ProfileOracle& oracle,
                             const SolverOptions& options) {
  SolveResult result;
  result.algorithm = Algorithm::kJumps;
  result.terminal_count = oracle.terminal_count();
  EnvelopeMemo envelope(oracle, options.sfm);
  std::unordered_set<std::uint64_t> seen_sets;
  std::vector<std::int64_t> jumps;

  Rat theta = 0;
  for (;;) {
    const SfmResult minimum = envelope.At(theta);
    if (minimum.value >= 0) break;
    // d(theta) < 0 forces b != 0, hence a source and a sink.
    if (jumps.empty()) jumps = JumpSet(oracle.terminal_count());

    IterationRecord record;
    record.index = static_cast<int>(result.trace.size());
    record.theta = theta;
    record.set = minimum.minimizer;
    record.d_at_theta = minimum.value;
    record.theta_prime = oracle.Zero(minimum.minimizer);
    record.envelope_at_prime = envelope.At(record.theta_prime).value;
    record.next_theta = record.theta_prime;

    if (record.envelope_at_prime < 0) {
      record.cut_at_prime =
          CutLeft(oracle.Profile(record.set), record.theta_prime);
      if (record.cut_at_prime <= 0) {
        throw InvariantViolation("cut at theta' is not positive at iteration " +
                                 std::to_string(record.index));
      }
      const Rat step = -record.envelope_at_prime / record.cut_at_prime;
      auto candidate = [&](std::int64_t j) {
        return Rat(record.theta_prime + Rat(static_cast<long>(j)) * step);
      };
      auto infeasible = [&](std::int64_t j) {
        return envelope.At(candidate(j)).value < 0;
      };

      // Largest index into `jumps` whose candidate is still infeasible.
      int best = -1;
      if (options.linear_jump_scan) {
        for (int idx = 0; idx < static_cast<int>(jumps.size()); ++idx) {
          if (infeasible(jumps[idx])) best = idx;
        }
      } else {
        // d is nondecreasing, so infeasible candidates form a prefix of J.
        int lo = -1;
        int hi = static_cast<int>(jumps.size());
        while (hi - lo > 1) {
          const int mid = lo + (hi - lo) / 2;
          if (infeasible(jumps[mid])) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        best = lo;
      }
      if (best >= 0) {
        record.jump = jumps[best];
        record.next_theta = candidate(record.jump);
      }
    }

    result.trace.push_back(std::move(record));
    CheckProgress(result.trace, seen_sets);
    theta = result.trace.back().next_theta;
  }
  result.theta_star = theta;
  return result;
}

std::uint64_t SubsetCount(int terminal_count, int brute_force_cap) {
  if (terminal_count > brute_force_cap) {
    throw CapExceededError("enumerating subsets of " +
                           std::to_string(terminal_count) +
                           " terminals exceeds the cap of " +
                           std::to_string(brute_force_cap));
  }
  return std::uint64_t{1} << terminal_count;
}

Rat ThetaStarBruteForce(const ProfileOracle& oracle, int brute_force_cap) {
  const std::uint64_t count =
      SubsetCount(oracle.terminal_count(), brute_force_cap);
  Rat best = 0;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Rat zero = oracle.Zero(TerminalSet(bits));
    if (zero > best) best = zero;
  }
  return best;
}

std::vector<IterationClass> ClassifyIterations(const SolveResult& result,
                                               const ProfileOracle& oracle,
                                               int brute_force_cap) {
  std::vector<IterationClass> labels;
  if (result.trace.empty()) return labels;

  const std::uint64_t count =
      SubsetCount(oracle.terminal_count(), brute_force_cap);
  std::set<Rat> breakpoints;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    for (const Breakpoint& bp : Breakpoints(oracle.Profile(TerminalSet(bits)))) {
      breakpoints.insert(bp.theta);
    }
  }

  const std::int64_t max_jump = MaxJump(result.terminal_count);
  for (const IterationRecord& record : result.trace) {
    if (max_jump > 0 && record.jump == max_jump) {
      labels.push_back(IterationClass::kI1);
      continue;
    }
    auto it = breakpoints.lower_bound(record.theta);
    if (it != breakpoints.end() && *it <= record.next_theta) {
      labels.push_back(IterationClass::kI2);
    } else {
      labels.push_back(IterationClass::kI3);
    }
  }
  return labels;
}

std::vector<HalvingViolation> CheckHalving(const SolveResult& result) {
  std::vector<HalvingViolation> violations;
  const std::int64_t max_jump = MaxJump(result.terminal_count);
  const Rat& theta_star = result.theta_star;
  for (std::size_t i = 0; i + 1 < result.trace.size(); ++i) {
    const IterationRecord& record = result.trace[i];
    if (max_jump > 0 && record.jump == max_jump) continue;
    if ((theta_star - record.theta) / 2 > record.next_theta - record.theta) {
      violations.push_back({record.index, false});
    }
    if (record.jump > 0 && (theta_star - record.theta_prime) / 2 >
                               record.next_theta - record.theta_prime) {
      violations.push_back({record.index, true});
    }
  }
  return violations;
}

}  // namespace quickest
