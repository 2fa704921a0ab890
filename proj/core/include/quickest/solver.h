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

#ifndef QUICKEST_SOLVER_H_
#define QUICKEST_SOLVER_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "quickest/network.h"
#include "quickest/profile_oracle.h"
#include "quickest/rational.h"
#include "quickest/sfm.h"

namespace quickest {

// One pass through the while-loop of a Newton-type solver.
struct IterationRecord {
  int index = 0;
  Rat theta;               // theta_i, infeasible
  TerminalSet set;         // S_i, minimal minimizer of d^{theta_i}
  Rat d_at_theta;          // d(theta_i) = d^{theta_i}(S_i) < 0
  Rat theta_prime;         // smallest zero of theta -> d^theta(S_i)
  Rat envelope_at_prime;   // d(theta'_i); only filled by the jump solver
  Rat cut_at_prime;        // cut^{theta'_i}(S_i); only filled by the jump solver
  std::int64_t jump = 0;   // j_i; 0 when next_theta == theta_prime
  Rat next_theta;          // theta_{i+1}
};

enum class Algorithm { kSimple, kJumps };

std::string_view AlgorithmName(Algorithm algorithm);

struct SolveResult {
  Rat theta_star;
  std::vector<IterationRecord> trace;
  Algorithm algorithm = Algorithm::kSimple;
  int terminal_count = 0;
};

struct SolverOptions {
  SfmConfig sfm;
  // Evaluate the long-jump candidates one by one instead of by binary search.
  bool linear_jump_scan = false;
};

// Jump multipliers {1, 2, 4, ..., 2^ceil(log2(k^2/4))}. Requires k >= 2.
std::vector<std::int64_t> JumpSet(int terminal_count);

// Discrete-Newton iteration: theta_{i+1} is the zero of d^theta(S_i) where
// S_i minimizes d^{theta_i}.
SolveResult SolveNewtonSimple(const ProfileOracle& oracle,
                              const SolverOptions& options = {});

// Generalized Newton iteration with long jumps: after moving to theta'_i,
// jump further along rays of slope cut/j for the largest j in the jump set
// that keeps the horizon infeasible.
SolveResult SolveNewtonJumps(const ProfileOracle& oracle,
                             const SolverOptions& options = {});

// theta* = max over all subsets S of min{theta : d^theta(S) >= 0}, by
// enumeration. Throws CapExceededError above `brute_force_cap` terminals.
Rat ThetaStarBruteForce(const ProfileOracle& oracle,
                        int brute_force_cap = kDefaultBruteForceCap);

enum class IterationClass { kI1, kI2, kI3 };

std::string_view IterationClassName(IterationClass label);

// I1: the maximal jump was taken. I2: otherwise, some subset's d-curve has a
// breakpoint inside [theta_i, theta_{i+1}]. I3: everything else.
std::vector<IterationClass> ClassifyIterations(
    const SolveResult& result, const ProfileOracle& oracle,
    int brute_force_cap = kDefaultBruteForceCap);

struct HalvingViolation {
  int index = 0;
  bool from_theta_prime = false;  // the theta'_i inequality failed
};

// For every non-final iteration whose jump is not maximal:
//   (theta* - theta_i)/2 <= theta_{i+1} - theta_i, and, when j_i > 0,
//   (theta* - theta'_i)/2 <= theta_{i+1} - theta'_i.
// Only guaranteed for traces of SolveNewtonJumps.
std::vector<HalvingViolation> CheckHalving(const SolveResult& result);

// Number of subsets of the terminal set, guarded by the brute-force cap.
std::uint64_t SubsetCount(int terminal_count, int brute_force_cap);

}  // namespace quickest

#endif  // QUICKEST_SOLVER_H_
