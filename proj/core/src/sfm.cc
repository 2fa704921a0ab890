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

#include "quickest/sfm.h"

#include <cstdint>
#include <string>

#include "quickest/errors.h"

namespace quickest {

SfmResult BruteForceMinimizer::Minimize(int ground_size,
                                        const SetFunction& f) const {
  if (ground_size > cap_) {
    throw CapExceededError("brute-force minimization over " +
                           std::to_string(ground_size) +
                           " terminals exceeds the cap of " +
                           std::to_string(cap_));
  }
  const std::uint64_t count = std::uint64_t{1} << ground_size;
  Rat best = f(TerminalSet(0));
  std::uint64_t intersection = 0;
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    Rat value = f(TerminalSet(bits));
    if (value < best) {
      best = value;
      intersection = bits;
    } else if (value == best) {
      intersection &= bits;
    }
  }
  // Minimizers of a submodular function are closed under intersection.
  if (f(TerminalSet(intersection)) != best) {
    throw InvariantViolation("set function is not submodular");
  }
  return {TerminalSet(intersection), best, SfmStrategyTag::kBruteForce};
}

SfmResult MinimizeD(const ProfileOracle& oracle, const Rat& theta,
                    const SfmConfig& config) {
  if (theta < 0) throw std::invalid_argument("negative time horizon");
  const int k = oracle.terminal_count();
  const SetFunction d = [&](TerminalSet set) { return oracle.D(set, theta); };
  if (k <= config.brute_force_cap) {
    return BruteForceMinimizer(config.brute_force_cap).Minimize(k, d);
  }
  if (config.plugged) {
    SfmResult result = config.plugged->Minimize(k, d);
    result.strategy = SfmStrategyTag::kPlugged;
    return result;
  }
  throw CapExceededError(std::to_string(k) +
                         " terminals exceed the brute-force cap of " +
                         std::to_string(config.brute_force_cap) +
                         " and no minimizer is plugged in");
}

bool IsFeasible(const ProfileOracle& oracle, const Rat& theta,
                const SfmConfig& config) {
  return MinimizeD(oracle, theta, config).value >= 0;
}

Rat EnvelopeD(const ProfileOracle& oracle, const Rat& theta,
              const SfmConfig& config) {
  return MinimizeD(oracle, theta, config).value;
}

}  // namespace quickest
