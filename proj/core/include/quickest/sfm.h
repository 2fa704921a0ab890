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

#ifndef QUICKEST_SFM_H_
#define QUICKEST_SFM_H_

#include <functional>
#include <memory>
#include <string_view>

#include "quickest/network.h"
#include "quickest/profile_oracle.h"
#include "quickest/rational.h"

namespace quickest {

enum class SfmStrategyTag { kBruteForce, kPlugged };

struct SfmResult {
  TerminalSet minimizer;
  Rat value;
  SfmStrategyTag strategy = SfmStrategyTag::kBruteForce;
};

using SetFunction = std::function<Rat(TerminalSet)>;

// Minimizes a submodular set function over all subsets of {0..k-1}.
// Implementations must return the minimal minimizer (the intersection of all
// minimizers), so that traces are deterministic.
class SubmodularMinimizer {
 public:
  virtual ~SubmodularMinimizer() = default;
  virtual SfmResult Minimize(int ground_size, const SetFunction& f) const = 0;
  virtual std::string_view name() const = 0;
};

inline constexpr int kDefaultBruteForceCap = 20;

// Enumerates all 2^k subsets. Throws CapExceededError for k > cap.
class BruteForceMinimizer : public SubmodularMinimizer {
 public:
  explicit BruteForceMinimizer(int cap = kDefaultBruteForceCap) : cap_(cap) {}

  SfmResult Minimize(int ground_size, const SetFunction& f) const override;
  std::string_view name() const override { return "brute-force"; }
  int cap() const { return cap_; }

 private:
  int cap_;
};

// Chooses how d^theta is minimized: brute force up to `brute_force_cap`
// terminals, the plugged strategy (if any) above it.
struct SfmConfig {
  int brute_force_cap = kDefaultBruteForceCap;
  std::shared_ptr<const SubmodularMinimizer> plugged;
};

// argmin over S of d^theta(S), as the minimal minimizer.
SfmResult MinimizeD(const ProfileOracle& oracle, const Rat& theta,
                    const SfmConfig& config = {});

// theta is feasible iff d^theta(S) >= 0 for all S.
bool IsFeasible(const ProfileOracle& oracle, const Rat& theta,
                const SfmConfig& config = {});

// Lower envelope d(theta) = min over S of d^theta(S).
Rat EnvelopeD(const ProfileOracle& oracle, const Rat& theta,
              const SfmConfig& config = {});

}  // namespace quickest

#endif  // QUICKEST_SFM_H_
