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

#include "quickest/profile_oracle.h"

#include <mutex>
#include <string>

#include "quickest/errors.h"
#include "quickest/horizon.h"

namespace quickest {

ProfileOracle::ProfileOracle(Instance instance)
    : instance_(std::move(instance)) {
  const std::vector<std::string> violations = ValidateInstance(instance_);
  if (!violations.empty()) {
    std::string message = "invalid instance:";
    for (const std::string& v : violations) message += " " + v + ";";
    throw InputError(message);
  }
}

const SspProfile& ProfileOracle::Profile(TerminalSet set) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(set.bits());
    if (it != cache_.end()) return *it->second;
  }
  auto profile = std::make_unique<SspProfile>(
      ComputeProfile(instance_.network, set));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(set.bits(), std::move(profile));
  return *it->second;
}

Rat ProfileOracle::D(TerminalSet set, const Rat& theta) const {
  return DTheta(Profile(set), instance_.supply, set, theta);
}

Rat ProfileOracle::Zero(TerminalSet set) const {
  return ZeroOf(Profile(set), instance_.supply, set);
}

std::size_t ProfileOracle::cached_profiles() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

}  // namespace quickest
