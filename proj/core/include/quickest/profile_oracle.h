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

#ifndef QUICKEST_PROFILE_ORACLE_H_
#define QUICKEST_PROFILE_ORACLE_H_

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "quickest/network.h"
#include "quickest/rational.h"
#include "quickest/ssp.h"

namespace quickest {

// An immutable instance together with a memo of SSP profiles per terminal
// subset. Each profile is computed at most once; concurrent readers share
// the cache, insertions take the lock exclusively.
class ProfileOracle {
 public:
  // Throws InputError listing the violations if the instance is invalid.
  explicit ProfileOracle(Instance instance);

  ProfileOracle(const ProfileOracle&) = delete;
  ProfileOracle& operator=(const ProfileOracle&) = delete;

  const Instance& instance() const { return instance_; }
  const FlowNetwork& network() const { return instance_.network; }
  const SupplyVector& supply() const { return instance_.supply; }
  int terminal_count() const { return instance_.network.terminal_count(); }

  const SspProfile& Profile(TerminalSet set) const;

  Rat D(TerminalSet set, const Rat& theta) const;
  Rat Zero(TerminalSet set) const;

  std::size_t cached_profiles() const;

 private:
  Instance instance_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<SspProfile>>
      cache_;
};

}  // namespace quickest

#endif  // QUICKEST_PROFILE_ORACLE_H_
