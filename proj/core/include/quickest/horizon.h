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

#ifndef QUICKEST_HORIZON_H_
#define QUICKEST_HORIZON_H_

#include <cstdint>
#include <vector>

#include "quickest/network.h"
#include "quickest/rational.h"
#include "quickest/ssp.h"

namespace quickest {

// Evaluations of o^theta(S), d^theta(S) = o^theta(S) - b(S) and their
// one-sided derivatives, read off an SspProfile. All exact.

// o^theta(S). Requires theta >= 0.
Rat OTheta(const SspProfile& profile, const Rat& theta);

// d^theta(S) = o^theta(S) - b(S).
Rat DTheta(const SspProfile& profile, const SupplyVector& supply,
           TerminalSet set, const Rat& theta);

// Left-hand derivative of theta -> d^theta(S): total amount on paths strictly
// shorter than theta. This is cut^theta(S). Requires theta > 0.
Rat CutLeft(const SspProfile& profile, const Rat& theta);

// Right-hand derivative: total amount on paths of length <= theta.
Rat CutRight(const SspProfile& profile, const Rat& theta);

// min{theta >= 0 : d^theta(S) >= 0}. Returns 0 when b(S) <= 0. Throws
// InfeasibleForeverError when b(S) > 0 and no S-path exists at all, since
// then d^theta(S) = -b(S) < 0 for every theta.
Rat ZeroOf(const SspProfile& profile, const SupplyVector& supply,
           TerminalSet set);

struct Breakpoint {
  Rat theta;
  std::vector<std::int8_t> certificate;
};

// Distinct path lengths of the profile, ascending, each with the certificate
// of the first path of that length.
std::vector<Breakpoint> Breakpoints(const SspProfile& profile);

}  // namespace quickest

#endif  // QUICKEST_HORIZON_H_
