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

#include "quickest/horizon.h"

#include <string>
#include <vector>

#include "quickest/errors.h"

namespace quickest {
namespace {

// A truncated profile only describes the function up to its last length.
void RequireCertified(const SspProfile& profile, const Rat& theta,
                      bool strictly_below) {
  if (profile.exhausted) return;
  const bool covered =
      !profile.segments.empty() &&
      (strictly_below ? profile.segments.back().length > theta
                      : profile.segments.back().length >= theta);
  if (!covered) {
    throw TruncatedProfileError("truncated profile cannot certify theta = " +
                                ToString(theta));
  }
}

}  // namespace

Rat OTheta(const SspProfile& profile, const Rat& theta) {
  if (theta < 0) throw std::invalid_argument("negative time horizon");
  // Unknown paths are at least as long as the last known one and contribute
  // nothing up to that length.
  RequireCertified(profile, theta, /*strictly_below=*/false);
  Rat value = 0;
  for (const SspSegment& segment : profile.segments) {
    if (segment.length > theta) break;
    value += segment.amount * (theta - segment.length);
  }
  return value;
}

Rat DTheta(const SspProfile& profile, const SupplyVector& supply,
           TerminalSet set, const Rat& theta) {
  return OTheta(profile, theta) - SupplyOfSet(supply, set);
}

Rat CutLeft(const SspProfile& profile, const Rat& theta) {
  if (theta <= 0) {
    throw std::invalid_argument("left derivative needs theta > 0");
  }
  RequireCertified(profile, theta, /*strictly_below=*/false);
  Rat slope = 0;
  for (const SspSegment& segment : profile.segments) {
    if (segment.length >= theta) break;
    slope += segment.amount;
  }
  return slope;
}

Rat CutRight(const SspProfile& profile, const Rat& theta) {
  if (theta < 0) throw std::invalid_argument("negative time horizon");
  RequireCertified(profile, theta, /*strictly_below=*/true);
  Rat slope = 0;
  for (const SspSegment& segment : profile.segments) {
    if (segment.length > theta) break;
    slope += segment.amount;
  }
  return slope;
}

Rat ZeroOf(const SspProfile& profile, const SupplyVector& supply,
           TerminalSet set) {
  const Rat target = SupplyOfSet(supply, set);
  if (target <= 0) return Rat(0);
  if (profile.segments.empty()) {
    if (!profile.exhausted) {
      throw TruncatedProfileError("empty truncated profile");
    }
    throw InfeasibleForeverError(
        "a terminal subset with positive net supply " + ToString(target) +
        " cannot reach any sink outside it");
  }

  // On [length_i, length_{i+1}] the function rises with slope amount_1 + ...
  // + amount_i.
  Rat value = 0;
  Rat slope = 0;
  Rat position = profile.segments.front().length;
  for (const SspSegment& segment : profile.segments) {
    value += slope * (segment.length - position);
    position = segment.length;
    if (value >= target) return Rat(position - (value - target) / slope);
    slope += segment.amount;
  }
  if (!profile.exhausted) {
    throw TruncatedProfileError("zero lies beyond the truncated profile");
  }
  return Rat(position + (target - value) / slope);
}

std::vector<Breakpoint> Breakpoints(const SspProfile& profile) {
  std::vector<Breakpoint> result;
  for (const SspSegment& segment : profile.segments) {
    if (!result.empty() && result.back().theta == segment.length) continue;
    result.push_back({segment.length, segment.certificate});
  }
  return result;
}

}  // namespace quickest
