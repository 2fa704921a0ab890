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

#ifndef QUICKEST_ERRORS_H_
#define QUICKEST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace quickest {

// Some subset S has positive b(S) but no path from its sources to the sinks
// outside S, so no finite time horizon exists.
class InfeasibleForeverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource bound (brute-force terminal cap, time-expanded node
// cap) would be exceeded.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated SSP profile cannot certify a value at the requested horizon.
class TruncatedProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input documents and parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant of an algorithm failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quickest

#endif  // QUICKEST_ERRORS_H_
