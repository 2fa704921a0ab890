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

#ifndef QUICKEST_RATIONAL_H_
#define QUICKEST_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quickest {

// Exact rational number. GMP keeps the value canonical (positive denominator,
// reduced fraction) after every arithmetic operation.
//
// Beware of gmpxx expression templates: never bind an arithmetic expression
// to `auto`; spell out `Rat` instead.
using Rat = mpq_class;

Rat MakeRat(std::int64_t numerator, std::int64_t denominator = 1);

// Parses "p", "-p" or "p/q" (whitespace not allowed). The result is reduced.
// Throws std::invalid_argument on malformed text or a zero denominator.
Rat ParseRat(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rat& value);

// Decimal approximation for display, always with a fractional part ("5.0").
std::string ToDecimalString(const Rat& value, int significant_digits = 12);

double ToDouble(const Rat& value);

bool IsIntegral(const Rat& value);

// Least common multiple of two positive integers.
mpz_class Lcm(const mpz_class& a, const mpz_class& b);

}  // namespace quickest

#endif  // QUICKEST_RATIONAL_H_
