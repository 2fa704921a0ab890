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

#include "quickest/rational.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace quickest {
namespace {

bool IsIntegerLiteral(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat MakeRat(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rat value(mpz_class(static_cast<long>(numerator)),
            mpz_class(static_cast<long>(denominator)));
  value.canonicalize();
  return value;
}

Rat ParseRat(std::string_view text) {
  const std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den.front() == '-') {
    throw std::invalid_argument("not a rational: \"" + std::string(text) +
                                "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: \"" + std::string(text) +
                                "\"");
  }
  Rat value(n, d);
  value.canonicalize();
  return value;
}

std::string ToString(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string ToDecimalString(const Rat& value, int significant_digits) {
  std::ostringstream out;
  out << std::setprecision(significant_digits) << value.get_d();
  std::string text = out.str();
  if (text.find_first_of(".en") == std::string::npos) text += ".0";
  return text;
}

double ToDouble(const Rat& value) { return value.get_d(); }

bool IsIntegral(const Rat& value) { return value.get_den() == 1; }

mpz_class Lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace quickest
