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

#ifndef GREEDY_RATIONAL_H_
#define GREEDY_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace greedy {

// Exact arbitrary-precision rational. Always kept in canonical form.
using Rational = mpq_class;

Rational MakeRational(long numerator, long denominator = 1);

// Parses "p", "p/q" or a finite decimal such as "0.25" (converted exactly).
// Throws ParseError.
Rational ParseRational(std::string_view text);

// "p/q", or "p" for integers.
std::string ToString(const Rational& value);

// Decimal rendering with the given number of significant digits. Derived
// output only; never parsed back.
std::string ToDecimal(const Rational& value, int significant_digits = 15);

double ToDouble(const Rational& value);

Rational Pow(const Rational& base, unsigned exponent);

// A rational extended by +infinity. Used for capacities and for ratios whose
// denominator vanishes.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtendedRational(long value) : value_(value) {}                  // NOLINT

  static ExtendedRational Infinity() {
    ExtendedRational result;
    result.infinite_ = true;
    return result;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Precondition: is_finite().
  const Rational& value() const;

  // "inf" or the rational rendering.
  std::string ToString() const;
  static ExtendedRational Parse(std::string_view text);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  bool infinite_ = false;
  Rational value_;
};

}  // namespace greedy

#endif  // GREEDY_RATIONAL_H_
