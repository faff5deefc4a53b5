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

#include "greedy/rational.h"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "greedy/errors.h"

namespace greedy {

Rational MakeRational(long numerator, long denominator) {
  if (denominator == 0) throw ParameterError("rational with zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational ParseInteger(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!IsDigits(s)) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  if (negative) z = -z;
  return Rational(z);
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = ParseInteger(text.substr(0, slash), text);
    Rational den = ParseInteger(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (!frac_part.empty() && !IsDigits(frac_part)) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    bool negative = !int_part.empty() && int_part.front() == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    Rational whole = ParseInteger(digits, text);
    Rational frac = 0;
    if (!frac_part.empty()) {
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
      frac = Rational(mpz_class(std::string(frac_part), 10), scale);
      frac.canonicalize();
    }
    Rational r = negative ? Rational(whole - frac) : Rational(whole + frac);
    r.canonicalize();
    return r;
  }
  return ParseInteger(text, text);
}

std::string ToString(const Rational& value) { return value.get_str(); }

std::string ToDecimal(const Rational& value, int significant_digits) {
  std::ostringstream out;
  out.precision(significant_digits);
  out << ToDouble(value);
  return out.str();
}

double ToDouble(const Rational& value) { return value.get_d(); }

Rational Pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

const Rational& ExtendedRational::value() const {
  assert(!infinite_);
  return value_;
}

std::string ExtendedRational::ToString() const {
  return infinite_ ? std::string("inf") : greedy::ToString(value_);
}

ExtendedRational ExtendedRational::Parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return Infinity();
  return ExtendedRational(ParseRational(text));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace greedy
