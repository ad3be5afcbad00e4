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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "chorefair/errors.hpp"

namespace chorefair {

// Exact signed rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator) {
    if (denominator == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Accepts "p", "-p" or "p/q" with decimal integers p and q > 0.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidInput("empty rational literal");
    const auto slash = s.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
      std::size_t start = 0;
      if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
        start = 1;
      }
      if (part.size() == start) return false;
      for (std::size_t k = start; k < part.size(); ++k) {
        if (part[k] < '0' || part[k] > '9') return false;
      }
      return true;
    };
    if (slash == std::string::npos) {
      if (!check_int(s, true)) {
        throw InvalidInput("malformed rational literal '" + s + "'");
      }
      return Rational(mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s)));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false)) {
      throw InvalidInput("malformed rational literal '" + s + "'");
    }
    mpz_class d(den);
    if (d == 0) throw InvalidInput("rational with zero denominator '" + s + "'");
    return Rational(mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num), d));
  }

  // "p" when the denominator is one, otherwise "p/q".
  std::string str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_{0};
};

// 2^exponent as an exact rational.
inline Rational pow2(unsigned exponent) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, exponent);
  return Rational(mpq_class(z));
}

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace chorefair
