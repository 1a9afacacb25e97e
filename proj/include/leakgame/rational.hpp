// Copyright 2026 The leakgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKGAME_RATIONAL_HPP_
#define LEAKGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace leakgame {

// Exact fraction with arbitrary-precision numerator and denominator. Always
// kept in canonical form: denominator > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "a/b" (b != 0), an integer, or a decimal literal such as
  // "-0.0137" or "1.5e-3". Decimals convert exactly. Throws Error on bad text.
  static Rational Parse(std::string_view text);

  // "a/b", or "a" when the denominator is 1.
  std::string ToString() const;
  // Decimal rendering rounded half away from zero to `digits` places.
  std::string ToDecimal(int digits = 10) const;
  double ToDouble() const;

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }
  std::string Numerator() const { return value_.get_num().get_str(); }
  std::string Denominator() const { return value_.get_den().get_str(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

Rational Abs(const Rational& r);

}  // namespace leakgame

#endif  // LEAKGAME_RATIONAL_HPP_
