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

#include "leakgame/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "leakgame/error.hpp"

namespace leakgame {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool IsInteger(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return AllDigits(s);
}

mpz_class ParseInteger(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
  return p;
}

[[noreturn]] void BadText(std::string_view text, const char* why) {
  ThrowInvalid("cannot parse rational \"" + std::string(text) + "\": " + why);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) ThrowInvalid("rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)),
                     mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) BadText(text, "empty");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!IsInteger(num) || !IsInteger(den)) BadText(text, "malformed fraction");
    mpz_class d = ParseInteger(den);
    if (d == 0) BadText(text, "zero denominator");
    mpq_class q(ParseInteger(num), d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  // Decimal literal: sign? digits? ('.' digits?)? ([eE] sign? digits)?
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_text = s.substr(e + 1);
    if (!IsInteger(exp_text) || exp_text.size() > 6) {
      BadText(text, "malformed exponent");
    }
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) BadText(text, "no digits");
  if ((!int_part.empty() && !AllDigits(int_part)) ||
      (!frac_part.empty() && !AllDigits(frac_part))) {
    BadText(text, "malformed decimal");
  }
  const std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  mpq_class q;
  if (exponent >= 0) {
    q = mpq_class(num * PowerOfTen(static_cast<unsigned long>(exponent)));
  } else {
    q = mpq_class(num, PowerOfTen(static_cast<unsigned long>(-exponent)));
  }
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::ToString() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::ToDecimal(int digits) const {
  if (digits < 0) digits = 0;
  const mpz_class scale = PowerOfTen(static_cast<unsigned long>(digits));
  mpz_class num = abs(value_.get_num()) * scale;
  const mpz_class& den = value_.get_den();
  mpz_class q = num / den;
  const mpz_class r = num - q * den;
  if (2 * r >= den) ++q;

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(value_) < 0 && q != 0;
  return negative ? "-" + body : body;
}

double Rational::ToDouble() const { return value_.get_d(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.IsZero()) ThrowInvalid("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Abs(const Rational& r) { return r.Sign() < 0 ? -r : r; }

}  // namespace leakgame
