// Copyright 2026 The dspec Authors
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

#ifndef DSPEC_NUMERICS_HPP_
#define DSPEC_NUMERICS_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace dspec {

using Integer = mpz_class;

// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT

  // Throws ErrorKind::InvalidArgument when den == 0.
  static Rational make(const Integer& num, const Integer& den);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return from_raw(-value_); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "p/q" always, including integers ("3/1").
  std::string str() const;

  static Rational from_raw(mpq_class value);

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// x^e for e >= 0; integer powers of rationals.
Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// Nearest integer; exact half ties go to the even neighbour.
Integer nearest_integer(const Rational& x);

// Decimal integer with optional sign. Rejects exponents, decimals and blanks.
Integer parse_integer(std::string_view text);
// "p/q" or a decimal integer. Decimal fractions like "0.5" are rejected.
Rational parse_rational(std::string_view text);
std::string to_decimal_string(const Integer& value);

enum class Rounding { Down, Up };
// Scientific notation with `digits` significant digits, rounded toward
// -infinity (Down) or +infinity (Up).  Zero prints as "0".
std::string to_scientific(const Rational& x, int digits, Rounding mode);

// Closed interval [lo, hi] with exact rational endpoints.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
  // Throws ErrorKind::InvalidArgument when lo > hi.
  Enclosure(const Rational& lo, const Rational& hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return a + (-b);
  }
  friend Enclosure operator+(const Enclosure& a, const Rational& s) {
    return Enclosure(a.lo_ + s, a.hi_ + s);
  }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

  Enclosure scale(const Rational& s) const;
  Enclosure abs() const;
  // Throws ErrorKind::InvalidArgument if 0 lies in the interval.
  Enclosure reciprocal() const;

  static Enclosure hull(const Enclosure& a, const Enclosure& b);

 private:
  Rational lo_;
  Rational hi_;
};

inline Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  return a * b.reciprocal();
}

}  // namespace dspec

#endif  // DSPEC_NUMERICS_HPP_
