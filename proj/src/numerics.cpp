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

#include "dspec/numerics.hpp"

#include <algorithm>
#include <cstdio>

#include "dspec/errors.hpp"

namespace dspec {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Range: return "range";
    case ErrorKind::Depth: return "depth";
    case ErrorKind::ConstructionIntegrity: return "construction-integrity";
    case ErrorKind::IndecisiveEnclosure: return "indecisive-enclosure";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::CertificateRefused: return "certificate-refused";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::VerificationFailure: return "verification-failure";
  }
  return "error";
}

Rational Rational::make(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_raw(std::move(q));
}

Rational Rational::from_raw(mpq_class value) {
  Rational r;
  r.value_ = std::move(value);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned long exponent) {
  return Rational::make(ipow(base.num(), exponent), ipow(base.den(), exponent));
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

Integer nearest_integer(const Rational& x) {
  const Rational shifted = x + Rational::make(1, 2);
  Integer f = floor(shifted);
  if (shifted.is_integer() && mpz_odd_p(f.get_mpz_t())) {
    f -= 1;
  }
  return f;
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorKind::InvalidArgument,
                  "expected a decimal integer, got '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(pos));
  Integer value(digits, 10);
  return text[0] == '-' ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational::make(parse_integer(text.substr(0, slash)),
                        parse_integer(text.substr(slash + 1)));
}

std::string to_decimal_string(const Integer& value) { return value.get_str(); }

std::string to_scientific(const Rational& x, int digits, Rounding mode) {
  if (x.sign() == 0) return "0";
  const bool negative = x.sign() < 0;
  const Rational ax = abs(x);
  const Integer low = ipow(10, digits - 1);
  const Integer high = ipow(10, digits);

  long exponent = static_cast<long>(mpz_sizeinbase(ax.num().get_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(ax.den().get_mpz_t(), 10));
  auto scaled = [&](long e) {
    const long shift = digits - 1 - e;
    return shift >= 0 ? ax * Rational(ipow(10, shift))
                      : ax / Rational(ipow(10, -shift));
  };
  Rational m = scaled(exponent);
  while (m < Rational(low)) m = scaled(--exponent);
  while (m >= Rational(high)) m = scaled(++exponent);

  // Rounding toward -inf on a negative value grows the magnitude.
  const bool round_magnitude_up = (mode == Rounding::Up) != negative;
  Integer mantissa = round_magnitude_up ? ceil(m) : floor(m);
  if (mantissa == high) {
    mantissa /= 10;
    ++exponent;
  }
  std::string d = mantissa.get_str();
  std::string out = negative ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", exponent < 0 ? '-' : '+',
                exponent < 0 ? -exponent : exponent);
  return out + buf;
}

Enclosure::Enclosure(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi) {
  if (hi_ < lo_) {
    throw Error(ErrorKind::InvalidArgument,
                "enclosure with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
  }
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_,
                         a.hi_ * b.hi_};
  return Enclosure(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Enclosure Enclosure::scale(const Rational& s) const {
  if (s.sign() >= 0) return Enclosure(lo_ * s, hi_ * s);
  return Enclosure(hi_ * s, lo_ * s);
}

Enclosure Enclosure::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Enclosure(Rational(0), max(-lo_, hi_));
}

Enclosure Enclosure::reciprocal() const {
  if (contains(Rational(0))) {
    throw Error(ErrorKind::InvalidArgument, "reciprocal of an interval containing 0");
  }
  return Enclosure(Rational(1) / hi_, Rational(1) / lo_);
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

}  // namespace dspec
