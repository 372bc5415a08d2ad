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

#include "dspec/phi.hpp"

#include <vector>

#include "dspec/errors.hpp"

namespace dspec {
namespace {

void validate(const PhiFamily& phi) {
  if (phi.coeff.sign() <= 0) {
    throw Error(ErrorKind::InvalidArgument, "phi coefficient must be positive");
  }
  const Rational twice = phi.exponent * Rational(2);
  if (phi.exponent.sign() < 0 || !twice.is_integer()) {
    throw Error(ErrorKind::InvalidArgument,
                "phi exponent must be a non-negative integer or half-integer");
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Integer pow2(unsigned long bits) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, bits);
  return out;
}

}  // namespace

PhiFamily PhiFamily::power(const Rational& coeff, const Rational& exponent) {
  PhiFamily phi{Kind::Power, coeff, exponent, 0};
  validate(phi);
  return phi;
}

PhiFamily PhiFamily::powerlog(const Rational& coeff, const Rational& exponent,
                              unsigned long log_power) {
  PhiFamily phi{Kind::PowerLog, coeff, exponent, log_power};
  validate(phi);
  return phi;
}

PhiFamily PhiFamily::parse(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts[0] == "power" && parts.size() == 3) {
    return power(parse_rational(parts[1]), parse_rational(parts[2]));
  }
  if (parts[0] == "powerlog" && parts.size() == 4) {
    const Integer r = parse_integer(parts[3]);
    if (r < 0) throw Error(ErrorKind::InvalidArgument, "log power must be >= 0");
    return powerlog(parse_rational(parts[1]), parse_rational(parts[2]),
                    r.get_ui());
  }
  throw Error(ErrorKind::InvalidArgument,
              "phi must be power:A:s or powerlog:A:s:r, got '" +
                  std::string(text) + "'");
}

std::string PhiFamily::describe() const {
  std::string out = kind == Kind::Power ? "power:" : "powerlog:";
  out += coeff.str() + ":" + exponent.str();
  if (kind == Kind::PowerLog) out += ":" + std::to_string(log_power);
  return out;
}

Enclosure sqrt_enclosure(const Integer& t, unsigned bits) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of a negative integer");
  const Integer scaled = t * pow2(2UL * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const Integer den = pow2(bits);
  if (root * root == scaled) return Enclosure(Rational::make(root, den));
  return Enclosure(Rational::make(root, den), Rational::make(root + 1, den));
}

Enclosure log2_enclosure(const Integer& t, unsigned bits) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "log2 of an integer < 1");
  const unsigned long e = mpz_sizeinbase(t.get_mpz_t(), 2) - 1;
  if (t == pow2(e)) return Enclosure(Rational(static_cast<long>(e)));

  // Fixed-point bit extraction of log2(t / 2^e) in [0, 1).  The lower chain
  // rounds every step down and the upper chain every step up, so the
  // extracted bit strings bracket the true value.
  const unsigned long frac = bits + 16;
  const Integer one = pow2(frac);
  const Integer two = one * 2;
  Integer lo = t * one;
  mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), e);
  Integer hi = t * one;
  mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), e);

  Integer lo_bits = 0;
  Integer hi_bits = 0;
  for (unsigned i = 0; i < bits; ++i) {
    lo *= lo;
    mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), frac);
    hi *= hi;
    mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), frac);
    lo_bits *= 2;
    hi_bits *= 2;
    if (lo >= two) {
      lo_bits += 1;
      mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), 1);
    }
    if (hi >= two) {
      hi_bits += 1;
      mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 1);
    }
  }
  const Integer den = pow2(bits);
  const Rational base(static_cast<long>(e));
  return Enclosure(base + Rational::make(lo_bits, den),
                   base + Rational::make(hi_bits + 1, den));
}

Enclosure PhiFamily::eval(const Integer& t, unsigned precision_bits) const {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "phi argument must be >= 1");
  const unsigned long whole = floor(exponent).get_ui();
  const bool half = !exponent.is_integer();
  const Rational t_whole(ipow(t, whole));

  Enclosure value(coeff / t_whole);
  if (half) {
    const unsigned bits =
        precision_bits + static_cast<unsigned>(mpz_sizeinbase(t.get_mpz_t(), 2));
    value = value * sqrt_enclosure(t, bits).reciprocal();
  }
  if (kind == Kind::PowerLog && log_power > 0) {
    if (t < 2) {
      throw Error(ErrorKind::InvalidArgument, "powerlog phi needs t >= 2");
    }
    const Enclosure lg = log2_enclosure(t, precision_bits + 8);
    const Enclosure lg_pow(Rational(rpow(lg.lo(), log_power)),
                           Rational(rpow(lg.hi(), log_power)));
    value = value * lg_pow.reciprocal();
  }
  return value;
}

}  // namespace dspec
