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

#ifndef DSPEC_PHI_HPP_
#define DSPEC_PHI_HPP_

#include <string>
#include <string_view>

#include "dspec/numerics.hpp"

namespace dspec {

// Target approximation functions Phi(t) that can be enclosed exactly at
// integer arguments:
//   power(A, s)        A * t^(-s)
//   powerlog(A, s, r)  A * t^(-s) * (log2 t)^(-r)
// with A > 0, s a non-negative integer or half-integer and r >= 0.
struct PhiFamily {
  enum class Kind { Power, PowerLog };

  Kind kind = Kind::Power;
  Rational coeff{1};
  Rational exponent{2};
  unsigned long log_power = 0;

  static PhiFamily power(const Rational& coeff, const Rational& exponent);
  static PhiFamily powerlog(const Rational& coeff, const Rational& exponent,
                            unsigned long log_power);
  // "power:A:s" or "powerlog:A:s:r".
  static PhiFamily parse(std::string_view text);
  std::string describe() const;

  // Sound enclosure of Phi(t); irrational parts (half-integer powers and the
  // logarithm) are resolved to roughly `precision_bits` relative bits.
  Enclosure eval(const Integer& t, unsigned precision_bits = 128) const;

  friend bool operator==(const PhiFamily&, const PhiFamily&) = default;
};

// Enclosure of log2(t) for t >= 1 of width at most 2^-bits.
Enclosure log2_enclosure(const Integer& t, unsigned bits);
// Enclosure of sqrt(t) for t >= 0 of width at most 2^-bits.
Enclosure sqrt_enclosure(const Integer& t, unsigned bits);

}  // namespace dspec

#endif  // DSPEC_PHI_HPP_
