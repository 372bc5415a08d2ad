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

#include "doctest.h"
#include "dspec/errors.hpp"
#include "dspec/phi.hpp"
#include "support.hpp"

using namespace dspec;

TEST_CASE("phi descriptors parse and describe") {
  const PhiFamily p = PhiFamily::parse("power:1/2:2");
  CHECK(p.kind == PhiFamily::Kind::Power);
  CHECK(p.coeff == Rational::make(1, 2));
  CHECK(p.exponent == Rational(2));
  CHECK(PhiFamily::parse(p.describe()) == p);
  const PhiFamily q = PhiFamily::parse("powerlog:1:2:1");
  CHECK(q.kind == PhiFamily::Kind::PowerLog);
  CHECK(q.log_power == 1);
  CHECK(PhiFamily::parse(q.describe()) == q);
  CHECK_THROWS_AS(PhiFamily::parse("power:0.5:2"), Error);
  CHECK_THROWS_AS(PhiFamily::parse("exp:1:2"), Error);
  CHECK_THROWS_AS(PhiFamily::parse("power:-1:2"), Error);
}

TEST_CASE("integer powers evaluate exactly") {
  const Enclosure v = PhiFamily::parse("power:1/2:2").eval(Integer(256));
  CHECK(v.is_point());
  CHECK(v.lo() == Rational::make(1, 131072));
  CHECK(PhiFamily::parse("power:1:3").eval(Integer(2)).lo() == Rational::make(1, 8));
}

TEST_CASE("half-integer powers and logarithms are enclosed") {
  const Enclosure r = PhiFamily::parse("power:1:5/2").eval(Integer(2));
  // 2^{-5/2} = 0.1767766952966368...
  CHECK(r.lo() < Rational::make(1767766953, 10000000000L));
  CHECK(r.hi() > Rational::make(1767766952, 10000000000L));
  CHECK(r.width() < Rational::make(1, testing::pow2(100)));

  const Enclosure l = log2_enclosure(Integer(3), 64);
  CHECK(l.lo() < Rational::make(1584962501, 1000000000));
  CHECK(l.hi() > Rational::make(1584962500, 1000000000));
  CHECK(log2_enclosure(Integer(1024), 64) == Enclosure(Rational(10)));

  const Enclosure s = sqrt_enclosure(Integer(2), 64);
  CHECK(s.lo() * s.lo() <= Rational(2));
  CHECK(s.hi() * s.hi() >= Rational(2));
}

TEST_CASE("power-log decays faster than t^-n from t = 3") {
  const PhiFamily phi = PhiFamily::powerlog(Rational(1), Rational(2), 1);
  for (long t = 3; t < 200; ++t) {
    const Enclosure v = phi.eval(Integer(t));
    CHECK(v.hi() < Rational::make(1, Integer(t * t)));
  }
}
