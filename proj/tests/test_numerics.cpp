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

#include <random>

#include "doctest.h"
#include "dspec/errors.hpp"
#include "dspec/numerics.hpp"
#include "support.hpp"

using namespace dspec;

TEST_CASE("rationals are reduced with a positive denominator") {
  CHECK(Rational::make(33, 256).str() == "33/256");
  CHECK(Rational::make(4, 8) == Rational::make(1, 2));
  CHECK(Rational::make(-2, -4).str() == "1/2");
  CHECK(Rational::make(3, -6).str() == "-1/2");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(7).str() == "7/1");
  CHECK_THROWS_AS(Rational::make(1, 0), Error);
}

TEST_CASE("nearest integer rounds half to even") {
  CHECK(nearest_integer(Rational::make(33, 256)) == 0);
  CHECK(nearest_integer(Rational::make(1, 2)) == 0);
  CHECK(nearest_integer(Rational::make(3, 2)) == 2);
  CHECK(nearest_integer(Rational::make(-1, 2)) == 0);
  CHECK(nearest_integer(Rational::make(-3, 2)) == -2);
  CHECK(nearest_integer(Rational::make(-5, 3)) == -2);
  const Rational x = Rational(270335) - Rational::make(1, testing::pow2(65));
  CHECK(nearest_integer(x) == 270335);
}

TEST_CASE("floor and ceil") {
  CHECK(floor(Rational::make(-7, 2)) == -4);
  CHECK(ceil(Rational::make(-7, 2)) == -3);
  CHECK(floor(Rational(5)) == 5);
  CHECK(ceil(Rational::make(1, 3)) == 1);
}

TEST_CASE("parsing accepts only exact forms") {
  CHECK(parse_rational("1/2") == Rational::make(1, 2));
  CHECK(parse_rational("-9/10") == Rational::make(-9, 10));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_integer("255") == 255);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_integer("1e3"), Error);
  CHECK_THROWS_AS(parse_integer("12a"), Error);
}

TEST_CASE("enclosure examples") {
  CHECK(Enclosure(Rational::make(-3, 4), Rational::make(1, 2)).abs() ==
        Enclosure(Rational(0), Rational::make(3, 4)));
  const Enclosure sum = Enclosure(Rational::make(1, 8)) +
                        Enclosure(Rational::make(1, 256), Rational::make(2, 256));
  CHECK(sum == Enclosure(Rational::make(33, 256), Rational::make(34, 256)));
  const Enclosure scaled =
      Enclosure(Rational::make(1, 16), Rational::make(1, 8)).scale(Rational(-16)).abs();
  CHECK(scaled == Enclosure(Rational(1), Rational(2)));
  CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), Error);
  CHECK_THROWS_AS(Enclosure(Rational(-1), Rational(1)).reciprocal(), Error);
}

TEST_CASE("decimal rendering rounds outward") {
  const Rational third = Rational::make(1, 3);
  CHECK(to_scientific(third, 5, Rounding::Down) == "3.3333e-01");
  CHECK(to_scientific(third, 5, Rounding::Up) == "3.3334e-01");
  CHECK(to_scientific(-third, 5, Rounding::Down) == "-3.3334e-01");
  CHECK(to_scientific(Rational(0), 5, Rounding::Up) == "0");
  CHECK(to_scientific(Rational(1000), 3, Rounding::Down) == "1.00e+03");
  CHECK(to_decimal_string(testing::pow2(34)) == "17179869184");
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  return Rational::make(num(rng), den(rng));
}

Enclosure random_enclosure(std::mt19937_64& rng) {
  const Rational a = random_rational(rng);
  const Rational b = random_rational(rng);
  return Enclosure(min(a, b), max(a, b));
}

Rational random_point(const Enclosure& e, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> t(0, 64);
  return e.lo() + e.width() * Rational::make(t(rng), 64);
}

}  // namespace

TEST_CASE("property: enclosure operations are sound on sampled points") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const Enclosure a = random_enclosure(rng);
    const Enclosure b = random_enclosure(rng);
    const Rational p = random_point(a, rng);
    const Rational q = random_point(b, rng);
    const Rational s = random_rational(rng);
    CHECK((a + b).contains(p + q));
    CHECK((a - b).contains(p - q));
    CHECK((a * b).contains(p * q));
    CHECK((-a).contains(-p));
    CHECK(a.scale(s).contains(p * s));
    CHECK(a.abs().contains(abs(p)));
    CHECK(Enclosure::hull(a, b).contains(p));
    CHECK(Enclosure::hull(a, b).contains(q));
    if (b.lo().sign() > 0 || b.hi().sign() < 0) {
      CHECK((a / b).contains(p / q));
    }
  }
}

TEST_CASE("property: rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = random_rational(rng);
    const Rational y = random_rational(rng);
    CHECK((x + y) - y == x);
    if (y.sign() != 0) CHECK((x * y) / y == x);
    const Integer m = nearest_integer(x);
    CHECK(abs(x - Rational(m)) <= Rational::make(1, 2));
    // Shifting by an even integer shifts the nearest integer.
    CHECK(nearest_integer(x + Rational(18)) == m + 18);
    CHECK(Rational(floor(x)) <= x);
    CHECK(x < Rational(floor(x) + 1));
  }
}
