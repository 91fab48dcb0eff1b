// Copyright 2026 The wordlaw Authors.
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

#include "wordlaw/rational.hpp"

#include <random>
#include <vector>

#include "doctest.h"

using namespace wordlaw;

namespace {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(3200000000ull, 1) == BigInt("3200000000"));
  // Pascal identity on a random patch.
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = rng() % 60 + 1;
    std::uint64_t k = rng() % n;
    CHECK(binomial(n, k) + binomial(n, k + 1) == binomial(n + 1, k + 1));
  }
}

TEST_CASE("multinomial against factorials") {
  std::vector<std::uint64_t> parts{3, 2};
  CHECK(multinomial(7, parts) ==
        factorial(7) / (factorial(3) * factorial(2) * factorial(2)));
  std::vector<std::uint64_t> too_big{5, 4};
  CHECK(multinomial(7, too_big) == 0);
  CHECK(multinomial(7, std::vector<std::uint64_t>{}) == 1);
}

TEST_CASE("parse_rational exact forms") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("1e-30") == power_of_ten(-30));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational(" 1/3 ") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal_string(Rational(1, 4), 50) == "0.25");
  CHECK(to_decimal_string(Rational(1, 2), 1) == "0.5");
  CHECK(to_decimal_string(Rational(0), 50) == "0");
  CHECK(to_decimal_string(Rational(4591, 128), 50) == "35.8671875");
  CHECK(to_decimal_string(Rational(-3, 8), 50) == "-0.375");
  CHECK(to_decimal_string(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal_string(Rational(2, 3), 5) == "0.66667");
  CHECK(to_decimal_string(Rational(999, 1000), 2) == "1");
  CHECK(to_decimal_string(power_of_ten(-30), 10) == "1e-30");
  CHECK(to_decimal_string(Rational(123456), 3) == "123000");
  CHECK(to_decimal_string(Rational(1, 1) * Rational(BigInt(1) << 20), 10) == "1048576");
}

TEST_CASE("rendering round-trips through parse for terminating decimals") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    // Random dyadic-times-power-of-five rationals terminate in decimal.
    long num = static_cast<long>(rng() % 100000) - 50000;
    int twos = static_cast<int>(rng() % 8);
    int fives = static_cast<int>(rng() % 6);
    Rational value(num);
    value /= Rational(BigInt(1) << twos);
    for (int f = 0; f < fives; ++f) value /= 5;
    CHECK(parse_rational(to_decimal_string(value, 60)) == value);
  }
}

TEST_CASE("rational_pow") {
  CHECK(rational_pow(Rational(1, 2), 20) == Rational(1, 1048576));
  CHECK(rational_pow(Rational(3, 7), 0) == 1);
}
