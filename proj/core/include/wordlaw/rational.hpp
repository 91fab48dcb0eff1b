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

#ifndef WORDLAW_RATIONAL_HPP_
#define WORDLAW_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace wordlaw {

// All probabilities and distribution masses in this library are exact
// rationals. The alternating sums behind the exact distributions cancel
// catastrophically in floating point (intermediate terms exceed 10^100 at
// n = 1600, |w| = 5, while every mass is <= 1), so nothing inside the
// formulas is ever rounded.
using BigInt = mpz_class;
using Rational = mpq_class;

/// binom(n, k) over big integers; 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Multinomial coefficient n! / (parts_1! ... parts_j! (n - sum parts)!).
/// Returns 0 when the parts do not fit into n. Computed by factored
/// cancellation (products of binomials), never via factorial tables.
BigInt multinomial(std::uint64_t n, std::span<const std::uint64_t> parts);

/// base^exponent for exact rationals.
Rational rational_pow(const Rational& base, std::uint64_t exponent);

/// 10^-digits as an exact rational (convenience for epsilon flags).
Rational power_of_ten(int exponent);

/// Parses "3/4", "0.25", "1e-30", "2.5e-3", "7" ... into an exact rational.
/// Decimal inputs are converted exactly (0.25 -> 1/4). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders a rational as a decimal string with the given number of
/// significant digits (round half away from zero). Values that need a
/// decimal exponent outside [-4, digits] are rendered in scientific
/// notation. The output is deterministic.
std::string to_decimal_string(const Rational& value, int significant_digits = 50);

/// Nearest double (GMP rounding).
double to_double(const Rational& value);

}  // namespace wordlaw

#endif  // WORDLAW_RATIONAL_HPP_
