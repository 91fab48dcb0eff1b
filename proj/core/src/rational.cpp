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

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace wordlaw {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt result;
  if (k > n) return 0;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

BigInt multinomial(std::uint64_t n, std::span<const std::uint64_t> parts) {
  std::uint64_t total = 0;
  for (std::uint64_t p : parts) {
    total += p;
    if (total > n) return 0;
  }
  BigInt result = 1;
  std::uint64_t remaining = n;
  for (std::uint64_t p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

Rational rational_pow(const Rational& base, std::uint64_t exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  // base is canonical, so num^e / den^e already is.
  return result;
}

Rational power_of_ten(int exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) return Rational(p);
  return Rational(1) / Rational(p);
}

namespace {

bool parse_uint_digits(std::string_view text, std::size_t& pos, std::string& out) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    out.push_back(text[pos]);
    ++pos;
  }
  return pos > start;
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) malformed(text);

  // Fraction form "a/b".
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string int_digits;
  std::string frac_digits;
  bool any = parse_uint_digits(text, pos, int_digits);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    any = parse_uint_digits(text, pos, frac_digits) || any;
  }
  if (!any) malformed(text);

  long exponent10 = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    std::string exp_digits;
    if (!parse_uint_digits(text, pos, exp_digits) || exp_digits.size() > 6) malformed(text);
    exponent10 = std::strtol(exp_digits.c_str(), nullptr, 10);
    if (exp_neg) exponent10 = -exponent10;
  }
  if (pos != text.size()) malformed(text);

  BigInt mantissa(int_digits.empty() && frac_digits.empty() ? "0" : int_digits + frac_digits, 10);
  long scale = exponent10 - static_cast<long>(frac_digits.size());
  Rational value(mantissa);
  if (scale > 0) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    value *= Rational(p);
  } else if (scale < 0) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
    value /= Rational(p);
  }
  if (negative) value = -value;
  value.canonicalize();
  return value;
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be >= 1");
  if (value == 0) return "0";

  BigInt num = abs(value.get_num());
  const BigInt& den = value.get_den();

  // Decimal exponent e with 10^e <= |value| < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto cmp_pow10 = [&](long k) {
    // sign of |value| - 10^k
    BigInt lhs = num, rhs = den;
    if (k >= 0) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= p;
    } else {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= p;
    }
    return cmp(lhs, rhs);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;

  // digits = round(|value| * 10^(digits-1-e)), then place the point.
  long shift = significant_digits - 1 - e;
  BigInt scaled_num = num, scaled_den = den;
  if (shift >= 0) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    scaled_num *= p;
  } else {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    scaled_den *= p;
  }
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  // Round half away from zero (value is positive here).
  if (cmp(r * 2, scaled_den) >= 0) ++q;

  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // Rounding overflowed into an extra digit (e.g. 999 -> 1000).
    ++e;
    digits.pop_back();
  }

  // Strip trailing zeros but keep at least one digit.
  std::size_t last = digits.find_last_not_of('0');
  digits.erase(last + 1);

  std::string out;
  if (sgn(value) < 0) out.push_back('-');
  if (e >= -4 && e < significant_digits) {
    if (e >= 0) {
      if (static_cast<long>(digits.size()) <= e) digits.append(static_cast<std::size_t>(e) + 1 - digits.size(), '0');
      out += digits.substr(0, static_cast<std::size_t>(e) + 1);
      if (digits.size() > static_cast<std::size_t>(e) + 1) {
        out += '.';
        out += digits.substr(static_cast<std::size_t>(e) + 1);
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      out += digits;
    }
  } else {
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
      out += '.';
      out += digits.substr(1);
    }
    out += 'e';
    out += (e < 0 ? "-" : "+");
    out += std::to_string(std::abs(e));
  }
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace wordlaw
