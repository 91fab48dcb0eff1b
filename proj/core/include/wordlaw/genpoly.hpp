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

#ifndef WORDLAW_GENPOLY_HPP_
#define WORDLAW_GENPOLY_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wordlaw/rational.hpp"

namespace wordlaw {

/// A multivariate polynomial with exact rational coefficients, used as a
/// finite generating function in the count variables z_1..z_l. Terms are
/// kept in a sorted map so iteration order is deterministic.
class GenPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit GenPoly(std::size_t arity) : arity_(arity) {}

  static GenPoly constant(std::size_t arity, const Rational& value);
  static GenPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Adds coef * z^exponents; drops the term if the total cancels to zero.
  void add_term(const Exponents& exponents, const Rational& coef);
  /// Coefficient of z^exponents (zero when absent).
  Rational coefficient(const Exponents& exponents) const;

  GenPoly operator+(const GenPoly& other) const;
  GenPoly operator*(const GenPoly& other) const;
  GenPoly pow(std::uint32_t exponent) const;

  /// Polynomial composition: substitutes replacements[i] for variable i.
  /// Throws BudgetError if any intermediate exceeds max_terms.
  GenPoly substitute(std::span<const GenPoly> replacements, std::size_t max_terms) const;

  friend bool operator==(const GenPoly& a, const GenPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t arity_;
  TermMap terms_;
};

}  // namespace wordlaw

#endif  // WORDLAW_GENPOLY_HPP_
