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

#include "wordlaw/genpoly.hpp"

#include <stdexcept>

#include "wordlaw/errors.hpp"

namespace wordlaw {

GenPoly GenPoly::constant(std::size_t arity, const Rational& value) {
  GenPoly p(arity);
  p.add_term(Exponents(arity, 0), value);
  return p;
}

GenPoly GenPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::invalid_argument("variable index out of range");
  GenPoly p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void GenPoly::add_term(const Exponents& exponents, const Rational& coef) {
  if (exponents.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GenPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

GenPoly GenPoly::operator+(const GenPoly& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  GenPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

GenPoly GenPoly::operator*(const GenPoly& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  GenPoly out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GenPoly GenPoly::pow(std::uint32_t exponent) const {
  GenPoly result = constant(arity_, Rational(1));
  GenPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

GenPoly GenPoly::substitute(std::span<const GenPoly> replacements, std::size_t max_terms) const {
  if (replacements.size() != arity_) throw std::invalid_argument("one replacement per variable");
  GenPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    GenPoly term = constant(arity_, c);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      term = term * replacements[i].pow(e[i]);
      if (term.term_count() > max_terms)
        throw BudgetError("polynomial substitution exceeded the term budget");
    }
    out = out + term;
    if (out.term_count() > max_terms)
      throw BudgetError("polynomial substitution exceeded the term budget");
  }
  return out;
}

}  // namespace wordlaw
