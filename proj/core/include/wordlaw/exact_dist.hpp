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

#ifndef WORDLAW_EXACT_DIST_HPP_
#define WORDLAW_EXACT_DIST_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wordlaw/genpoly.hpp"
#include "wordlaw/rational.hpp"
#include "wordlaw/words.hpp"

namespace wordlaw {

/// The query object: which patterns, in how long a sample, under which
/// model, counted how.
struct OccurrenceSpec {
  std::vector<PartialWord> words;
  std::uint64_t n = 0;
  IIDModel model = IIDModel::fair_coin();
  CountingMode mode = CountingMode::kSliding;
};

enum class PmfMode { kExact, kTruncated };

/// Machine-checkable truncation certificate: every reported mass is within
/// point_error_bound of the exact value, and the mass outside the reported
/// support is at most tail_mass_bound. Both bounds are exact rationals.
struct TruncationCertificate {
  Rational epsilon;
  Rational point_error_bound;
  Rational tail_mass_bound;
};

/// A joint distribution of count vectors with exact rational masses.
/// Exact mode sums to exactly 1; truncated mode carries a certificate.
struct ExactPMF {
  std::vector<std::vector<std::uint64_t>> support;  // lexicographically sorted
  std::vector<Rational> mass;
  PmfMode mode = PmfMode::kExact;
  std::optional<TruncationCertificate> certificate;

  std::size_t dimension() const { return support.empty() ? 0 : support.front().size(); }
  Rational total_mass() const;
  /// Sum of s_coord^t * mass over the support (t = 0 gives total mass).
  Rational power_sum(unsigned t, std::size_t coord = 0) const;
  Rational mean(std::size_t coord = 0) const { return power_sum(1, coord); }
  /// Marginal law of one coordinate.
  ExactPMF marginal(std::size_t coord) const;
  /// Cumulative masses along a one-dimensional support.
  std::vector<Rational> cdf() const;
};

struct EvalOptions {
  PmfMode mode = PmfMode::kExact;
  Rational epsilon = power_of_ten(-30);
  // Exact enumeration walks the polytope {k >= s, sum m_i k_i <= n}; this
  // caps the number of visited terms.
  std::uint64_t term_budget = 100'000'000;
  // Cap on intermediate polynomial sizes in the chain transform.
  std::uint64_t poly_term_budget = 2'000'000;
};

/// Number of ways to place k nonoverlapping length-m words in a string of
/// length n: binom(n - mk + k, k); 0 when n - mk < 0.
BigInt allocation_count(std::uint64_t n, std::uint64_t m, std::uint64_t k);

/// Number of surjections {1..t} -> {1..s}.
BigInt surjection_count(std::uint64_t t, std::uint64_t s);

/// The exact joint law of sliding occurrence counts for a nonoverlapping
/// set of (partial) words, by the inclusion-exclusion alternating sum.
/// Throws OverlapError for overlapping inputs, BudgetError past the term
/// budget. n below every word length yields a point mass at the zero
/// vector. Truncated mode certifies every reported mass to within epsilon.
ExactPMF joint_pmf(const OccurrenceSpec& spec, const EvalOptions& options = {});

/// Exact mass at a single count vector (full alternating k-sum, no support
/// enumeration). Useful to spot-check truncated runs.
Rational joint_point_mass(const OccurrenceSpec& spec, std::span<const std::uint64_t> counts,
                          const EvalOptions& options = {});

/// The exact joint law for an increasing chain w_1 < w_2 < ... < w_l, via
/// the generating-function substitution: F_A built from the multinomial
/// allocation terms, the inverse map F(u_1-1, u_2-u_1, ..., u_l-u_{l-1})
/// applied exactly, coefficients read off as the maximal-occurrence law and
/// mapped back to raw counts. Requires is_chain_admissible; l = 1 matches
/// joint_pmf.
ExactPMF chain_pmf(const OccurrenceSpec& spec, const EvalOptions& options = {});

/// An overlapping increasing chain (11, 111, 1111, ...) recast as a
/// nonoverlapping one by prefixing a symbol.
struct PrependReduction {
  std::vector<PartialWord> chain;  // the prefixed words a.w_i
  char prefix = 0;
  /// x -> prefix + x.
  std::string transform(std::string_view text) const;
};

/// Finds an alphabet symbol a so that {a.w_i} is an admissible chain.
/// The counting identity relating transformed counts to the originals is
///   count(a.w, a.x) = count(w, x) - sum over c != a of count(c.w, x);
/// distributions of the original overlapping chain go through the DP
/// oracle, not through this reduction. Throws ChainError when no prefix
/// symbol works.
PrependReduction prepend_reduction(std::span<const PartialWord> words);

/// E(N_w^t) for a nonoverlapping (partial) word via the surjection-number
/// formula. Throws OverlapError for overlapping words.
Rational moment(const PartialWord& word, std::uint64_t n, const IIDModel& model, unsigned t);

/// Closed-form sliding mean and variance:
///   E = (n - |w| + 1) P(w),
///   V = E + (n - 2|w| + 2)(n - 2|w| + 1) P(w)^2 - E^2.
std::pair<Rational, Rational> mean_variance(const PartialWord& word, std::uint64_t n,
                                            const IIDModel& model);

// Reference laws for the comparisons.
Rational binomial_pmf(std::uint64_t n, const Rational& p, std::uint64_t k);
double poisson_pmf(double lambda, std::uint64_t k);
/// The full Binomial(n, p) law as an ExactPMF.
ExactPMF binomial_law(std::uint64_t n, const Rational& p);
/// Block-wise sampling law: Binomial(floor(n/|w|), P(w)).
ExactPMF blockwise_pmf(const PartialWord& word, std::uint64_t n, const IIDModel& model);

/// F_A for Theorem-style checks: sum over feasible k of
/// multinomial(n - sum m_i k_i + sum k_i; k) prod P(w_i)^{k_i} z^k.
GenPoly allocation_genfun(const OccurrenceSpec& spec, const EvalOptions& options = {});

}  // namespace wordlaw

#endif  // WORDLAW_EXACT_DIST_HPP_
