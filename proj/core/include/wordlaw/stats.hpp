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

#ifndef WORDLAW_STATS_HPP_
#define WORDLAW_STATS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "wordlaw/exact_dist.hpp"
#include "wordlaw/oracles.hpp"
#include "wordlaw/rng.hpp"

namespace wordlaw {

/// Empirical CDF over nonnegative integer values.
struct EmpiricalCDF {
  std::vector<std::uint64_t> values;      // sorted, unique
  std::vector<std::uint64_t> cum_counts;  // cumulative, ends at sample_count
  std::uint64_t sample_count = 0;

  static EmpiricalCDF from_sorted(std::span<const std::uint64_t> sorted_samples);
  /// F_t(x) as an exact fraction.
  Rational at(std::uint64_t x) const;
};

struct KSResult {
  Rational d = 0;  // sup |F_t - F|, exact
  std::uint64_t t = 0;
  double p_value = 1.0;

  double d_double() const { return to_double(d); }
};

/// sup over the integer support (both one-sided limits at every jump) of
/// |F_t - F|, computed in exact rationals. The exact law must be
/// one-dimensional. Throws std::invalid_argument on an empty sample.
Rational ks_statistic(const EmpiricalCDF& empirical, const ExactPMF& exact);

/// Asymptotic Kolmogorov law: lambda = sqrt(t) D,
/// p = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2), clamped to [0, 1].
/// Values below 1e-300 are reported as 0. This is the standard sup-at-jumps
/// statistic with the continuous-case p-value; for discrete laws it is
/// conservative, which is documented rather than corrected.
double ks_pvalue(double d, std::uint64_t t);

KSResult ks_test(const EmpiricalCDF& empirical, const ExactPMF& exact);

/// Standard normal CDF (absolute error well below 1e-12 on [-8, 8]).
double normal_cdf(double x);

/// One-sided test of P(w) = theta* against P(w) < theta*; reject when the
/// count falls below mean - sigma_multiplier * sd under theta*.
struct PowerSpec {
  double theta_star = 0.25;
  std::uint64_t n = 0;
  unsigned word_len = 0;
  CountingMode mode = CountingMode::kSliding;
  double sigma_multiplier = 5.0;  // the paper's hard-coded 5, kept a knob
};

/// Normal-approximation power of the sliding test at true parameter theta.
double sliding_power(const PowerSpec& spec, double theta);
/// Power of the block-wise (binomial) test at true parameter theta.
double blockwise_power(const PowerSpec& spec, double theta);
/// Dispatches on spec.mode.
double power(const PowerSpec& spec, double theta);

struct PowerPoint {
  double theta;
  double sliding;
  double blockwise;
};

std::vector<PowerPoint> power_curve(const PowerSpec& spec, std::span<const double> grid);

/// End-to-end audit of a generator: simulate, compare with the exact law,
/// report KS distance and p-value plus the comparison distributions.
struct AuditConfig {
  GeneratorId generator = GeneratorId::kMt19937;
  std::uint32_t seed = 5489;
  BitExtraction extraction = BitExtraction::kLsb;
  std::uint64_t n = 1600;
  std::uint64_t t = 200000;
};

struct AuditReport {
  KSResult ks;
  ExactPMF exact;         // true sliding law
  ExactPMF binomial;      // Binomial(n, P(w)) comparison
  MonteCarloResult empirical;
  AuditConfig config;
};

/// Runs the audit for one nonoverlapping (partial) word under the model.
/// GeneratorId::kExactSampler draws counts from the exact law itself (the
/// null calibration control).
AuditReport rng_audit(const AuditConfig& config, const PartialWord& word, const IIDModel& model);

/// Audit against externally produced bits instead of an embedded generator.
AuditReport bit_source_audit(BitSource& bits, std::uint64_t n, std::uint64_t t,
                             const PartialWord& word, const IIDModel& model);

}  // namespace wordlaw

#endif  // WORDLAW_STATS_HPP_
