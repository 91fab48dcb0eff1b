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

#include "wordlaw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wordlaw/errors.hpp"

namespace wordlaw {

EmpiricalCDF EmpiricalCDF::from_sorted(std::span<const std::uint64_t> sorted_samples) {
  if (sorted_samples.empty()) throw std::invalid_argument("empty sample");
  EmpiricalCDF cdf;
  cdf.sample_count = sorted_samples.size();
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
    if (i > 0 && sorted_samples[i] < sorted_samples[i - 1])
      throw std::invalid_argument("samples not sorted");
    ++run;
    if (i + 1 == sorted_samples.size() || sorted_samples[i + 1] != sorted_samples[i]) {
      cdf.values.push_back(sorted_samples[i]);
      cdf.cum_counts.push_back(run);
    }
  }
  return cdf;
}

Rational EmpiricalCDF::at(std::uint64_t x) const {
  auto it = std::upper_bound(values.begin(), values.end(), x);
  if (it == values.begin()) return 0;
  const std::size_t idx = static_cast<std::size_t>(it - values.begin()) - 1;
  return Rational(static_cast<unsigned long>(cum_counts[idx]),
                  static_cast<unsigned long>(sample_count));
}

Rational ks_statistic(const EmpiricalCDF& empirical, const ExactPMF& exact) {
  if (empirical.sample_count == 0) throw std::invalid_argument("empty sample");
  if (exact.dimension() != 1) throw std::invalid_argument("exact law must be one-dimensional");

  // Both CDFs are step functions jumping only at integer support points, so
  // the sup of |F_t - F| is attained just after one of the jumps (the value
  // on each constant piece equals the value just after the previous jump,
  // which covers the left limits as well).
  std::vector<std::uint64_t> jumps;
  jumps.reserve(empirical.values.size() + exact.support.size());
  for (std::uint64_t v : empirical.values) jumps.push_back(v);
  for (const auto& s : exact.support) jumps.push_back(s[0]);
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

  Rational d = 0;
  std::size_t ei = 0;
  std::size_t xi = 0;
  Rational f_emp = 0;
  Rational f_exact = 0;
  for (std::uint64_t x : jumps) {
    while (ei < empirical.values.size() && empirical.values[ei] <= x) {
      f_emp = Rational(static_cast<unsigned long>(empirical.cum_counts[ei]),
                       static_cast<unsigned long>(empirical.sample_count));
      ++ei;
    }
    while (xi < exact.support.size() && exact.support[xi][0] <= x) {
      f_exact += exact.mass[xi];
      ++xi;
    }
    Rational gap = f_emp - f_exact;
    if (gap < 0) gap = -gap;
    if (gap > d) d = gap;
  }
  return d;
}

double ks_pvalue(double d, std::uint64_t t) {
  if (d < 0 || d > 1) throw std::invalid_argument("D outside [0, 1]");
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  const double lambda = std::sqrt(static_cast<double>(t)) * d;
  if (lambda <= 0) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100000; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-320) break;
  }
  double p = 2.0 * sum;
  p = std::min(1.0, std::max(0.0, p));
  if (p < 1e-300) p = 0.0;  // reported as exactly zero, like the tables
  return p;
}

KSResult ks_test(const EmpiricalCDF& empirical, const ExactPMF& exact) {
  KSResult result;
  result.d = ks_statistic(empirical, exact);
  result.t = empirical.sample_count;
  result.p_value = ks_pvalue(to_double(result.d), result.t);
  return result;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

void check_power_spec(const PowerSpec& spec, double theta) {
  if (!(spec.theta_star > 0 && spec.theta_star < 1))
    throw std::invalid_argument("theta* must lie in (0, 1)");
  if (!(theta > 0 && theta <= spec.theta_star))
    throw std::invalid_argument("theta must lie in (0, theta*]");
  if (spec.word_len < 1 || spec.n < spec.word_len)
    throw std::invalid_argument("need n >= |w| >= 1");
}

double sliding_mean(const PowerSpec& spec, double theta) {
  return (static_cast<double>(spec.n) - spec.word_len + 1) * theta;
}

double sliding_var(const PowerSpec& spec, double theta) {
  const double mean = sliding_mean(spec, theta);
  const double d1 = static_cast<double>(spec.n) - 2.0 * spec.word_len + 2.0;
  const double d2 = d1 - 1.0;
  const double pairs = (d1 > 0 && d2 > 0) ? d1 * d2 : 0.0;
  return mean + pairs * theta * theta - mean * mean;
}

}  // namespace

double sliding_power(const PowerSpec& spec, double theta) {
  check_power_spec(spec, theta);
  const double cutoff = sliding_mean(spec, spec.theta_star) -
                        spec.sigma_multiplier * std::sqrt(sliding_var(spec, spec.theta_star));
  return normal_cdf((cutoff - sliding_mean(spec, theta)) / std::sqrt(sliding_var(spec, theta)));
}

double blockwise_power(const PowerSpec& spec, double theta) {
  check_power_spec(spec, theta);
  const double blocks = static_cast<double>(spec.n / spec.word_len);
  const double cutoff = blocks * spec.theta_star -
                        spec.sigma_multiplier *
                            std::sqrt(blocks * spec.theta_star * (1.0 - spec.theta_star));
  return normal_cdf((cutoff - blocks * theta) / std::sqrt(blocks * theta * (1.0 - theta)));
}

double power(const PowerSpec& spec, double theta) {
  return spec.mode == CountingMode::kSliding ? sliding_power(spec, theta)
                                             : blockwise_power(spec, theta);
}

std::vector<PowerPoint> power_curve(const PowerSpec& spec, std::span<const double> grid) {
  std::vector<PowerPoint> points;
  points.reserve(grid.size());
  for (double theta : grid)
    points.push_back({theta, sliding_power(spec, theta), blockwise_power(spec, theta)});
  return points;
}

namespace {

ExactPMF exact_law_for_audit(const PartialWord& word, std::uint64_t n, const IIDModel& model) {
  OccurrenceSpec spec{{word}, n, model, CountingMode::kSliding};
  EvalOptions options;
  try {
    return joint_pmf(spec, options);
  } catch (const BudgetError&) {
    options.mode = PmfMode::kTruncated;
    return joint_pmf(spec, options);
  }
}

AuditReport finish_audit(MonteCarloResult empirical, ExactPMF exact, const PartialWord& word,
                         const IIDModel& model, std::uint64_t n, AuditConfig config) {
  AuditReport report;
  report.ks = ks_test(EmpiricalCDF::from_sorted(empirical.sorted_counts), exact);
  report.binomial = binomial_law(n, model.word_prob(word));
  report.exact = std::move(exact);
  report.empirical = std::move(empirical);
  report.config = config;
  return report;
}

}  // namespace

AuditReport rng_audit(const AuditConfig& config, const PartialWord& word, const IIDModel& model) {
  if (!is_partial_nonoverlapping(word))
    throw OverlapError("audits need a nonoverlapping word (the exact law comes from the "
                       "explicit formula)");
  ExactPMF exact = exact_law_for_audit(word, config.n, model);

  MonteCarloResult empirical;
  if (config.generator == GeneratorId::kExactSampler) {
    empirical = exact_sampler_pmf(exact, config.seed, config.t);
    empirical.n = config.n;
  } else {
    auto generator = make_generator(config.generator, config.seed);
    GeneratorBitSource bits(*generator, config.extraction);
    OccurrenceSpec spec{{word}, config.n, model, CountingMode::kSliding};
    empirical = monte_carlo_pmf(spec, bits, config.t);
    empirical.generator = generator_name(config.generator);
    empirical.seed = config.seed;
  }
  return finish_audit(std::move(empirical), std::move(exact), word, model, config.n, config);
}

AuditReport bit_source_audit(BitSource& bits, std::uint64_t n, std::uint64_t t,
                             const PartialWord& word, const IIDModel& model) {
  if (!is_partial_nonoverlapping(word))
    throw OverlapError("audits need a nonoverlapping word");
  ExactPMF exact = exact_law_for_audit(word, n, model);
  OccurrenceSpec spec{{word}, n, model, CountingMode::kSliding};
  MonteCarloResult empirical = monte_carlo_pmf(spec, bits, t);
  empirical.generator = "bitfile";
  AuditConfig config;
  config.n = n;
  config.t = t;
  return finish_audit(std::move(empirical), std::move(exact), word, model, n, config);
}

}  // namespace wordlaw
