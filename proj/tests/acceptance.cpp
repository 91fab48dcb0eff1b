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
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every tolerance is pinned here in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wordlaw/exact_dist.hpp"
#include "wordlaw/genpoly.hpp"
#include "wordlaw/oracles.hpp"
#include "wordlaw/rng.hpp"
#include "wordlaw/stats.hpp"
#include "wordlaw/words.hpp"

using namespace wordlaw;

namespace {

const Alphabet kBinary = Alphabet::binary();
PartialWord pw(const std::string& s) { return PartialWord(s, kBinary); }

OccurrenceSpec fair_spec(std::vector<std::string> words, std::uint64_t n) {
  std::vector<PartialWord> ws;
  for (auto& w : words) ws.push_back(pw(w));
  return OccurrenceSpec{std::move(ws), n, IIDModel::fair_coin(), CountingMode::kSliding};
}

bool same_law(const ExactPMF& a, const ExactPMF& b) {
  std::map<std::vector<std::uint64_t>, Rational> ma, mb;
  for (std::size_t i = 0; i < a.support.size(); ++i)
    if (a.mass[i] != 0) ma[a.support[i]] = a.mass[i];
  for (std::size_t i = 0; i < b.support.size(); ++i)
    if (b.mass[i] != 0) mb[b.support[i]] = b.mass[i];
  return ma == mb;
}

std::vector<std::string> nonoverlapping_binary_words(std::size_t max_len) {
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::string w(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if (bits & (std::uint64_t{1} << i)) w[i] = '1';
      if (!is_self_overlapping(pw(w))) out.push_back(w);
    }
  }
  return out;
}

// 1. joint_pmf == brute force for every nonoverlapping binary word of
//    length <= 4 at n <= 14, and for the pair {00111, 00101} at n <= 12.
bool criterion_oracle_equivalence(std::string& detail) {
  int checked = 0;
  for (const auto& w : nonoverlapping_binary_words(4)) {
    for (std::uint64_t n = 1; n <= 14; ++n) {
      auto spec = fair_spec({w}, n);
      if (!same_law(joint_pmf(spec), brute_force_joint_pmf(spec))) {
        detail = "mismatch at w=" + w + " n=" + std::to_string(n);
        return false;
      }
      ++checked;
    }
  }
  for (std::uint64_t n = 1; n <= 12; ++n) {
    auto spec = fair_spec({"00111", "00101"}, n);
    if (!same_law(joint_pmf(spec), brute_force_joint_pmf(spec))) {
      detail = "pair mismatch at n=" + std::to_string(n);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " exact law comparisons";
  return true;
}

// 2. P(N_01 = 0) 2^n = n + 1 for all n <= 30, exactly.
bool criterion_avoidance_count(std::string& detail) {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    ExactPMF law = joint_pmf(fair_spec({"01"}, n));
    if (law.support.front() != std::vector<std::uint64_t>{0} ||
        law.mass.front() * Rational(BigInt(1) << n) != Rational(n + 1)) {
      detail = "failed at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "f(n) = n+1 for n = 1..30";
  return true;
}

// 3. The six published power values to within 1e-5.
bool criterion_power_table(std::string& detail) {
  PowerSpec spec{0.25, 500, 2, CountingMode::kSliding, 5.0};
  const double expected_sliding[3] = {0.316007, 0.860057, 0.995681};
  const double expected_blockwise[3] = {0.000295, 0.002939, 0.021481};
  const double thetas[3] = {0.20, 0.18, 0.16};
  for (int i = 0; i < 3; ++i) {
    const double s = sliding_power(spec, thetas[i]);
    const double b = blockwise_power(spec, thetas[i]);
    if (std::abs(s - expected_sliding[i]) >= 1e-5 ||
        std::abs(b - expected_blockwise[i]) >= 1e-5) {
      char buffer[160];
      std::snprintf(buffer, sizeof(buffer), "theta=%.2f got (%.6f, %.6f)", thetas[i], s, b);
      detail = buffer;
      return false;
    }
  }
  detail = "all six values within 1e-5";
  return true;
}

// 4. The published MT p-values to within 5e-4.
bool criterion_ks_pvalues(std::string& detail) {
  const double p1 = ks_pvalue(0.001376, 200000);
  const double p2 = ks_pvalue(0.001409, 200000);
  char buffer[120];
  std::snprintf(buffer, sizeof(buffer), "p(0.001376)=%.6f p(0.001409)=%.6f", p1, p2);
  detail = buffer;
  return std::abs(p1 - 0.843306) < 5e-4 && std::abs(p2 - 0.822066) < 5e-4;
}

// 5. Qualitative audit: reject the embedded BSD random (lsb) on w=11110,
//    do not reject MT19937 on w in {10, 11110}. t >= 50,000 as required;
//    the BSD defect needs several hundred thousand samples before the
//    asymptotic p-value drops below 1e-10, so the suite runs t = 500,000
//    (a few seconds, far under the criterion's 10-minute budget).
bool criterion_rng_audit(std::string& detail) {
  const IIDModel fair = IIDModel::fair_coin();

  AuditConfig bsd;
  bsd.generator = GeneratorId::kBsdRandom;
  bsd.seed = 12345;
  bsd.extraction = BitExtraction::kLsb;
  bsd.n = 1600;
  bsd.t = 500000;
  AuditReport bsd_report = rng_audit(bsd, pw("11110"), fair);

  AuditConfig mt = bsd;
  mt.generator = GeneratorId::kMt19937;
  mt.seed = 5489;
  mt.t = 200000;
  AuditReport mt10 = rng_audit(mt, pw("10"), fair);
  AuditReport mt11110 = rng_audit(mt, pw("11110"), fair);

  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "BSD w=11110 p=%.3g; MT w=10 p=%.3f, w=11110 p=%.3f", bsd_report.ks.p_value,
                mt10.ks.p_value, mt11110.ks.p_value);
  detail = buffer;
  return bsd_report.ks.p_value < 1e-10 && mt10.ks.p_value > 0.01 && mt11110.ks.p_value > 0.01;
}

// 6. DNA scale: q=4, n=3.2e9, |w|=14, truncated law in under 10 s with
//    epsilon <= 1e-30; mean exactly (n-13) 4^-14; sup distance to
//    Poisson(lambda) below 1e-2.
bool criterion_dna_scale(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  PartialWord motif("AAAAAAAAAAAAAC", Alphabet::dna());
  const std::uint64_t n = 3'200'000'000ull;
  const IIDModel model = IIDModel::uniform(Alphabet::dna());
  OccurrenceSpec spec{{motif}, n, model, CountingMode::kSliding};
  EvalOptions options;
  options.mode = PmfMode::kTruncated;
  ExactPMF law = joint_pmf(spec, options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  auto [mean, variance] = mean_variance(motif, n, model);
  const Rational expected_mean = Rational(BigInt("3199999987")) / Rational(BigInt(1) << 28);
  if (mean != expected_mean) {
    detail = "mean mismatch";
    return false;
  }
  if (!law.certificate || law.certificate->epsilon > power_of_ten(-30) ||
      law.certificate->point_error_bound > power_of_ten(-30) ||
      law.certificate->tail_mass_bound > power_of_ten(-30)) {
    detail = "certificate too weak";
    return false;
  }

  // Kolmogorov distance to Poisson(lambda), lambda = E(N_w).
  const double lambda = to_double(mean);
  double d = 0;
  double f_exact = 0;
  double f_poisson = 0;
  for (std::size_t i = 0; i < law.support.size(); ++i) {
    f_exact += to_double(law.mass[i]);
    f_poisson += poisson_pmf(lambda, law.support[i][0]);
    d = std::max(d, std::abs(f_exact - f_poisson));
  }

  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "%.2f s, support %zu, sup|F-Po| = %.3g", seconds,
                law.support.size(), d);
  detail = buffer;
  return seconds < 10.0 && d < 1e-2;
}

// 7. Moments: Theorem-3 moments equal the distribution's power sums for
//    100 random nonoverlapping words, t = 1..4; t=1 and t=2 match the
//    closed-form mean/variance; w=11110, n=1600 variance = 35.8671875.
bool criterion_moments(std::string& detail) {
  std::mt19937 rng(20260809);
  const IIDModel fair = IIDModel::fair_coin();
  int done = 0;
  while (done < 100) {
    const std::size_t len = rng() % 8 + 1;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back((rng() % 2) ? '1' : '0');
    PartialWord word = pw(w);
    if (!is_partial_nonoverlapping(word)) continue;
    const std::uint64_t n = len + rng() % (101 - len);
    ExactPMF law = joint_pmf(fair_spec({w}, n));
    auto [mean, variance] = mean_variance(word, n, fair);
    for (unsigned t = 1; t <= 4; ++t) {
      if (moment(word, n, fair, t) != law.power_sum(t)) {
        detail = "moment mismatch w=" + w + " n=" + std::to_string(n) +
                 " t=" + std::to_string(t);
        return false;
      }
    }
    if (moment(word, n, fair, 1) != mean ||
        moment(word, n, fair, 2) - mean * mean != variance) {
      detail = "closed-form mismatch w=" + w + " n=" + std::to_string(n);
      return false;
    }
    ++done;
  }
  if (mean_variance(pw("11110"), 1600, fair).second != Rational(4591, 128)) {
    detail = "variance at w=11110, n=1600 is not 35.8671875";
    return false;
  }
  detail = "100 random words, orders 1..4, exact";
  return true;
}

// 8. chain_pmf equals brute force for {011, 0111, 01111} up to n = 14, and
//    the single-word chain route equals joint_pmf on 20 random cases.
bool criterion_chain(std::string& detail) {
  for (std::uint64_t n = 1; n <= 14; ++n) {
    auto spec = fair_spec({"011", "0111", "01111"}, n);
    if (!same_law(chain_pmf(spec), brute_force_joint_pmf(spec))) {
      detail = "chain mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  std::mt19937 rng(7);
  int done = 0;
  while (done < 20) {
    const std::size_t len = rng() % 6 + 1;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back((rng() % 2) ? '1' : '0');
    if (!is_partial_nonoverlapping(pw(w))) continue;
    const std::uint64_t n = 1 + rng() % 60;
    auto spec = fair_spec({w}, n);
    if (!same_law(chain_pmf(spec), joint_pmf(spec))) {
      detail = "l=1 mismatch at w=" + w + " n=" + std::to_string(n);
      return false;
    }
    ++done;
  }
  detail = "chain law exact for n <= 14 and 20 single-word cases";
  return true;
}

// 9. Partial words: w(3) law equals brute force for n <= 14; the w(m)
//    family invariants hold for m <= 6; the rate 2m/(m^2+1) decreases.
bool criterion_partial_words(std::string& detail) {
  const IIDModel fair = IIDModel::fair_coin();
  for (std::uint64_t n = 1; n <= 14; ++n) {
    auto spec = fair_spec({"0001??1??1"}, n);
    if (!same_law(joint_pmf(spec), brute_force_joint_pmf(spec))) {
      detail = "w(3) mismatch at n=" + std::to_string(n);
      return false;
    }
  }
  if (w_family(3).str() != "0001??1??1") {
    detail = "w(3) construction mismatch";
    return false;
  }
  for (unsigned m = 1; m <= 6; ++m) {
    const PartialWord w = w_family(m);
    if (w.size() != m * m + 1 || !is_partial_nonoverlapping(w) ||
        fair.word_prob(w) != rational_pow(Rational(1, 2), 2 * m)) {
      detail = "family invariant fails at m=" + std::to_string(m);
      return false;
    }
  }
  for (unsigned m = 2; m < 24; ++m) {
    if (!(Rational(2 * (m + 1), (m + 1) * (m + 1) + 1) < Rational(2 * m, m * m + 1))) {
      detail = "rate not decreasing at m=" + std::to_string(m);
      return false;
    }
  }
  detail = "w(3) law exact for n <= 14; family invariants for m <= 6";
  return true;
}

// 10. Generating-function identities with F_B built from brute force:
//     Theorem-1 style F_A(z) = F_B(z+1) (univariate and l=2) and the chain
//     substitution for {011, 0111}, coefficient-wise for n <= 12.
bool criterion_genfun(std::string& detail) {
  auto forward_set = [](std::size_t l) {
    std::vector<GenPoly> subs;
    for (std::size_t j = 0; j < l; ++j)
      subs.push_back(GenPoly::variable(l, j) + GenPoly::constant(l, Rational(1)));
    return subs;
  };
  auto forward_chain = [](std::size_t l) {
    std::vector<GenPoly> subs;
    for (std::size_t j = 0; j < l; ++j) {
      GenPoly p = GenPoly::constant(l, Rational(1));
      for (std::size_t i = 0; i <= j; ++i) p = p + GenPoly::variable(l, i);
      subs.push_back(p);
    }
    return subs;
  };
  auto law_genfun = [](const ExactPMF& law) {
    GenPoly p(law.dimension());
    for (std::size_t i = 0; i < law.support.size(); ++i)
      p.add_term(GenPoly::Exponents(law.support[i].begin(), law.support[i].end()), law.mass[i]);
    return p;
  };
  auto maximal_genfun = [](const ExactPMF& law) {
    const std::size_t l = law.dimension();
    GenPoly p(l);
    for (std::size_t i = 0; i < law.support.size(); ++i) {
      GenPoly::Exponents e(l);
      for (std::size_t j = 0; j < l; ++j) {
        const std::uint64_t next = (j + 1 < l) ? law.support[i][j + 1] : 0;
        e[j] = static_cast<std::uint32_t>(law.support[i][j] - next);
      }
      p.add_term(e, law.mass[i]);
    }
    return p;
  };

  for (std::uint64_t n = 4; n <= 12; ++n) {
    auto one = fair_spec({"011"}, n);
    if (!(allocation_genfun(one) ==
          law_genfun(brute_force_joint_pmf(one)).substitute(forward_set(1), 1u << 20))) {
      detail = "univariate identity fails at n=" + std::to_string(n);
      return false;
    }
    auto chain = fair_spec({"011", "0111"}, n);
    if (!(allocation_genfun(chain) ==
          maximal_genfun(brute_force_joint_pmf(chain)).substitute(forward_chain(2), 1u << 20))) {
      detail = "chain substitution fails at n=" + std::to_string(n);
      return false;
    }
  }
  auto pair = fair_spec({"00111", "00101"}, 12);
  if (!(allocation_genfun(pair) ==
        law_genfun(brute_force_joint_pmf(pair)).substitute(forward_set(2), 1u << 20))) {
    detail = "l=2 identity fails at n=12";
    return false;
  }
  detail = "identities hold coefficient-wise for n <= 12";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence (joint law vs brute force)", criterion_oracle_equivalence},
      {2, "avoidance count P(N_01=0) 2^n = n+1, n <= 30", criterion_avoidance_count},
      {3, "power table (six published values, 1e-5)", criterion_power_table},
      {4, "KS p-values (published MT entries, 5e-4)", criterion_ks_pvalues},
      {5, "RNG audit: reject BSD lsb, keep MT19937", criterion_rng_audit},
      {6, "DNA scale truncated law (n = 3.2e9, |w| = 14)", criterion_dna_scale},
      {7, "moments vs distribution, orders 1..4, exact", criterion_moments},
      {8, "chain law (Theorem-2 route) vs brute force", criterion_chain},
      {9, "partial words: w(3) law and w(m) invariants", criterion_partial_words},
      {10, "generating-function identities", criterion_genfun},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2d: %s [%s] (%.2f s)\n", ok ? "PASS" : "FAIL", criterion.id,
                criterion.label, detail.c_str(), seconds);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
