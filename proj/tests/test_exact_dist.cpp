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

#include "wordlaw/exact_dist.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "wordlaw/errors.hpp"
#include "wordlaw/oracles.hpp"

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

}  // namespace

TEST_CASE("allocation_count against direct placement enumeration") {
  CHECK(allocation_count(3, 2, 1) == 2);
  CHECK(allocation_count(10, 3, 0) == 1);
  CHECK(allocation_count(7, 4, 2) == 0);

  // Brute force: choose k start positions with pairwise gaps >= m.
  auto brute = [](std::uint64_t n, std::uint64_t m, std::uint64_t k) {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> pos(k);
    auto rec = [&](auto&& self, std::uint64_t i, std::uint64_t from) -> void {
      if (i == k) {
        ++count;
        return;
      }
      for (std::uint64_t p = from; p + m <= n + 1; ++p) self(self, i + 1, p + m);
    };
    rec(rec, 0, 1);
    return count;
  };
  CHECK(brute(10, 3, 2) == 15);
  CHECK(allocation_count(10, 3, 2) == 15);
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::uint64_t m = 1; m <= 4; ++m)
      for (std::uint64_t k = 0; k <= 5; ++k)
        CHECK(allocation_count(n, m, k) == brute(n, m, k));
}

TEST_CASE("surjection numbers against function enumeration") {
  CHECK(surjection_count(2, 2) == 2);
  CHECK(surjection_count(3, 2) == 6);
  for (std::uint64_t t = 1; t <= 6; ++t) CHECK(surjection_count(t, 1) == 1);

  auto brute = [](std::uint64_t t, std::uint64_t s) {
    std::uint64_t onto = 0;
    std::vector<std::uint64_t> f(t, 0);
    while (true) {
      std::vector<bool> hit(s, false);
      for (std::uint64_t v : f) hit[v] = true;
      bool all = true;
      for (bool h : hit) all = all && h;
      if (all) ++onto;
      std::size_t i = t;
      while (i > 0 && ++f[i - 1] == s) f[--i] = 0;
      if (i == 0) break;
    }
    return onto;
  };
  for (std::uint64_t t = 1; t <= 5; ++t)
    for (std::uint64_t s = 1; s <= t; ++s)
      CHECK(surjection_count(t, s) == brute(t, s));

  // Table invariants: A_{t,1} = 1, A_{t,s} = 0 for s > t, A_{t,t} = t!.
  BigInt fact = 1;
  for (std::uint64_t t = 1; t <= 8; ++t) {
    fact *= t;
    CHECK(surjection_count(t, t) == fact);
    CHECK(surjection_count(t, t + 1) == 0);
  }
}

TEST_CASE("joint_pmf fixed examples") {
  // f(3) = 4: the strings 000, 100, 110, 111 avoid 01.
  ExactPMF law01 = joint_pmf(fair_spec({"01"}, 3));
  CHECK(law01.support.front() == std::vector<std::uint64_t>{0});
  CHECK(law01.mass.front() == Rational(1, 2));

  ExactPMF law10 = joint_pmf(fair_spec({"10"}, 3));
  REQUIRE(law10.support.size() == 2);
  CHECK(law10.mass[0] == Rational(1, 2));
  CHECK(law10.mass[1] == Rational(1, 2));

  // Avoidance counts P(N_01 = 0) 2^n = n + 1 for small n.
  for (std::uint64_t n = 1; n <= 12; ++n) {
    ExactPMF law = joint_pmf(fair_spec({"01"}, n));
    CHECK(law.mass.front() * Rational(BigInt(1) << n) == Rational(n + 1));
  }
}

TEST_CASE("joint_pmf rejects overlapping input and blockwise mode") {
  CHECK_THROWS_AS(joint_pmf(fair_spec({"11"}, 6)), OverlapError);
  CHECK_THROWS_AS(joint_pmf(fair_spec({"00", "11"}, 6)), OverlapError);
  OccurrenceSpec spec = fair_spec({"10"}, 6);
  spec.mode = CountingMode::kBlockwise;
  CHECK_THROWS_AS(joint_pmf(spec), std::invalid_argument);
  CHECK_THROWS_AS(joint_pmf(fair_spec({"10", "10"}, 6)), std::invalid_argument);
}

TEST_CASE("joint_pmf degenerate n below the word length") {
  ExactPMF law = joint_pmf(fair_spec({"00111"}, 3));
  REQUIRE(law.support.size() == 1);
  CHECK(law.support[0] == std::vector<std::uint64_t>{0});
  CHECK(law.mass[0] == 1);
}

TEST_CASE("joint_pmf equals brute force: pair and partial words") {
  CHECK(same_law(joint_pmf(fair_spec({"00111", "00101"}, 10)),
                 brute_force_joint_pmf(fair_spec({"00111", "00101"}, 10))));
  CHECK(same_law(joint_pmf(fair_spec({"001?1"}, 11)),
                 brute_force_joint_pmf(fair_spec({"001?1"}, 11))));
  CHECK(same_law(joint_pmf(fair_spec({"0001??1??1"}, 13)),
                 brute_force_joint_pmf(fair_spec({"0001??1??1"}, 13))));
  // A partial-word pair whose patterns can never share a window.
  const Alphabet dna = Alphabet::dna();
  OccurrenceSpec quad{{PartialWord("AC?G", dna), PartialWord("AC?T", dna)},
                      8, IIDModel::uniform(dna), CountingMode::kSliding};
  CHECK(same_law(joint_pmf(quad), brute_force_joint_pmf(quad)));
}

TEST_CASE("joint_pmf rejects distinct patterns that can co-match a window") {
  // 0?1 and 011 agree on the window 011, which breaks the allocation
  // argument even though the realization set passes the pairwise check.
  CHECK_THROWS_AS(joint_pmf(fair_spec({"0?1", "011"}, 8)), OverlapError);
  CHECK_THROWS_AS(joint_pmf(fair_spec({"001?1", "00101"}, 10)), OverlapError);
}

TEST_CASE("joint_pmf equals the DP oracle on bigger samples") {
  std::mt19937 rng(2024);
  const IIDModel biased(kBinary, {Rational(2, 5), Rational(3, 5)});
  const IIDModel dna = IIDModel::uniform(Alphabet::dna());
  int done = 0;
  while (done < 6) {
    const std::size_t len = rng() % 8 + 1;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back((rng() % 2) ? '1' : '0');
    PartialWord word = pw(w);
    if (!is_partial_nonoverlapping(word)) continue;
    const std::uint64_t n = 50 + rng() % 251;  // up to 300
    const IIDModel& model = (done % 2 == 0) ? biased : IIDModel::fair_coin();
    OccurrenceSpec spec{{word}, n, model, CountingMode::kSliding};
    CHECK(same_law(joint_pmf(spec), automaton_dp_law(spec)));
    ++done;
  }
  // Quaternary alphabet.
  PartialWord motif("AC?T", Alphabet::dna());
  REQUIRE(is_partial_nonoverlapping(motif));
  OccurrenceSpec spec{{motif}, 40, dna, CountingMode::kSliding};
  CHECK(same_law(joint_pmf(spec), automaton_dp_law(spec)));
}

TEST_CASE("exact masses sum to exactly one") {
  for (std::uint64_t n : {1ull, 7ull, 40ull, 100ull}) {
    CHECK(joint_pmf(fair_spec({"011"}, n)).total_mass() == 1);
  }
  CHECK(joint_pmf(fair_spec({"00111", "00101"}, 40)).total_mass() == 1);
  const IIDModel biased(kBinary, {Rational(1, 3), Rational(2, 3)});
  OccurrenceSpec spec{{pw("001")}, 60, biased, CountingMode::kSliding};
  CHECK(joint_pmf(spec).total_mass() == 1);
}

TEST_CASE("moments match the distribution exactly") {
  const IIDModel fair = IIDModel::fair_coin();
  for (const std::string& w : {"10", "011", "11110"}) {
    for (std::uint64_t n : {5ull, 23ull, 100ull}) {
      ExactPMF law = joint_pmf(fair_spec({w}, n));
      for (unsigned t = 1; t <= 4; ++t)
        CHECK(moment(pw(w), n, fair, t) == law.power_sum(t));
    }
  }
  // w = 10, n = 3: T = 1 truncation bites; E(N^2) = E(N) = 1/2.
  CHECK(moment(pw("10"), 3, fair, 2) == Rational(1, 2));
  CHECK_THROWS_AS(moment(pw("11"), 10, fair, 1), OverlapError);
}

TEST_CASE("mean and variance closed forms") {
  const IIDModel fair = IIDModel::fair_coin();
  auto [mean, variance] = mean_variance(pw("11110"), 1600, fair);
  CHECK(mean == Rational(399, 8));          // 49.875
  CHECK(variance == Rational(4591, 128));   // 35.8671875

  // |w| = 2, P(w) = 1/4, n = 500 (the power-table configuration).
  auto [m2, v2] = mean_variance(pw("10"), 500, fair);
  CHECK(m2 == Rational(499, 4));            // 124.75
  CHECK(v2 == Rational(501, 16));           // 31.3125

  // t = 1 moment is the mean, and moment(2) - mean^2 is the variance.
  for (std::uint64_t n : {5ull, 100ull, 1600ull}) {
    auto [m, v] = mean_variance(pw("11110"), n, fair);
    CHECK(moment(pw("11110"), n, fair, 1) == m);
    CHECK(moment(pw("11110"), n, fair, 2) - m * m == v);
  }
}

TEST_CASE("reference laws") {
  const IIDModel fair = IIDModel::fair_coin();
  // Binomial mean n p = 50 at n = 1600, p = 2^-5.
  ExactPMF binom = binomial_law(1600, Rational(1, 32));
  CHECK(binom.power_sum(1) == 50);
  CHECK(binom.total_mass() == 1);
  // Binomial variance 48.4375 strictly exceeds the sliding variance.
  Rational binom_var = binom.power_sum(2) - binom.power_sum(1) * binom.power_sum(1);
  CHECK(binom_var == Rational(775, 16));
  CHECK(binom_var > mean_variance(pw("11110"), 1600, fair).second);

  CHECK(binomial_pmf(4, Rational(1, 2), 2) == Rational(3, 8));

  // Blockwise law: Binomial(floor(n/|w|), P(w)).
  ExactPMF block = blockwise_pmf(pw("11110"), 1600, fair);
  CHECK(block.support.size() == 321);
  CHECK(block.power_sum(1) == 10);
  CHECK(block.total_mass() == 1);

  // Poisson sanity: masses sum to ~1.
  double sum = 0;
  for (std::uint64_t k = 0; k < 60; ++k) sum += poisson_pmf(11.92, k);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("truncated mode matches exact where exact runs") {
  // n = 3000, |w| = 10: the whole exact law is still affordable.
  OccurrenceSpec spec = fair_spec({"0111111111"}, 3000);
  REQUIRE(is_partial_nonoverlapping(spec.words[0]));
  ExactPMF exact = joint_pmf(spec);
  EvalOptions trunc;
  trunc.mode = PmfMode::kTruncated;
  ExactPMF approx = joint_pmf(spec, trunc);
  REQUIRE(approx.certificate.has_value());
  const Rational tolerance = approx.certificate->point_error_bound;
  std::map<std::uint64_t, Rational> exact_by_count;
  for (std::size_t i = 0; i < exact.support.size(); ++i)
    exact_by_count[exact.support[i][0]] = exact.mass[i];
  for (std::size_t i = 0; i < approx.support.size(); ++i) {
    Rational gap = approx.mass[i] - exact_by_count[approx.support[i][0]];
    if (gap < 0) gap = -gap;
    CHECK(gap <= tolerance);
  }
  // Mass certified: sum >= 1 - epsilon.
  CHECK(approx.total_mass() >= Rational(1) - trunc.epsilon);
}

TEST_CASE("truncated certificates agree across unrelated depths at n = 1e5") {
  // Exact mode at n = 1e5 is out of any reasonable budget for interesting
  // word lengths, so certify two runs with very different stopping points
  // against each other: |T_eps - T_eps'| <= eps + eps'.
  OccurrenceSpec spec = fair_spec({"01111111111111"}, 100000);
  REQUIRE(is_partial_nonoverlapping(spec.words[0]));
  EvalOptions coarse;
  coarse.mode = PmfMode::kTruncated;
  coarse.epsilon = power_of_ten(-20);
  EvalOptions fine;
  fine.mode = PmfMode::kTruncated;
  fine.epsilon = power_of_ten(-45);
  ExactPMF a = joint_pmf(spec, coarse);
  ExactPMF b = joint_pmf(spec, fine);
  std::map<std::uint64_t, Rational> fine_by_count;
  for (std::size_t i = 0; i < b.support.size(); ++i) fine_by_count[b.support[i][0]] = b.mass[i];
  const Rational tolerance = coarse.epsilon + fine.epsilon;
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    REQUIRE(fine_by_count.count(a.support[i][0]) == 1);
    Rational gap = a.mass[i] - fine_by_count[a.support[i][0]];
    if (gap < 0) gap = -gap;
    CHECK(gap <= tolerance);
  }
  // Spot-check one point against the full exact alternating sum.
  std::vector<std::uint64_t> probe{6};
  Rational exact_mass = joint_point_mass(spec, probe);
  REQUIRE(fine_by_count.count(6) == 1);
  Rational gap = fine_by_count[6] - exact_mass;
  if (gap < 0) gap = -gap;
  CHECK(gap <= fine.epsilon);
}

TEST_CASE("term budget guards") {
  OccurrenceSpec spec = fair_spec({"10"}, 4000000);
  EvalOptions options;
  options.term_budget = 1000;
  CHECK_THROWS_AS(joint_pmf(spec, options), BudgetError);
}

TEST_CASE("truncated mode sums close to one at DNA scale") {
  PartialWord motif("AAAAAAAAAAAAAC", Alphabet::dna());
  REQUIRE(is_partial_nonoverlapping(motif));
  OccurrenceSpec spec{{motif}, 3'200'000'000ull, IIDModel::uniform(Alphabet::dna()),
                      CountingMode::kSliding};
  EvalOptions options;
  options.mode = PmfMode::kTruncated;
  ExactPMF law = joint_pmf(spec, options);
  REQUIRE(law.certificate.has_value());
  CHECK(law.certificate->tail_mass_bound <= options.epsilon);
  CHECK(law.certificate->point_error_bound <= options.epsilon);
  CHECK(law.total_mass() >= Rational(1) - options.epsilon);
  CHECK(law.total_mass() <= Rational(1) + options.epsilon);
  // Reported mean from the closed form is exact: (n - 13) 4^-14.
  auto [mean, variance] = mean_variance(motif, spec.n, spec.model);
  CHECK(mean == Rational(BigInt("3199999987")) / Rational(BigInt(1) << 28));
  (void)variance;
}
