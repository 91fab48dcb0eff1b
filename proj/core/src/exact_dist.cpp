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

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "wordlaw/errors.hpp"

namespace wordlaw {

Rational ExactPMF::total_mass() const {
  Rational sum = 0;
  for (const Rational& m : mass) sum += m;
  return sum;
}

Rational ExactPMF::power_sum(unsigned t, std::size_t coord) const {
  Rational sum = 0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::uint64_t s = support[i].at(coord);
    if (t == 0) {
      sum += mass[i];
      continue;
    }
    BigInt st;
    mpz_ui_pow_ui(st.get_mpz_t(), static_cast<unsigned long>(s), t);
    sum += Rational(st) * mass[i];
  }
  return sum;
}

ExactPMF ExactPMF::marginal(std::size_t coord) const {
  std::map<std::uint64_t, Rational> acc;
  for (std::size_t i = 0; i < support.size(); ++i) acc[support[i].at(coord)] += mass[i];
  ExactPMF out;
  out.mode = mode;
  out.certificate = certificate;
  for (auto& [s, m] : acc) {
    out.support.push_back({s});
    out.mass.push_back(m);
  }
  return out;
}

std::vector<Rational> ExactPMF::cdf() const {
  if (dimension() != 1) throw std::invalid_argument("cdf needs a one-dimensional law");
  std::vector<Rational> out;
  out.reserve(mass.size());
  Rational run = 0;
  for (const Rational& m : mass) {
    run += m;
    out.push_back(run);
  }
  return out;
}

BigInt allocation_count(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (n < 1 || m < 1) throw std::invalid_argument("allocation_count needs n, m >= 1");
  if (k == 0) return 1;
  if (m * k > n) return 0;
  return binomial(n - m * k + k, k);
}

BigInt surjection_count(std::uint64_t t, std::uint64_t s) {
  if (s > t) return 0;
  if (s == 0) return t == 0 ? 1 : 0;
  BigInt sum = 0;
  for (std::uint64_t r = 1; r <= s; ++r) {
    BigInt rt;
    mpz_ui_pow_ui(rt.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(t));
    BigInt term = binomial(s, r) * rt;
    if ((s - r) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

struct SpecView {
  std::vector<std::uint64_t> lengths;
  std::vector<Rational> probs;
  std::uint64_t n = 0;
  std::size_t l = 0;
  std::uint64_t min_len = 0;
};

SpecView validate_spec(const OccurrenceSpec& spec, bool require_nonoverlapping_set) {
  if (spec.words.empty()) throw std::invalid_argument("at least one word required");
  if (spec.n < 1) throw std::invalid_argument("sample length n must be >= 1");
  if (spec.mode != CountingMode::kSliding)
    throw std::invalid_argument("joint laws are for sliding counts; use blockwise_pmf");
  for (std::size_t i = 0; i < spec.words.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.words.size(); ++j) {
      if (spec.words[i].str() == spec.words[j].str())
        throw std::invalid_argument("duplicate word in spec: " + spec.words[i].str());
    }
  }
  if (require_nonoverlapping_set) {
    if (!is_set_nonoverlapping(spec.words))
      throw OverlapError("the word set is overlapping; the explicit formula does not apply "
                         "(use the DP oracle)");
    // The inclusion-exclusion argument also needs distinct patterns that can
    // never match overlapping windows. For plain words this is implied by
    // set nonoverlap; wildcard patterns can agree on a shared window (e.g.
    // 0?1 and 011 both matching at one position), which breaks the formula.
    for (std::size_t i = 0; i < spec.words.size(); ++i) {
      for (std::size_t j = i + 1; j < spec.words.size(); ++j) {
        const auto& x = spec.words[i];
        const auto& y = spec.words[j];
        const auto ym = static_cast<std::ptrdiff_t>(y.size());
        const auto xm = static_cast<std::ptrdiff_t>(x.size());
        for (std::ptrdiff_t offset = -(ym - 1); offset < xm; ++offset) {
          if (compatible_at(x, y, offset))
            throw OverlapError("patterns " + x.str() + " and " + y.str() +
                               " can match overlapping windows; the explicit formula does "
                               "not apply (use the DP oracle)");
        }
      }
    }
  }
  SpecView view;
  view.n = spec.n;
  view.l = spec.words.size();
  view.min_len = spec.words.front().size();
  for (const auto& w : spec.words) {
    view.lengths.push_back(w.size());
    view.probs.push_back(spec.model.word_prob(w));
    view.min_len = std::min<std::uint64_t>(view.min_len, w.size());
  }
  return view;
}

ExactPMF point_mass_at_zero(std::size_t l) {
  ExactPMF pmf;
  pmf.support.push_back(std::vector<std::uint64_t>(l, 0));
  pmf.mass.push_back(Rational(1));
  return pmf;
}

/// Visits every k with componentwise k >= base and sum lengths[i]*k[i] <= n.
template <typename Visit>
void walk_polytope(const SpecView& view, std::span<const std::uint64_t> base, Visit&& visit) {
  std::vector<std::uint64_t> k(view.l, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> void {
    if (i == view.l) {
      visit(k, used);
      return;
    }
    for (std::uint64_t ki = base.empty() ? 0 : base[i];; ++ki) {
      const std::uint64_t cost = used + view.lengths[i] * ki;
      if (cost > view.n) break;
      k[i] = ki;
      self(self, i + 1, cost);
    }
    k[i] = base.empty() ? 0 : base[i];
  };
  rec(rec, 0, 0);
}

std::uint64_t exact_term_count(const SpecView& view) {
  std::uint64_t total = 0;
  bool blown = false;
  walk_polytope(view, {}, [&](const std::vector<std::uint64_t>& k, std::uint64_t) {
    std::uint64_t points = 1;
    for (std::uint64_t ki : k) {
      if (points > (1ull << 40)) blown = true;
      points *= ki + 1;
    }
    total += points;
    if (total > (1ull << 62)) blown = true;
  });
  return blown ? ~0ull : total;
}

/// multinomial(M; s_1..s_l, k_1-s_1..k_l-s_l) decomposed as
/// C(M, K) * K!/(prod k_i!) * prod C(k_i, s_i) with K = sum k_i; the first
/// two factors do not depend on s.
Rational k_base_factor(const SpecView& view, std::span<const std::uint64_t> k,
                       std::uint64_t used_length) {
  std::uint64_t total_k = 0;
  for (std::uint64_t ki : k) total_k += ki;
  const std::uint64_t M = view.n - used_length + total_k;
  BigInt base = binomial(M, total_k) * multinomial(total_k, k);
  Rational value(base);
  for (std::size_t i = 0; i < view.l; ++i) value *= rational_pow(view.probs[i], k[i]);
  return value;
}

ExactPMF exact_joint(const SpecView& view, const EvalOptions& options) {
  const std::uint64_t terms = exact_term_count(view);
  if (terms > options.term_budget)
    throw BudgetError("exact enumeration needs " + std::to_string(terms) +
                      " terms (budget " + std::to_string(options.term_budget) +
                      "); use truncated mode");

  std::map<std::vector<std::uint64_t>, Rational> acc;
  std::vector<std::uint64_t> s(view.l, 0);
  walk_polytope(view, {}, [&](const std::vector<std::uint64_t>& k, std::uint64_t used) {
    const Rational base = k_base_factor(view, k, used);
    // Distribute to every s <= k.
    auto rec = [&](auto&& self, std::size_t i, const Rational& partial, std::uint64_t drops) -> void {
      if (i == view.l) {
        Rational term = partial;
        if (drops % 2 == 1) term = -term;
        acc[s] += term;
        return;
      }
      for (std::uint64_t si = 0; si <= k[i]; ++si) {
        s[i] = si;
        self(self, i + 1, partial * Rational(binomial(k[i], si)), drops + (k[i] - si));
      }
    };
    rec(rec, 0, base, 0);
  });

  ExactPMF pmf;
  for (auto& [sv, m] : acc) {
    pmf.support.push_back(sv);
    pmf.mass.push_back(m);
  }
  return pmf;
}

// --- truncated evaluation ------------------------------------------------

constexpr std::size_t kMaxTruncatedSupport = 4096;

/// P(N_i >= s) <= A_i(s) = allocation_count(n, m_i, s) P_i^s.
Rational marginal_tail_bound(const SpecView& view, std::size_t i, std::uint64_t s) {
  return Rational(allocation_count(view.n, view.lengths[i], s)) * rational_pow(view.probs[i], s);
}

/// Truncated alternating k-sum for one word (l = 1). The successor ratio is
/// bounded by eta(k) = P (n - mk) / (k + 1 - s), which decreases in k, so
/// once eta <= 1/2 the remaining tail is at most 2 |term(k+1)|.
Rational truncated_point_mass_1d(const SpecView& view, std::uint64_t s, const Rational& epsilon,
                                 Rational& error_bound) {
  const std::uint64_t n = view.n;
  const std::uint64_t m = view.lengths[0];
  const Rational& p = view.probs[0];
  Rational acc = 0;
  error_bound = 0;
  for (std::uint64_t k = s;; ++k) {
    if (m * k > n) return acc;  // finite sum exhausted: exact value
    const std::uint64_t M = n - m * k + k;
    Rational abs_term = Rational(binomial(M, k) * binomial(k, s)) * rational_pow(p, k);
    if ((k - s) % 2 == 0)
      acc += abs_term;
    else
      acc -= abs_term;
    if (m * (k + 1) > n) return acc;
    Rational eta = p * Rational(n - m * k) / Rational(k + 1 - s);
    if (eta * 2 <= 1) {
      Rational tail = Rational(2) * abs_term * eta;
      if (tail < epsilon) {
        error_bound = tail;
        return acc;
      }
    }
  }
}

/// Multivariate per-point bound: |term(k)| <= prod lambda_i^{s_i}/s_i! *
/// prod lambda_i^{d_i}/d_i! with lambda_i = n P_i and d = k - s, so the
/// tail over sum d > D is at most
///   C_s * Lambda^{D+1}/(D+1)! / (1 - Lambda/(D+2)),  Lambda = sum lambda_i.
Rational truncated_point_mass_nd(const SpecView& view, std::span<const std::uint64_t> s,
                                 const Rational& epsilon, Rational& error_bound) {
  std::vector<Rational> lambda(view.l);
  Rational lambda_total = 0;
  for (std::size_t i = 0; i < view.l; ++i) {
    lambda[i] = Rational(static_cast<unsigned long>(view.n)) * view.probs[i];
    lambda_total += lambda[i];
  }
  Rational c_s = 1;
  for (std::size_t i = 0; i < view.l; ++i) {
    c_s *= rational_pow(lambda[i], s[i]);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(s[i]));
    c_s /= Rational(fact);
  }

  std::uint64_t depth = std::max<std::uint64_t>(
      2, static_cast<std::uint64_t>(2.0 * to_double(lambda_total)) + 2);
  Rational bound;
  for (;; ++depth) {
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(depth + 1));
    Rational head = rational_pow(lambda_total, depth + 1) / Rational(fact);
    Rational ratio = lambda_total / Rational(depth + 2);
    bound = c_s * head / (Rational(1) - ratio);
    if (bound < epsilon) break;
    if (depth > (1u << 20)) throw BudgetError("truncation depth runaway");
  }
  error_bound = bound;

  // Enumerate k >= s with sum (k - s) <= depth and sum m_i k_i <= n.
  Rational acc = 0;
  std::vector<std::uint64_t> k(s.begin(), s.end());
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used, std::uint64_t drops) -> void {
    if (i == view.l) {
      std::uint64_t total_k = 0;
      for (std::uint64_t ki : k) total_k += ki;
      const std::uint64_t M = view.n - used + total_k;
      Rational term(binomial(M, total_k) * multinomial(total_k, k));
      for (std::size_t j = 0; j < view.l; ++j)
        term *= Rational(binomial(k[j], s[j])) * rational_pow(view.probs[j], k[j]);
      if (drops % 2 == 1) term = -term;
      acc += term;
      return;
    }
    for (std::uint64_t ki = s[i]; drops + (ki - s[i]) <= depth; ++ki) {
      const std::uint64_t cost = used + view.lengths[i] * ki;
      if (cost > view.n) break;
      k[i] = ki;
      self(self, i + 1, cost, drops + (ki - s[i]));
    }
    k[i] = s[i];
  };
  rec(rec, 0, 0, 0);
  return acc;
}

ExactPMF truncated_joint(const SpecView& view, const EvalOptions& options) {
  const Rational eps_tail = options.epsilon / 2;
  const Rational eps_point = options.epsilon / Rational(2 * kMaxTruncatedSupport);

  // Certified support box: per axis, stop once the allocation bound on the
  // marginal tail falls below the slice of epsilon.
  const Rational axis_slice = eps_tail / Rational(static_cast<unsigned long>(view.l));
  std::vector<std::uint64_t> box(view.l, 0);
  Rational tail_mass = 0;
  std::uint64_t box_points = 1;
  for (std::size_t i = 0; i < view.l; ++i) {
    std::uint64_t s = 0;
    while (view.lengths[i] * (s + 1) <= view.n) {
      Rational bound = marginal_tail_bound(view, i, s + 1);
      if (bound < axis_slice) {
        tail_mass += bound;
        break;
      }
      ++s;
      if (s > kMaxTruncatedSupport)
        throw BudgetError("truncated support too wide; raise epsilon or use exact mode");
    }
    box[i] = s;
    box_points *= s + 1;
    if (box_points > kMaxTruncatedSupport)
      throw BudgetError("truncated support too wide; raise epsilon or use exact mode");
  }

  ExactPMF pmf;
  pmf.mode = PmfMode::kTruncated;
  Rational worst_point_error = 0;

  std::vector<std::uint64_t> s(view.l, 0);
  auto emit = [&](auto&& self, std::size_t i) -> void {
    if (i == view.l) {
      Rational err;
      Rational mass = view.l == 1 ? truncated_point_mass_1d(view, s[0], eps_point, err)
                                  : truncated_point_mass_nd(view, s, eps_point, err);
      if (mass < 0) mass = 0;  // the exact value is within err of a nonnegative number
      worst_point_error = std::max(worst_point_error, err);
      pmf.support.push_back(s);
      pmf.mass.push_back(mass);
      return;
    }
    for (std::uint64_t si = 0; si <= box[i]; ++si) {
      s[i] = si;
      self(self, i + 1);
    }
  };
  emit(emit, 0);

  pmf.certificate = TruncationCertificate{options.epsilon, worst_point_error, tail_mass};
  return pmf;
}

}  // namespace

ExactPMF joint_pmf(const OccurrenceSpec& spec, const EvalOptions& options) {
  SpecView view = validate_spec(spec, /*require_nonoverlapping_set=*/true);
  if (spec.n < view.min_len) return point_mass_at_zero(view.l);
  ExactPMF pmf = options.mode == PmfMode::kExact ? exact_joint(view, options)
                                                 : truncated_joint(view, options);
  return pmf;
}

Rational joint_point_mass(const OccurrenceSpec& spec, std::span<const std::uint64_t> counts,
                          const EvalOptions& options) {
  SpecView view = validate_spec(spec, /*require_nonoverlapping_set=*/true);
  if (counts.size() != view.l) throw std::invalid_argument("count vector arity mismatch");
  if (spec.n < view.min_len) {
    for (std::uint64_t c : counts)
      if (c != 0) return 0;
    return 1;
  }
  std::uint64_t visited = 0;
  Rational acc = 0;
  std::vector<std::uint64_t> base(counts.begin(), counts.end());
  walk_polytope(view, base, [&](const std::vector<std::uint64_t>& k, std::uint64_t used) {
    if (++visited > options.term_budget) throw BudgetError("term budget exceeded");
    Rational term = k_base_factor(view, k, used);
    std::uint64_t drops = 0;
    for (std::size_t i = 0; i < view.l; ++i) {
      term *= Rational(binomial(k[i], counts[i]));
      drops += k[i] - counts[i];
    }
    if (drops % 2 == 1) term = -term;
    acc += term;
  });
  return acc;
}

GenPoly allocation_genfun(const OccurrenceSpec& spec, const EvalOptions& options) {
  SpecView view = validate_spec(spec, /*require_nonoverlapping_set=*/false);
  GenPoly poly(view.l);
  std::uint64_t visited = 0;
  walk_polytope(view, {}, [&](const std::vector<std::uint64_t>& k, std::uint64_t used) {
    if (++visited > options.poly_term_budget)
      throw BudgetError("allocation generating function exceeds the polynomial budget; "
                        "use the DP oracle instead");
    GenPoly::Exponents e(k.begin(), k.end());
    poly.add_term(e, k_base_factor(view, k, used));
  });
  return poly;
}

ExactPMF chain_pmf(const OccurrenceSpec& spec, const EvalOptions& options) {
  SpecView view = validate_spec(spec, /*require_nonoverlapping_set=*/false);
  if (!is_prefix_chain(spec.words))
    throw ChainError("words do not form a strictly increasing prefix chain");
  if (!is_chain_admissible(spec.words))
    throw ChainError("chain words re-occur inside each other at a nonzero shift; "
                     "the chain transform does not apply (use the DP oracle)");
  if (spec.n < view.min_len) return point_mass_at_zero(view.l);

  const GenPoly f_a = allocation_genfun(spec, options);

  // Invert u_j = z_1 + ... + z_j + 1:  z_1 = u_1 - 1, z_j = u_j - u_{j-1}.
  std::vector<GenPoly> inverse;
  for (std::size_t j = 0; j < view.l; ++j) {
    GenPoly r = GenPoly::variable(view.l, j);
    if (j == 0)
      r.add_term(GenPoly::Exponents(view.l, 0), Rational(-1));
    else {
      GenPoly::Exponents prev(view.l, 0);
      prev[j - 1] = 1;
      r.add_term(prev, Rational(-1));
    }
    inverse.push_back(std::move(r));
  }
  const GenPoly maximal_law = f_a.substitute(inverse, options.poly_term_budget);

  // Coefficients are the joint law of the maximal-occurrence counts c_j;
  // raw counts follow from t_j = sum_{i >= j} c_i (a bijection).
  ExactPMF pmf;
  std::map<std::vector<std::uint64_t>, Rational> acc;
  for (const auto& [c, coef] : maximal_law.terms()) {
    std::vector<std::uint64_t> raw(view.l, 0);
    std::uint64_t suffix = 0;
    for (std::size_t j = view.l; j-- > 0;) {
      suffix += c[j];
      raw[j] = suffix;
    }
    acc[raw] += coef;
  }
  for (auto& [sv, m] : acc) {
    if (m == 0) continue;
    pmf.support.push_back(sv);
    pmf.mass.push_back(m);
  }
  return pmf;
}

std::string PrependReduction::transform(std::string_view text) const {
  std::string out;
  out.reserve(text.size() + 1);
  out.push_back(prefix);
  out.append(text);
  return out;
}

PrependReduction prepend_reduction(std::span<const PartialWord> words) {
  if (words.empty()) throw std::invalid_argument("empty chain");
  if (!is_prefix_chain(words))
    throw ChainError("prepend reduction needs a strictly increasing prefix chain");
  const Alphabet& alphabet = words.front().alphabet();
  for (int a = 0; a < alphabet.size(); ++a) {
    const char prefix = alphabet.symbol(a);
    std::vector<PartialWord> prefixed;
    prefixed.reserve(words.size());
    for (const auto& w : words) prefixed.emplace_back(std::string(1, prefix) + w.str(), alphabet);
    if (is_chain_admissible(prefixed)) {
      return PrependReduction{std::move(prefixed), prefix};
    }
  }
  throw ChainError("reduction not applicable: no prefix symbol yields an admissible chain");
}

Rational moment(const PartialWord& word, std::uint64_t n, const IIDModel& model, unsigned t) {
  if (!is_partial_nonoverlapping(word))
    throw OverlapError("moment formula needs a nonoverlapping word");
  if (t == 0) return 1;
  const Rational p = model.word_prob(word);
  const std::uint64_t m = word.size();
  const std::uint64_t truncation = n / m;  // T = max { t : n - t|w| >= 0 }
  const std::uint64_t upper = std::min<std::uint64_t>(truncation, t);
  Rational sum = 0;
  for (std::uint64_t s = 1; s <= upper; ++s) {
    sum += Rational(surjection_count(t, s) * allocation_count(n, m, s)) * rational_pow(p, s);
  }
  return sum;
}

std::pair<Rational, Rational> mean_variance(const PartialWord& word, std::uint64_t n,
                                            const IIDModel& model) {
  const Rational p = model.word_prob(word);
  const std::uint64_t m = word.size();
  if (n < m) return {Rational(0), Rational(0)};
  const Rational mean = Rational(static_cast<unsigned long>(n - m + 1)) * p;
  // Ordered disjoint window pairs: (n - 2m + 2)(n - 2m + 1), zero when none fit.
  const std::int64_t d1 = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(m) + 2;
  const std::int64_t d2 = d1 - 1;
  Rational pairs = 0;
  if (d1 > 0 && d2 > 0) pairs = Rational(BigInt(static_cast<long>(d1)) * BigInt(static_cast<long>(d2)));
  const Rational variance = mean + pairs * p * p - mean * mean;
  return {mean, variance};
}

Rational binomial_pmf(std::uint64_t n, const Rational& p, std::uint64_t k) {
  if (k > n) return 0;
  return Rational(binomial(n, k)) * rational_pow(p, k) * rational_pow(Rational(1) - p, n - k);
}

double poisson_pmf(double lambda, std::uint64_t k) {
  if (lambda <= 0) return k == 0 ? 1.0 : 0.0;
  return std::exp(-lambda + static_cast<double>(k) * std::log(lambda) -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

ExactPMF binomial_law(std::uint64_t n, const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("p outside [0, 1]");
  ExactPMF pmf;
  pmf.support.reserve(n + 1);
  pmf.mass.reserve(n + 1);
  // mass(k+1) = mass(k) * (n-k)/(k+1) * p/(1-p), exactly.
  Rational mass = rational_pow(Rational(1) - p, n);
  if (p == 1) mass = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    if (p == 1) mass = (k == n) ? Rational(1) : Rational(0);
    pmf.support.push_back({k});
    pmf.mass.push_back(mass);
    if (k < n && p != 1 && p != 0) {
      mass *= Rational(static_cast<unsigned long>(n - k));
      mass /= Rational(static_cast<unsigned long>(k + 1));
      mass *= p / (Rational(1) - p);
    } else if (p == 0) {
      mass = 0;
    }
  }
  return pmf;
}

ExactPMF blockwise_pmf(const PartialWord& word, std::uint64_t n, const IIDModel& model) {
  const std::uint64_t blocks = n / word.size();
  return binomial_law(blocks, model.word_prob(word));
}

}  // namespace wordlaw
