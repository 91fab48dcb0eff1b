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

#include "wordlaw/oracles.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "wordlaw/errors.hpp"

namespace wordlaw {

namespace {

std::string encode_state(std::span<const std::uint64_t> masks) {
  std::string key(masks.size() * sizeof(std::uint64_t), '\0');
  std::memcpy(key.data(), masks.data(), key.size());
  return key;
}

}  // namespace

CountAutomaton::CountAutomaton(std::span<const PartialWord> patterns, std::size_t max_states)
    : alphabet_(patterns.empty() ? Alphabet::binary() : patterns.front().alphabet()),
      alphabet_size_(alphabet_.size()) {
  if (patterns.empty()) throw std::invalid_argument("automaton needs at least one pattern");
  if (patterns.size() > 32) throw BudgetError("more than 32 tracked patterns");
  for (const auto& p : patterns) {
    if (!(p.alphabet() == alphabet_))
      throw std::invalid_argument("patterns must share one alphabet");
    if (p.size() > 64) throw BudgetError("pattern longer than 64 letters");
    pattern_lengths_.push_back(p.size());
  }

  // Shift-and match masks: bit j of match_masks_[i][c] is set when letter j
  // of pattern i accepts symbol c ('?' accepts everything).
  match_masks_.assign(patterns.size(),
                      std::vector<std::uint64_t>(static_cast<std::size_t>(alphabet_size_), 0));
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns[i].size(); ++j) {
      const char letter = patterns[i].at(j);
      for (int c = 0; c < alphabet_size_; ++c) {
        if (letter == kWildcard || letter == alphabet_.symbol(c))
          match_masks_[i][static_cast<std::size_t>(c)] |= std::uint64_t{1} << j;
      }
    }
  }

  // Lazy subset construction over the joint shift-and registers.
  const std::size_t l = patterns.size();
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::uint64_t>> states;
  states.emplace_back(l, 0);
  index.emplace(encode_state(states.front()), 0);
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t si = todo.front();
    todo.pop();
    if (transitions_.size() <= si) {
      transitions_.resize(si + 1);
      emissions_.resize(si + 1);
    }
    transitions_[si].assign(static_cast<std::size_t>(alphabet_size_), 0);
    emissions_[si].assign(static_cast<std::size_t>(alphabet_size_), 0);
    const std::vector<std::uint64_t> current = states[si];
    for (int c = 0; c < alphabet_size_; ++c) {
      std::vector<std::uint64_t> next(l, 0);
      std::uint32_t emitted = 0;
      for (std::size_t i = 0; i < l; ++i) {
        const std::uint64_t m = pattern_lengths_[i];
        const std::uint64_t hit = std::uint64_t{1} << (m - 1);
        std::uint64_t d = ((current[i] << 1) | 1u) & match_masks_[i][static_cast<std::size_t>(c)];
        if (d & hit) emitted |= std::uint32_t{1} << i;
        next[i] = d & (hit - 1);
      }
      auto [it, inserted] = index.emplace(encode_state(next), states.size());
      if (inserted) {
        states.push_back(next);
        if (states.size() > max_states) throw BudgetError("automaton state budget exceeded");
        todo.push(it->second);
      }
      transitions_[si][static_cast<std::size_t>(c)] = it->second;
      emissions_[si][static_cast<std::size_t>(c)] = emitted;
    }
  }
}

std::vector<std::uint64_t> CountAutomaton::replay(std::string_view text) const {
  std::vector<std::uint64_t> counts(pattern_count(), 0);
  std::size_t state = initial_state();
  for (char ch : text) {
    const int c = alphabet_.index(ch);
    const std::uint32_t emitted = emission(state, c);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (emitted & (std::uint32_t{1} << i)) ++counts[i];
    }
    state = transition(state, c);
  }
  return counts;
}

namespace {

void check_spec(const OccurrenceSpec& spec) {
  if (spec.words.empty()) throw std::invalid_argument("at least one word required");
  if (spec.n < 1) throw std::invalid_argument("sample length n must be >= 1");
  for (const auto& w : spec.words) {
    if (!(w.alphabet() == spec.model.alphabet()))
      throw std::invalid_argument("word alphabet does not match model alphabet");
  }
}

ExactPMF collect(std::map<std::vector<std::uint64_t>, Rational>&& acc) {
  ExactPMF pmf;
  for (auto& [s, m] : acc) {
    if (m == 0) continue;
    pmf.support.push_back(s);
    pmf.mass.push_back(m);
  }
  return pmf;
}

}  // namespace

ExactPMF brute_force_joint_pmf(const OccurrenceSpec& spec, std::uint64_t budget) {
  check_spec(spec);
  const int q = spec.model.alphabet().size();
  const std::uint64_t n = spec.n;
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (size > budget / static_cast<std::uint64_t>(q))
      throw BudgetError("q^n exceeds the enumeration budget");
    size *= static_cast<std::uint64_t>(q);
  }

  const CountAutomaton automaton(spec.words);
  std::map<std::vector<std::uint64_t>, Rational> acc;
  std::vector<std::uint64_t> counts(spec.words.size(), 0);

  // DFS over the prefix tree so automaton states and probabilities are
  // shared across strings with a common prefix.
  auto rec = [&](auto&& self, std::uint64_t depth, std::size_t state, const Rational& prob) -> void {
    if (depth == n) {
      acc[counts] += prob;
      return;
    }
    for (int c = 0; c < q; ++c) {
      const std::uint32_t emitted = automaton.emission(state, c);
      for (std::size_t i = 0; i < counts.size(); ++i)
        if (emitted & (std::uint32_t{1} << i)) ++counts[i];
      self(self, depth + 1, automaton.transition(state, c), prob * spec.model.prob(c));
      for (std::size_t i = 0; i < counts.size(); ++i)
        if (emitted & (std::uint32_t{1} << i)) --counts[i];
    }
  };
  rec(rec, 0, automaton.initial_state(), Rational(1));
  return collect(std::move(acc));
}

DpResult automaton_dp_pmf(const OccurrenceSpec& spec, std::vector<std::uint64_t> caps,
                          std::uint64_t cell_budget) {
  check_spec(spec);
  const std::size_t l = spec.words.size();
  const std::uint64_t n = spec.n;

  // Overlapping words can occur at every position, so the hard maximum is
  // n - m + 1, not n / m.
  std::vector<std::uint64_t> max_counts(l);
  for (std::size_t i = 0; i < l; ++i) {
    const std::uint64_t m = spec.words[i].size();
    max_counts[i] = n >= m ? n - m + 1 : 0;
  }
  if (caps.empty()) caps = max_counts;
  if (caps.size() != l) throw std::invalid_argument("one cap per pattern required");

  // Bucket i has size cap+1 plus an overflow slot when the cap truncates.
  std::vector<std::uint64_t> dims(l);
  std::vector<bool> truncated(l);
  std::uint64_t count_cells = 1;
  for (std::size_t i = 0; i < l; ++i) {
    caps[i] = std::min(caps[i], max_counts[i]);
    truncated[i] = caps[i] < max_counts[i];
    dims[i] = caps[i] + 1 + (truncated[i] ? 1 : 0);
    if (count_cells > cell_budget / dims[i]) throw BudgetError("DP count space over budget");
    count_cells *= dims[i];
  }

  const CountAutomaton automaton(spec.words);
  const std::size_t states = automaton.state_count();
  const int q = automaton.alphabet_size();
  if (static_cast<std::uint64_t>(states) * count_cells > cell_budget ||
      static_cast<std::uint64_t>(states) * count_cells * n >
          cell_budget * std::max<std::uint64_t>(n, 1))
    throw BudgetError("DP table over budget");
  const std::size_t cells = states * static_cast<std::size_t>(count_cells);

  // Strides for the mixed-radix count index.
  std::vector<std::uint64_t> stride(l, 1);
  for (std::size_t i = 1; i < l; ++i) stride[i] = stride[i - 1] * dims[i - 1];

  std::vector<Rational> dp(cells, Rational(0));
  std::vector<Rational> next(cells, Rational(0));
  dp[0] = 1;

  for (std::uint64_t pos = 0; pos < n; ++pos) {
    for (auto& cell : next) cell = 0;
    for (std::size_t st = 0; st < states; ++st) {
      for (std::uint64_t ci = 0; ci < count_cells; ++ci) {
        const Rational& p = dp[st * count_cells + ci];
        if (p == 0) continue;
        for (int c = 0; c < q; ++c) {
          const std::uint32_t emitted = automaton.emission(st, c);
          std::uint64_t ci2 = ci;
          if (emitted != 0) {
            for (std::size_t i = 0; i < l; ++i) {
              if (!(emitted & (std::uint32_t{1} << i))) continue;
              const std::uint64_t digit = (ci2 / stride[i]) % dims[i];
              // Saturate in the last slot (the overflow bucket when capped;
              // unreachable otherwise since caps equal the maximal counts).
              if (digit + 1 < dims[i]) ci2 += stride[i];
            }
          }
          next[automaton.transition(st, c) * count_cells + ci2] += p * spec.model.prob(c);
        }
      }
    }
    dp.swap(next);
  }

  std::map<std::vector<std::uint64_t>, Rational> acc;
  Rational overflow = 0;
  for (std::size_t st = 0; st < states; ++st) {
    for (std::uint64_t ci = 0; ci < count_cells; ++ci) {
      const Rational& p = dp[st * count_cells + ci];
      if (p == 0) continue;
      std::vector<std::uint64_t> counts(l);
      bool in_overflow = false;
      for (std::size_t i = 0; i < l; ++i) {
        const std::uint64_t digit = (ci / stride[i]) % dims[i];
        if (truncated[i] && digit == dims[i] - 1) in_overflow = true;
        counts[i] = digit;
      }
      if (in_overflow)
        overflow += p;
      else
        acc[counts] += p;
    }
  }

  DpResult result;
  result.pmf = collect(std::move(acc));
  result.overflow_mass = overflow;
  result.caps = std::move(caps);
  return result;
}

ExactPMF automaton_dp_law(const OccurrenceSpec& spec) { return automaton_dp_pmf(spec).pmf; }

namespace {

/// Draws alphabet symbols from a bit source. Binary uniform models use one
/// bit per symbol; everything else goes through a 64-bit inverse CDF.
class SymbolSampler {
 public:
  SymbolSampler(const IIDModel& model, BitSource& bits) : bits_(bits) {
    const int q = model.alphabet().size();
    uniform_binary_ = q == 2 && model.prob(0) == Rational(1, 2);
    if (uniform_binary_) return;
    Rational cum = 0;
    BigInt two64 = BigInt(1) << 64;
    for (int c = 0; c < q; ++c) {
      cum += model.prob(c);
      BigInt threshold = (cum.get_num() * two64) / cum.get_den();
      if (threshold > two64) threshold = two64;
      thresholds_.push_back(threshold);
    }
  }

  int next() {
    if (uniform_binary_) return bits_.next_bit();
    std::uint64_t u = 0;
    for (int i = 0; i < 64; ++i) u = (u << 1) | static_cast<std::uint64_t>(bits_.next_bit());
    BigInt value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    for (std::size_t c = 0; c < thresholds_.size(); ++c) {
      if (value < thresholds_[c]) return static_cast<int>(c);
    }
    return static_cast<int>(thresholds_.size()) - 1;
  }

 private:
  BitSource& bits_;
  bool uniform_binary_ = false;
  std::vector<BigInt> thresholds_;
};

}  // namespace

MonteCarloResult monte_carlo_pmf(const OccurrenceSpec& spec, BitSource& bits, std::uint64_t t) {
  check_spec(spec);
  if (t < 1) throw std::invalid_argument("at least one iteration required");
  const CountAutomaton automaton(spec.words);
  SymbolSampler symbols(spec.model, bits);
  const std::size_t l = spec.words.size();

  std::map<std::vector<std::uint64_t>, std::uint64_t> histogram;
  std::vector<std::uint64_t> first_counts;
  first_counts.reserve(t);
  std::vector<std::uint64_t> counts(l);

  for (std::uint64_t it = 0; it < t; ++it) {
    std::fill(counts.begin(), counts.end(), 0);
    std::size_t state = automaton.initial_state();
    for (std::uint64_t pos = 0; pos < spec.n; ++pos) {
      const int c = symbols.next();
      const std::uint32_t emitted = automaton.emission(state, c);
      if (emitted != 0) {
        for (std::size_t i = 0; i < l; ++i)
          if (emitted & (std::uint32_t{1} << i)) ++counts[i];
      }
      state = automaton.transition(state, c);
    }
    ++histogram[counts];
    first_counts.push_back(counts[0]);
  }

  MonteCarloResult result;
  for (auto& [s, c] : histogram) {
    result.pmf.support.push_back(s);
    result.pmf.mass.push_back(Rational(static_cast<unsigned long>(c), static_cast<unsigned long>(t)));
  }
  std::sort(first_counts.begin(), first_counts.end());
  result.sorted_counts = std::move(first_counts);
  result.iterations = t;
  result.n = spec.n;
  return result;
}

MonteCarloResult exact_sampler_pmf(const ExactPMF& law, std::uint32_t seed, std::uint64_t t) {
  if (law.dimension() != 1) throw std::invalid_argument("exact sampler needs a 1-d law");
  if (t < 1) throw std::invalid_argument("at least one iteration required");

  // 64-bit inverse CDF thresholds.
  std::vector<std::uint64_t> thresholds;
  Rational cum = 0;
  BigInt two64 = BigInt(1) << 64;
  for (const Rational& m : law.mass) {
    cum += m;
    BigInt threshold = (cum.get_num() * two64) / cum.get_den();
    std::uint64_t packed = 0;
    if (threshold >= two64) {
      packed = ~std::uint64_t{0};
    } else {
      mpz_export(&packed, nullptr, 1, sizeof(packed), 0, 0, threshold.get_mpz_t());
    }
    thresholds.push_back(packed);
  }

  Mt19937 gen(seed);
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::vector<std::uint64_t> samples;
  samples.reserve(t);
  for (std::uint64_t it = 0; it < t; ++it) {
    const std::uint64_t u =
        (static_cast<std::uint64_t>(gen.next()) << 32) | static_cast<std::uint64_t>(gen.next());
    std::size_t idx = std::lower_bound(thresholds.begin(), thresholds.end(), u) - thresholds.begin();
    if (idx >= law.support.size()) idx = law.support.size() - 1;
    const std::uint64_t value = law.support[idx][0];
    ++histogram[value];
    samples.push_back(value);
  }

  MonteCarloResult result;
  for (auto& [s, c] : histogram) {
    result.pmf.support.push_back({s});
    result.pmf.mass.push_back(Rational(static_cast<unsigned long>(c), static_cast<unsigned long>(t)));
  }
  std::sort(samples.begin(), samples.end());
  result.sorted_counts = std::move(samples);
  result.generator = "exact_sampler";
  result.seed = seed;
  result.iterations = t;
  return result;
}

}  // namespace wordlaw
