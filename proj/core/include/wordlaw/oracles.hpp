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

#ifndef WORDLAW_ORACLES_HPP_
#define WORDLAW_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlaw/exact_dist.hpp"
#include "wordlaw/rng.hpp"
#include "wordlaw/words.hpp"

namespace wordlaw {

// Independent ground truth: exhaustive enumeration, automaton dynamic
// programming, and Monte Carlo. None of these share code with the
// inclusion-exclusion formulas they check, and the DP handles overlapping
// words the formulas reject.

/// A deterministic multi-pattern counting automaton (shift-and states,
/// wildcards compiled into the transitions directly). Replaying a string
/// emits, per step, the set of patterns whose occurrence ends there.
class CountAutomaton {
 public:
  CountAutomaton(std::span<const PartialWord> patterns, std::size_t max_states = 65536);

  std::size_t state_count() const { return transitions_.size(); }
  std::size_t pattern_count() const { return pattern_lengths_.size(); }
  int alphabet_size() const { return alphabet_size_; }
  std::size_t initial_state() const { return 0; }

  std::size_t transition(std::size_t state, int symbol) const {
    return transitions_[state][static_cast<std::size_t>(symbol)];
  }
  /// Bitmask over patterns completed by this step.
  std::uint32_t emission(std::size_t state, int symbol) const {
    return emissions_[state][static_cast<std::size_t>(symbol)];
  }

  /// Occurrence counts per pattern over a whole text.
  std::vector<std::uint64_t> replay(std::string_view text) const;

 private:
  Alphabet alphabet_;
  int alphabet_size_;
  std::vector<std::size_t> pattern_lengths_;
  std::vector<std::vector<std::uint64_t>> match_masks_;  // [pattern][symbol]
  std::vector<std::vector<std::size_t>> transitions_;    // [state][symbol]
  std::vector<std::vector<std::uint32_t>> emissions_;    // [state][symbol]
};

/// Exhaustive enumeration of all q^n strings, each weighted by its exact
/// model probability. Throws BudgetError when q^n exceeds the budget.
ExactPMF brute_force_joint_pmf(const OccurrenceSpec& spec, std::uint64_t budget = (1u << 24));

struct DpResult {
  ExactPMF pmf;
  /// Mass aggregated above the count caps (zero when the caps cover the
  /// whole range).
  Rational overflow_mass;
  std::vector<std::uint64_t> caps;
};

/// Exact dynamic programming over (position, automaton state, count
/// vector). Valid for overlapping words too. Empty caps default to the
/// maximal possible counts (no overflow bucket).
DpResult automaton_dp_pmf(const OccurrenceSpec& spec, std::vector<std::uint64_t> caps = {},
                          std::uint64_t cell_budget = 50'000'000);

/// Convenience: the DP law with full caps.
ExactPMF automaton_dp_law(const OccurrenceSpec& spec);

/// Empirical distribution from t simulated samples of length n.
struct MonteCarloResult {
  ExactPMF pmf;  // masses are exact counts/t
  /// Sorted per-sample counts of the first pattern (the KS input).
  std::vector<std::uint64_t> sorted_counts;
  std::string generator;
  std::uint32_t seed = 0;
  std::uint64_t iterations = 0;
  std::uint64_t n = 0;
};

/// Samples t strings of length n from the model, symbols drawn from the
/// bit source (binary uniform models consume one bit per symbol; other
/// models consume 32 bits per symbol via inverse CDF). One continuous
/// stream; the generator identity and seed are recorded by the caller.
MonteCarloResult monte_carlo_pmf(const OccurrenceSpec& spec, BitSource& bits, std::uint64_t t);

/// Null-calibration sampler: draws counts directly from a one-dimensional
/// exact law by inverse CDF over 64-bit uniforms.
MonteCarloResult exact_sampler_pmf(const ExactPMF& law, std::uint32_t seed, std::uint64_t t);

}  // namespace wordlaw

#endif  // WORDLAW_ORACLES_HPP_
