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

#ifndef WORDLAW_WORDS_HPP_
#define WORDLAW_WORDS_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlaw/rational.hpp"

namespace wordlaw {

/// The wildcard letter: matches any single alphabet symbol.
inline constexpr char kWildcard = '?';

/// An ordered alphabet of at least two distinct symbols. '?' can never be
/// a member; it is reserved for the wildcard.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols);

  static Alphabet binary() { return Alphabet("01"); }
  static Alphabet dna() { return Alphabet("ACGT"); }

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  char symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
  /// Index of a symbol; throws std::invalid_argument if absent.
  int index(char c) const;
  const std::string& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// A pattern over the alphabet extended with '?'. A plain word is the
/// degenerate case with zero wildcards. Immutable after construction;
/// requires at least one non-wildcard letter.
class PartialWord {
 public:
  PartialWord(std::string letters, Alphabet alphabet);

  const std::string& str() const noexcept { return letters_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char at(std::size_t i) const { return letters_.at(i); }

  bool is_complete() const noexcept { return wildcards_ == 0; }
  std::size_t wildcard_count() const noexcept { return wildcards_; }
  /// Length of the tilde word (wildcards removed).
  std::size_t defined_size() const noexcept { return letters_.size() - wildcards_; }

  friend bool operator==(const PartialWord& a, const PartialWord& b) {
    return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::string letters_;
  std::size_t wildcards_ = 0;
};

/// An i.i.d. letter process: one exact probability per alphabet symbol,
/// summing to exactly 1.
class IIDModel {
 public:
  IIDModel(Alphabet alphabet, std::vector<Rational> probs);

  /// All symbols equally likely (the fair coin for the binary alphabet).
  static IIDModel uniform(Alphabet alphabet);
  static IIDModel fair_coin() { return uniform(Alphabet::binary()); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Rational& prob(int symbol_index) const { return probs_.at(static_cast<std::size_t>(symbol_index)); }
  const std::vector<Rational>& probs() const noexcept { return probs_; }

  /// P(w) = P(w~): the product of the letter probabilities of the
  /// non-wildcard letters. Equals the total probability of the
  /// realization set.
  Rational word_prob(const PartialWord& word) const;

 private:
  Alphabet alphabet_;
  std::vector<Rational> probs_;
};

enum class CountingMode {
  kSliding,    // every position i <= n - m + 1
  kBlockwise,  // the floor(n/m) disjoint aligned blocks
};

// ---------------------------------------------------------------------------
// Overlap predicates.
//
// A word is overlapping when it can occur twice inside a window shorter than
// twice its length; equivalently it has a nonempty proper border. A pair
// (x, y) is overlapping when some word shorter than |x| + |y| contains both.
// For partial words those notions are taken over the realization sets but
// decided here at the pattern level (realization sets grow as q^#wildcards;
// w(5) already has 65536 realizations).
// ---------------------------------------------------------------------------

/// True when the patterns can match simultaneously with y starting `offset`
/// positions after x (positions outside either pattern unconstrained).
bool compatible_at(const PartialWord& x, const PartialWord& y, std::ptrdiff_t offset);

/// Self-overlap of a plain word via the border characterization.
/// Throws std::invalid_argument for patterns with wildcards.
bool is_self_overlapping(const PartialWord& word);

/// Nonoverlap of a partial word: no shift d in [1, |w|-1] makes every
/// aligned position compatible. Coincides with the realization-set
/// definition (and with !is_self_overlapping for plain words).
bool is_partial_nonoverlapping(const PartialWord& word);

/// Pair overlap over the realization sets, decided at the pattern level.
/// is_pair_overlapping(x, x) coincides with self-overlap.
bool is_pair_overlapping(const PartialWord& x, const PartialWord& y);

/// True when every pair from the list (including each word with itself)
/// is nonoverlapping.
bool is_set_nonoverlapping(std::span<const PartialWord> words);

/// Strictly increasing lengths, each a literal prefix (over alphabet + '?')
/// of the next.
bool is_prefix_chain(std::span<const PartialWord> words);

/// Admissibility for the chain distribution: prefix chain, and no ordered
/// pair of chain words is compatible at any nonzero shift. This keeps every
/// occurrence of a shorter chain word either aligned with a longer one or
/// disjoint from it, which the chain transform relies on.
bool is_chain_admissible(std::span<const PartialWord> words);

/// All q^#wildcards realizations in lexicographic order. Throws BudgetError
/// when the wildcard count exceeds max_wildcards.
std::vector<PartialWord> realizations(const PartialWord& word, std::size_t max_wildcards = 20);

/// The word with all wildcards removed.
PartialWord tilde(const PartialWord& word);

/// The binary family w(m) = 0^m (1 ?^(m-1))^(m-1) 1: nonoverlapping for all
/// m, length m^2 + 1, fair-coin probability 2^(-2m).
PartialWord w_family(unsigned m);

/// Occurrences of the pattern in the text (1-based windows [i, i+m-1],
/// i <= n - m + 1; wildcards match anything). Blockwise counts matches of
/// the floor(n/m) disjoint aligned blocks.
std::uint64_t count_occurrences(std::string_view text, const PartialWord& pattern,
                                CountingMode mode = CountingMode::kSliding);

}  // namespace wordlaw

#endif  // WORDLAW_WORDS_HPP_
