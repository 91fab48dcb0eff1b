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

#include "wordlaw/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "wordlaw/errors.hpp"

namespace wordlaw {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (c == kWildcard) throw std::invalid_argument("'?' cannot be an alphabet symbol");
    auto& slot = index_[static_cast<unsigned char>(c)];
    if (slot >= 0) throw std::invalid_argument("duplicate alphabet symbol");
    slot = static_cast<std::int16_t>(i);
  }
}

int Alphabet::index(char c) const {
  const int i = index_[static_cast<unsigned char>(c)];
  if (i < 0) throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
  return i;
}

PartialWord::PartialWord(std::string letters, Alphabet alphabet)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty word");
  for (char c : letters_) {
    if (c == kWildcard) {
      ++wildcards_;
    } else if (!alphabet_.contains(c)) {
      throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet");
    }
  }
  if (wildcards_ == letters_.size())
    throw std::invalid_argument("partial word needs at least one non-wildcard letter");
}

IIDModel::IIDModel(Alphabet alphabet, std::vector<Rational> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (probs_.size() != static_cast<std::size_t>(alphabet_.size()))
    throw std::invalid_argument("one probability per alphabet symbol required");
  Rational sum = 0;
  for (const Rational& p : probs_) {
    if (p < 0) throw std::invalid_argument("negative symbol probability");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("symbol probabilities must sum to exactly 1");
}

IIDModel IIDModel::uniform(Alphabet alphabet) {
  const int q = alphabet.size();
  std::vector<Rational> probs(static_cast<std::size_t>(q), Rational(1, q));
  return IIDModel(std::move(alphabet), std::move(probs));
}

Rational IIDModel::word_prob(const PartialWord& word) const {
  if (!(word.alphabet() == alphabet_))
    throw std::invalid_argument("word alphabet does not match model alphabet");
  Rational p = 1;
  for (char c : word.str()) {
    if (c != kWildcard) p *= prob(alphabet_.index(c));
  }
  return p;
}

namespace {

bool letters_compatible(char a, char b) { return a == kWildcard || b == kWildcard || a == b; }

/// Merge two equal-length patterns position-wise (letter wins over '?').
/// Only called when compatible_at(x, y, 0).
PartialWord merge_aligned(const PartialWord& x, const PartialWord& y) {
  std::string merged = x.str();
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (merged[i] == kWildcard) merged[i] = y.at(i);
  }
  return PartialWord(std::move(merged), x.alphabet());
}

}  // namespace

bool compatible_at(const PartialWord& x, const PartialWord& y, std::ptrdiff_t offset) {
  const std::ptrdiff_t xm = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t ym = static_cast<std::ptrdiff_t>(y.size());
  const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, offset);
  const std::ptrdiff_t hi = std::min(xm, offset + ym);
  for (std::ptrdiff_t i = lo; i < hi; ++i) {
    if (!letters_compatible(x.at(static_cast<std::size_t>(i)),
                            y.at(static_cast<std::size_t>(i - offset))))
      return false;
  }
  return true;
}

bool is_self_overlapping(const PartialWord& word) {
  if (!word.is_complete())
    throw std::invalid_argument("is_self_overlapping needs a plain word; "
                                "use is_partial_nonoverlapping for patterns");
  // Nonempty proper border: prefix of length b equals suffix of length b.
  const std::string& w = word.str();
  const std::size_t m = w.size();
  for (std::size_t b = 1; b < m; ++b) {
    if (w.compare(0, b, w, m - b, b) == 0) return true;
  }
  return false;
}

bool is_partial_nonoverlapping(const PartialWord& word) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(word.size());
  for (std::ptrdiff_t d = 1; d < m; ++d) {
    if (compatible_at(word, word, d)) return false;
  }
  return true;
}

bool is_pair_overlapping(const PartialWord& x, const PartialWord& y) {
  if (x.str() == y.str()) return !is_partial_nonoverlapping(x);
  const std::ptrdiff_t xm = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t ym = static_cast<std::ptrdiff_t>(y.size());
  for (std::ptrdiff_t offset = -(ym - 1); offset < xm; ++offset) {
    if (!compatible_at(x, y, offset)) continue;
    if (offset == 0 && xm == ym) {
      // Same window, so the only witnesses are common realizations r; the
      // pair (r, r) is overlapping only when r occurs twice in a short
      // word, i.e. when the merged pattern itself overlaps.
      if (!is_partial_nonoverlapping(merge_aligned(x, y))) return true;
      continue;
    }
    return true;
  }
  return false;
}

bool is_set_nonoverlapping(std::span<const PartialWord> words) {
  if (words.empty()) throw std::invalid_argument("empty word set");
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!is_partial_nonoverlapping(words[i])) return false;
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (is_pair_overlapping(words[i], words[j])) return false;
    }
  }
  return true;
}

bool is_prefix_chain(std::span<const PartialWord> words) {
  if (words.empty()) throw std::invalid_argument("empty chain");
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    const auto& a = words[i];
    const auto& b = words[i + 1];
    if (a.size() >= b.size()) return false;
    if (b.str().compare(0, a.size(), a.str()) != 0) return false;
  }
  return true;
}

bool is_chain_admissible(std::span<const PartialWord> words) {
  if (!is_prefix_chain(words)) return false;
  for (const auto& x : words) {
    for (const auto& y : words) {
      const std::ptrdiff_t xm = static_cast<std::ptrdiff_t>(x.size());
      for (std::ptrdiff_t d = 1; d < xm; ++d) {
        if (compatible_at(x, y, d)) return false;
      }
    }
  }
  return true;
}

std::vector<PartialWord> realizations(const PartialWord& word, std::size_t max_wildcards) {
  if (word.wildcard_count() > max_wildcards)
    throw BudgetError("realization expansion over the wildcard limit (" +
                      std::to_string(word.wildcard_count()) + " > " +
                      std::to_string(max_wildcards) + ")");
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.at(i) == kWildcard) holes.push_back(i);
  }
  const Alphabet& alphabet = word.alphabet();
  const int q = alphabet.size();
  std::vector<PartialWord> out;
  std::string current = word.str();
  std::vector<int> odometer(holes.size(), 0);
  while (true) {
    for (std::size_t h = 0; h < holes.size(); ++h) current[holes[h]] = alphabet.symbol(odometer[h]);
    out.emplace_back(current, alphabet);
    std::size_t h = holes.size();
    while (h > 0 && ++odometer[h - 1] == q) {
      odometer[h - 1] = 0;
      --h;
    }
    if (h == 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const PartialWord& a, const PartialWord& b) { return a.str() < b.str(); });
  return out;
}

PartialWord tilde(const PartialWord& word) {
  std::string stripped;
  stripped.reserve(word.defined_size());
  for (char c : word.str()) {
    if (c != kWildcard) stripped.push_back(c);
  }
  return PartialWord(std::move(stripped), word.alphabet());
}

PartialWord w_family(unsigned m) {
  if (m < 1) throw std::invalid_argument("w(m) needs m >= 1");
  std::string w(m, '0');
  for (unsigned block = 0; block + 1 < m; ++block) {
    w.push_back('1');
    w.append(m - 1, kWildcard);
  }
  w.push_back('1');
  return PartialWord(std::move(w), Alphabet::binary());
}

std::uint64_t count_occurrences(std::string_view text, const PartialWord& pattern,
                                CountingMode mode) {
  const std::size_t m = pattern.size();
  const std::size_t n = text.size();
  if (n < m) return 0;
  auto matches_at = [&](std::size_t pos) {
    for (std::size_t j = 0; j < m; ++j) {
      const char p = pattern.at(j);
      if (p != kWildcard && text[pos + j] != p) return false;
    }
    return true;
  };
  std::uint64_t count = 0;
  if (mode == CountingMode::kSliding) {
    for (std::size_t i = 0; i + m <= n; ++i) {
      if (matches_at(i)) ++count;
    }
  } else {
    for (std::size_t i = 0; i + m <= n; i += m) {
      if (matches_at(i)) ++count;
    }
  }
  return count;
}

}  // namespace wordlaw
