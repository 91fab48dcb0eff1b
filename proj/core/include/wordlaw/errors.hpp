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

#ifndef WORDLAW_ERRORS_HPP_
#define WORDLAW_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wordlaw {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An input violates a nonoverlap precondition (the closed formulas are
/// only valid for nonoverlapping inputs).
class OverlapError : public Error {
 public:
  explicit OverlapError(const std::string& what) : Error(what) {}
};

/// The word list is not an admissible increasing chain.
class ChainError : public Error {
 public:
  explicit ChainError(const std::string& what) : Error(what) {}
};

/// A computation would exceed a configured size budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// A bit/symbol source ran out of data before the request was satisfied.
class StreamExhausted : public Error {
 public:
  explicit StreamExhausted(const std::string& what) : Error(what) {}
};

}  // namespace wordlaw

#endif  // WORDLAW_ERRORS_HPP_
