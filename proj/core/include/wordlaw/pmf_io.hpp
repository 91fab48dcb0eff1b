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

#ifndef WORDLAW_PMF_IO_HPP_
#define WORDLAW_PMF_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordlaw/exact_dist.hpp"
#include "wordlaw/stats.hpp"

namespace wordlaw {

/// The full invocation record. Echoed verbatim into every output file so a
/// run can be reproduced from its own output.
struct RunConfig {
  std::string command;
  std::string alphabet = "01";
  std::vector<std::string> probs;  // empty means uniform
  std::vector<std::string> words;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::string epsilon = "1e-30";
  std::string mode = "exact";         // exact | truncated
  std::string counting = "sliding";   // sliding | blockwise
  std::string generator;
  std::string extraction = "lsb";
  std::string bits_file;
  std::string format = "ascii";
  std::uint32_t seed = 0;
  int digits = 50;
  bool exact_fractions = false;  // include prob_num/prob_den fields
  double sigma = 5.0;
  double theta_star = 0.0;
  unsigned wlen = 0;
  std::vector<double> grid;
  std::string out;

  std::string to_json() const;
};

struct RenderOptions {
  int digits = 50;
  bool exact_fractions = false;
};

// JSON documents (nlohmann behind the scenes; the public surface is plain
// strings so the installable core does not leak the vendored header).
std::string pmf_json(const ExactPMF& pmf, const RunConfig& config, const RenderOptions& render);
std::string audit_json(const AuditReport& report, const RunConfig& config,
                       const RenderOptions& render);
std::string power_json(std::span<const PowerPoint> points, const RunConfig& config);
std::string error_json(const std::string& type, const std::string& message);

// CSV exports for plotting.
std::string pmf_csv(const ExactPMF& pmf, const RenderOptions& render);
/// Columns: count, exact, binomial, empirical.
std::string audit_csv(const AuditReport& report, const RenderOptions& render);
/// Columns: theta, power_sliding, power_blockwise.
std::string power_csv(std::span<const PowerPoint> points);

/// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wordlaw

#endif  // WORDLAW_PMF_IO_HPP_
