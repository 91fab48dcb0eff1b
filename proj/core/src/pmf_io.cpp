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

#include "wordlaw/pmf_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wordlaw/errors.hpp"
#include "wordlaw/version.hpp"

namespace wordlaw {

namespace {

using Json = nlohmann::ordered_json;

Json config_to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["alphabet"] = c.alphabet;
  j["probs"] = c.probs;
  j["words"] = c.words;
  j["n"] = c.n;
  j["t"] = c.t;
  j["epsilon"] = c.epsilon;
  j["mode"] = c.mode;
  j["counting"] = c.counting;
  j["generator"] = c.generator;
  j["extraction"] = c.extraction;
  j["bits_file"] = c.bits_file;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["digits"] = c.digits;
  j["exact_fractions"] = c.exact_fractions;
  j["sigma"] = c.sigma;
  j["theta_star"] = c.theta_star;
  j["wlen"] = c.wlen;
  j["grid"] = c.grid;
  j["out"] = c.out;
  return j;
}

Json pmf_to_json_value(const ExactPMF& pmf, const RenderOptions& render) {
  Json j;
  j["mode"] = pmf.mode == PmfMode::kExact ? "exact" : "truncated";
  Json rows = Json::array();
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    Json row;
    row["counts"] = pmf.support[i];
    row["prob"] = to_decimal_string(pmf.mass[i], render.digits);
    if (render.exact_fractions) {
      row["prob_num"] = pmf.mass[i].get_num().get_str();
      row["prob_den"] = pmf.mass[i].get_den().get_str();
    }
    rows.push_back(std::move(row));
  }
  j["support"] = std::move(rows);
  j["total_mass"] = to_decimal_string(pmf.total_mass(), render.digits);
  if (pmf.dimension() == 1) {
    const Rational mean = pmf.power_sum(1);
    const Rational var = pmf.power_sum(2) - mean * mean;
    j["mean"] = to_decimal_string(mean, render.digits);
    j["variance"] = to_decimal_string(var, render.digits);
  }
  if (pmf.certificate) {
    Json cert;
    cert["epsilon"] = to_decimal_string(pmf.certificate->epsilon, 10);
    cert["point_error_bound"] = to_decimal_string(pmf.certificate->point_error_bound, 10);
    cert["tail_mass_bound"] = to_decimal_string(pmf.certificate->tail_mass_bound, 10);
    j["certificate"] = std::move(cert);
  }
  return j;
}

Json document(const char* kind, const RunConfig& config) {
  Json j;
  j["version"] = kVersion;
  j["kind"] = kind;
  j["config"] = config_to_json(config);
  return j;
}

}  // namespace

std::string RunConfig::to_json() const { return config_to_json(*this).dump(2); }

std::string pmf_json(const ExactPMF& pmf, const RunConfig& config, const RenderOptions& render) {
  Json j = document("pmf", config);
  j["pmf"] = pmf_to_json_value(pmf, render);
  return j.dump(2);
}

std::string audit_json(const AuditReport& report, const RunConfig& config,
                       const RenderOptions& render) {
  Json j = document("audit", config);
  j["word"] = config.words.empty() ? std::string() : config.words.front();
  j["n"] = report.config.n;
  j["t"] = report.ks.t;
  j["generator"] = report.empirical.generator;
  j["seed"] = report.empirical.seed;
  j["extraction"] = extraction_name(report.config.extraction);
  j["ks_distance"] = to_decimal_string(report.ks.d, render.digits);
  j["p_value"] = report.ks.p_value;
  {
    const Rational mean = report.exact.power_sum(1);
    const Rational var = report.exact.power_sum(2) - mean * mean;
    j["exact_mean"] = to_decimal_string(mean, render.digits);
    j["exact_variance"] = to_decimal_string(var, render.digits);
  }
  if (report.exact.certificate) {
    j["exact_mode"] = "truncated";
  }
  return j.dump(2);
}

std::string power_json(std::span<const PowerPoint> points, const RunConfig& config) {
  Json j = document("power", config);
  Json rows = Json::array();
  for (const auto& p : points) {
    Json row;
    row["theta"] = p.theta;
    row["power_sliding"] = p.sliding;
    row["power_blockwise"] = p.blockwise;
    rows.push_back(std::move(row));
  }
  j["points"] = std::move(rows);
  return j.dump(2);
}

std::string error_json(const std::string& type, const std::string& message) {
  Json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  return j.dump(2);
}

std::string pmf_csv(const ExactPMF& pmf, const RenderOptions& render) {
  std::ostringstream out;
  const std::size_t dim = pmf.dimension();
  if (dim <= 1) {
    out << "count,prob\n";
  } else {
    for (std::size_t i = 0; i < dim; ++i) out << 's' << (i + 1) << ',';
    out << "prob\n";
  }
  for (std::size_t i = 0; i < pmf.support.size(); ++i) {
    for (std::uint64_t s : pmf.support[i]) out << s << ',';
    out << to_decimal_string(pmf.mass[i], render.digits) << '\n';
  }
  return out.str();
}

std::string audit_csv(const AuditReport& report, const RenderOptions& render) {
  // One row per count value: the three curves of the comparison figure.
  std::uint64_t max_count = 0;
  for (const auto& s : report.exact.support) max_count = std::max(max_count, s[0]);
  for (const auto& s : report.empirical.pmf.support) max_count = std::max(max_count, s[0]);

  auto lookup = [](const ExactPMF& pmf, std::uint64_t value) -> Rational {
    for (std::size_t i = 0; i < pmf.support.size(); ++i) {
      if (pmf.support[i][0] == value) return pmf.mass[i];
      if (pmf.support[i][0] > value) break;
    }
    return 0;
  };

  std::ostringstream out;
  out << "count,exact,binomial,empirical\n";
  for (std::uint64_t v = 0; v <= max_count; ++v) {
    out << v << ',' << to_decimal_string(lookup(report.exact, v), render.digits) << ','
        << to_decimal_string(lookup(report.binomial, v), render.digits) << ','
        << to_decimal_string(lookup(report.empirical.pmf, v), render.digits) << '\n';
  }
  return out.str();
}

std::string power_csv(std::span<const PowerPoint> points) {
  std::ostringstream out;
  out << "theta,power_sliding,power_blockwise\n";
  char buffer[128];
  for (const auto& p : points) {
    std::snprintf(buffer, sizeof(buffer), "%.6f,%.6f,%.6f\n", p.theta, p.sliding, p.blockwise);
    out << buffer;
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto parent = path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace wordlaw
