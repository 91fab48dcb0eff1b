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
// Batch front end: every subcommand validates its inputs, computes, and
// writes JSON (and CSV where it makes sense for plotting). Output files
// embed the full invocation so results are reproducible from the files
// alone. Exit code 0 only when everything succeeded; failures print a
// machine-readable error document.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wordlaw/errors.hpp"
#include "wordlaw/exact_dist.hpp"
#include "wordlaw/oracles.hpp"
#include "wordlaw/pmf_io.hpp"
#include "wordlaw/rng.hpp"
#include "wordlaw/stats.hpp"
#include "wordlaw/version.hpp"
#include "wordlaw/words.hpp"

namespace {

using namespace wordlaw;

struct CommonArgs {
  std::string alphabet = "01";
  std::vector<std::string> probs;
  bool fair = false;
  std::vector<std::string> words;
  std::uint64_t n = 0;
  std::uint64_t t = 200000;
  std::string epsilon = "1e-30";
  std::string mode = "exact";
  std::string counting = "sliding";
  std::string out;
  std::uint32_t seed = 12345;
  std::string generator = "mt19937";
  std::string extraction = "lsb";
  std::string bits_file;
  std::string format = "ascii";
  int digits = 50;
  bool exact_fractions = false;
};

void add_model_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--alphabet", args.alphabet, "Ordered alphabet symbols (default 01)");
  cmd->add_option("--probs", args.probs,
                  "Per-symbol probabilities (rationals or decimals, e.g. 1/3,0.25)")
      ->delimiter(',');
  cmd->add_flag("--fair", args.fair, "Uniform probabilities (default when --probs is absent)");
}

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--out", args.out, "Output base path (writes <out>.json and <out>.csv)");
  cmd->add_option("--digits", args.digits, "Significant digits for decimal rendering")
      ->check(CLI::Range(1, 10000));
  cmd->add_flag("--exact-fractions", args.exact_fractions,
                "Include prob_num/prob_den integer strings in JSON");
}

IIDModel build_model(const CommonArgs& args) {
  Alphabet alphabet(args.alphabet);
  if (args.probs.empty()) return IIDModel::uniform(alphabet);
  std::vector<Rational> probs;
  for (const auto& p : args.probs) probs.push_back(parse_rational(p));
  return IIDModel(std::move(alphabet), std::move(probs));
}

std::vector<PartialWord> build_words(const CommonArgs& args, const IIDModel& model) {
  if (args.words.empty()) throw std::invalid_argument("at least one -w/--word required");
  std::vector<PartialWord> words;
  for (const auto& w : args.words) words.emplace_back(w, model.alphabet());
  return words;
}

RunConfig build_config(const std::string& command, const CommonArgs& args) {
  RunConfig config;
  config.command = command;
  config.alphabet = args.alphabet;
  config.probs = args.probs;
  config.words = args.words;
  config.n = args.n;
  config.t = args.t;
  config.epsilon = args.epsilon;
  config.mode = args.mode;
  config.counting = args.counting;
  config.generator = args.generator;
  config.extraction = args.extraction;
  config.bits_file = args.bits_file;
  config.format = args.format;
  config.seed = args.seed;
  config.digits = args.digits;
  config.exact_fractions = args.exact_fractions;
  config.out = args.out;
  return config;
}

void write_outputs(const std::string& out, const std::string& json, const std::string& csv) {
  if (out.empty()) {
    std::cout << json << '\n';
    return;
  }
  write_file_atomic(out + ".json", json);
  if (!csv.empty()) write_file_atomic(out + ".csv", csv);
}

EvalOptions eval_options(const CommonArgs& args) {
  EvalOptions options;
  if (args.mode == "truncated")
    options.mode = PmfMode::kTruncated;
  else if (args.mode != "exact")
    throw std::invalid_argument("--mode must be exact or truncated");
  options.epsilon = parse_rational(args.epsilon);
  return options;
}

int cmd_dist(const CommonArgs& args, bool chain) {
  IIDModel model = build_model(args);
  auto words = build_words(args, model);
  OccurrenceSpec spec{words, args.n, model, CountingMode::kSliding};
  ExactPMF pmf;
  if (args.counting == "blockwise") {
    if (words.size() != 1)
      throw std::invalid_argument("blockwise counting handles one word at a time");
    pmf = blockwise_pmf(words[0], args.n, model);
  } else if (chain) {
    pmf = chain_pmf(spec, eval_options(args));
  } else {
    pmf = joint_pmf(spec, eval_options(args));
  }

  RunConfig config = build_config(chain ? "dist --chain" : "dist", args);
  RenderOptions render{args.digits, args.exact_fractions};
  write_outputs(args.out, pmf_json(pmf, config, render), pmf_csv(pmf, render));

  if (words.size() == 1 && args.counting == "sliding") {
    auto [mean, variance] = mean_variance(words[0], args.n, model);
    std::fprintf(stderr, "mean %s  variance %s\n", to_decimal_string(mean, 15).c_str(),
                 to_decimal_string(variance, 15).c_str());
  }
  return 0;
}

int cmd_moments(const CommonArgs& args, unsigned order) {
  IIDModel model = build_model(args);
  auto words = build_words(args, model);
  if (words.size() != 1) throw std::invalid_argument("moments takes exactly one word");

  std::string csv = "t,moment\n";
  std::string out;
  for (unsigned t = 1; t <= order; ++t) {
    Rational m = moment(words[0], args.n, model, t);
    out += (t > 1 ? ", " : "") + to_decimal_string(m, args.digits);
    csv += std::to_string(t) + "," + to_decimal_string(m, args.digits) + "\n";
  }
  std::cout << out << '\n';
  if (!args.out.empty()) write_file_atomic(args.out + ".csv", csv);
  return 0;
}

int cmd_power(const CommonArgs& args, double theta_star, unsigned wlen, double sigma,
              std::vector<double> grid) {
  if (grid.empty()) {
    for (double theta = theta_star; theta > theta_star / 2; theta -= theta_star / 100)
      grid.push_back(theta);
  }
  PowerSpec spec{theta_star, args.n, wlen, CountingMode::kSliding, sigma};
  auto points = power_curve(spec, grid);

  RunConfig config = build_config("power", args);
  config.theta_star = theta_star;
  config.wlen = wlen;
  config.sigma = sigma;
  config.grid = grid;
  write_outputs(args.out, power_json(points, config), power_csv(points));
  for (const auto& p : points)
    std::fprintf(stderr, "theta %.6f  sliding %.6f  blockwise %.6f\n", p.theta, p.sliding,
                 p.blockwise);
  return 0;
}

int run_audit_like(const std::string& command, const CommonArgs& args) {
  IIDModel model = build_model(args);
  auto words = build_words(args, model);
  if (words.size() != 1) throw std::invalid_argument(command + " takes exactly one word");

  AuditReport report;
  if (!args.bits_file.empty()) {
    auto bits = read_bits(args.bits_file, parse_bit_format(args.format));
    VectorBitSource source(std::move(bits));
    report = bit_source_audit(source, args.n, args.t, words[0], model);
  } else {
    AuditConfig audit;
    audit.generator = parse_generator_id(args.generator);
    audit.seed = args.seed;
    audit.extraction = parse_extraction(args.extraction);
    audit.n = args.n;
    audit.t = args.t;
    report = rng_audit(audit, words[0], model);
  }

  RunConfig config = build_config(command, args);
  RenderOptions render{args.digits, args.exact_fractions};
  write_outputs(args.out, audit_json(report, config, render), audit_csv(report, render));
  std::fprintf(stderr, "D %s  p-value %.6g  (t=%llu)\n", to_decimal_string(report.ks.d, 8).c_str(),
               report.ks.p_value, static_cast<unsigned long long>(report.ks.t));
  return 0;
}

int cmd_overlap(const CommonArgs& args, bool chain_check) {
  IIDModel model = build_model(args);
  auto words = build_words(args, model);

  std::string json = "{\n  \"words\": [";
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    json += (i ? ", " : "") + std::string("\n    {\"word\": \"") + w.str() + "\"";
    if (w.is_complete())
      json += std::string(", \"self_overlapping\": ") +
              (is_self_overlapping(w) ? "true" : "false");
    json += std::string(", \"nonoverlapping\": ") +
            (is_partial_nonoverlapping(w) ? "true" : "false") + "}";
  }
  json += "\n  ],\n";
  json += std::string("  \"set_nonoverlapping\": ") +
          (is_set_nonoverlapping(words) ? "true" : "false");
  if (chain_check) {
    json += std::string(",\n  \"prefix_chain\": ") + (is_prefix_chain(words) ? "true" : "false");
    json += std::string(",\n  \"chain_admissible\": ") +
            (is_chain_admissible(words) ? "true" : "false");
  }
  json += "\n}";
  if (args.out.empty())
    std::cout << json << '\n';
  else
    write_file_atomic(args.out + ".json", json);
  return 0;
}

int cmd_partial(const CommonArgs& args, unsigned family_m, std::size_t wildcard_limit) {
  IIDModel model = build_model(args);
  std::optional<PartialWord> word;
  if (family_m > 0) {
    word = w_family(family_m);
    if (!(model.alphabet() == word->alphabet()))
      throw std::invalid_argument("the w(m) family is binary; drop --alphabet");
  } else {
    auto words = build_words(args, model);
    if (words.size() != 1) throw std::invalid_argument("partial takes exactly one word");
    word = words[0];
  }

  std::cout << word->str() << '\n';
  std::fprintf(stderr, "length %zu  wildcards %zu  tilde %s  prob %s  nonoverlapping %s\n",
               word->size(), word->wildcard_count(), tilde(*word).str().c_str(),
               to_decimal_string(model.word_prob(*word), 15).c_str(),
               is_partial_nonoverlapping(*word) ? "true" : "false");
  if (word->wildcard_count() > 0 && word->wildcard_count() <= wildcard_limit) {
    for (const auto& r : realizations(*word, wildcard_limit))
      std::fprintf(stderr, "realization %s\n", r.str().c_str());
  }
  return 0;
}

int cmd_simulate(const CommonArgs& args) {
  IIDModel model = build_model(args);
  auto words = build_words(args, model);
  OccurrenceSpec spec{words, args.n, model, CountingMode::kSliding};

  auto generator = make_generator(parse_generator_id(args.generator), args.seed);
  GeneratorBitSource bits(*generator, parse_extraction(args.extraction));
  MonteCarloResult result = monte_carlo_pmf(spec, bits, args.t);
  result.generator = generator_name(generator->id());
  result.seed = args.seed;

  RunConfig config = build_config("simulate", args);
  RenderOptions render{args.digits, args.exact_fractions};
  write_outputs(args.out, pmf_json(result.pmf, config, render), pmf_csv(result.pmf, render));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wordlaw: exact occurrence statistics of nonoverlapping (partial) words "
               "in i.i.d. strings"};
  app.set_version_flag("--version", wordlaw::kVersion);
  app.require_subcommand(1);

  CommonArgs args;

  auto* dist = app.add_subcommand("dist", "Exact joint law of sliding occurrence counts");
  bool chain = false;
  dist->add_option("-w,--word", args.words, "Pattern over the alphabet (+ '?'), repeatable")
      ->required();
  dist->add_option("-n", args.n, "Sample length")->required();
  add_model_flags(dist, args);
  dist->add_option("--mode", args.mode, "exact | truncated");
  dist->add_option("--epsilon", args.epsilon, "Certified truncation bound (truncated mode)");
  dist->add_option("--count-mode", args.counting, "sliding | blockwise");
  dist->add_flag("--chain", chain, "Treat the words as an increasing prefix chain");
  add_output_flags(dist, args);

  auto* moments = app.add_subcommand("moments", "E(N_w^t) via the surjection-number formula");
  unsigned order = 2;
  moments->add_option("-w,--word", args.words)->required();
  moments->add_option("-n", args.n)->required();
  moments->add_option("-t,--order", order, "Highest moment order");
  add_model_flags(moments, args);
  add_output_flags(moments, args);

  auto* power = app.add_subcommand("power", "Power curves: sliding vs block-wise test");
  double theta_star = 0.25;
  double sigma = 5.0;
  unsigned wlen = 2;
  std::vector<double> grid;
  power->add_option("--theta-star", theta_star, "Null word probability")->required();
  power->add_option("--wlen", wlen, "Word length")->required();
  power->add_option("-n", args.n, "Sample length")->required();
  power->add_option("--grid", grid, "Theta grid (comma separated)")->delimiter(',');
  power->add_option("--sigma", sigma, "Rejection threshold multiplier");
  add_output_flags(power, args);

  auto* kstest = app.add_subcommand("kstest",
                                    "KS test of a generator or bit file against the exact law");
  kstest->add_option("-w,--word", args.words)->required();
  kstest->add_option("-n", args.n)->required();
  kstest->add_option("-t", args.t, "Monte Carlo iterations");
  kstest->add_option("--generator", args.generator, "bsd_random | mt19937 | lcg_minstd | exact_sampler");
  kstest->add_option("--seed", args.seed);
  kstest->add_option("--extraction", args.extraction, "lsb | msb | parity | threshold");
  kstest->add_option("--bits", args.bits_file, "Bit file instead of an embedded generator");
  kstest->add_option("--format", args.format, "ascii | packed");
  add_model_flags(kstest, args);
  add_output_flags(kstest, args);

  auto* audit = app.add_subcommand("audit", "Full generator audit (exact vs binomial vs empirical)");
  audit->add_option("-w,--word", args.words)->required();
  audit->add_option("-n", args.n)->required();
  audit->add_option("-t", args.t);
  audit->add_option("--generator", args.generator);
  audit->add_option("--seed", args.seed);
  audit->add_option("--extraction", args.extraction);
  audit->add_option("--bits", args.bits_file);
  audit->add_option("--format", args.format);
  add_model_flags(audit, args);
  add_output_flags(audit, args);

  auto* overlap = app.add_subcommand("overlap", "Overlap predicates for words and sets");
  bool chain_check = false;
  overlap->add_option("-w,--word", args.words)->required();
  overlap->add_flag("--chain", chain_check, "Also report prefix-chain admissibility");
  add_model_flags(overlap, args);
  add_output_flags(overlap, args);

  auto* partial = app.add_subcommand("partial", "Partial-word tools and the w(m) family");
  unsigned family_m = 0;
  std::size_t wildcard_limit = 20;
  partial->add_option("--family", family_m, "Emit w(m) = 0^m (1?^(m-1))^(m-1) 1");
  partial->add_option("-w,--word", args.words, "Inspect a partial word");
  partial->add_option("--max-wildcards", wildcard_limit, "Realization expansion limit");
  add_model_flags(partial, args);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo empirical law from a generator");
  simulate->add_option("-w,--word", args.words)->required();
  simulate->add_option("-n", args.n)->required();
  simulate->add_option("-t", args.t)->required();
  simulate->add_option("--generator", args.generator);
  simulate->add_option("--seed", args.seed);
  simulate->add_option("--extraction", args.extraction);
  add_model_flags(simulate, args);
  add_output_flags(simulate, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist->parsed()) return cmd_dist(args, chain);
    if (moments->parsed()) return cmd_moments(args, order);
    if (power->parsed()) return cmd_power(args, theta_star, wlen, sigma, grid);
    if (kstest->parsed()) return run_audit_like("kstest", args);
    if (audit->parsed()) return run_audit_like("audit", args);
    if (overlap->parsed()) return cmd_overlap(args, chain_check);
    if (partial->parsed()) return cmd_partial(args, family_m, wildcard_limit);
    if (simulate->parsed()) return cmd_simulate(args);
  } catch (const wordlaw::OverlapError& e) {
    std::cout << wordlaw::error_json("overlap", e.what()) << '\n';
    return 1;
  } catch (const wordlaw::ChainError& e) {
    std::cout << wordlaw::error_json("chain", e.what()) << '\n';
    return 1;
  } catch (const wordlaw::BudgetError& e) {
    std::cout << wordlaw::error_json("budget", e.what()) << '\n';
    return 1;
  } catch (const wordlaw::StreamExhausted& e) {
    std::cout << wordlaw::error_json("stream", e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cout << wordlaw::error_json("invalid_argument", e.what()) << '\n';
    return 1;
  }
  return 0;
}
