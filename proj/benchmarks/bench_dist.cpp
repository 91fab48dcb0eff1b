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

#include <benchmark/benchmark.h>

#include "wordlaw/exact_dist.hpp"
#include "wordlaw/oracles.hpp"
#include "wordlaw/rng.hpp"
#include "wordlaw/stats.hpp"

namespace {

using namespace wordlaw;

void BM_JointPmfExact_w11110_n1600(benchmark::State& state) {
  OccurrenceSpec spec{{PartialWord("11110", Alphabet::binary())}, 1600, IIDModel::fair_coin(),
                      CountingMode::kSliding};
  for (auto _ : state) {
    ExactPMF law = joint_pmf(spec);
    benchmark::DoNotOptimize(law.mass.size());
  }
}
BENCHMARK(BM_JointPmfExact_w11110_n1600)->Unit(benchmark::kMillisecond);

void BM_JointPmfTruncated_DnaScale(benchmark::State& state) {
  OccurrenceSpec spec{{PartialWord("AAAAAAAAAAAAAC", Alphabet::dna())}, 3'200'000'000ull,
                      IIDModel::uniform(Alphabet::dna()), CountingMode::kSliding};
  EvalOptions options;
  options.mode = PmfMode::kTruncated;
  for (auto _ : state) {
    ExactPMF law = joint_pmf(spec, options);
    benchmark::DoNotOptimize(law.mass.size());
  }
}
BENCHMARK(BM_JointPmfTruncated_DnaScale)->Unit(benchmark::kMillisecond);

void BM_AutomatonDp_w8_n300(benchmark::State& state) {
  OccurrenceSpec spec{{PartialWord("00011101", Alphabet::binary())}, 300, IIDModel::fair_coin(),
                      CountingMode::kSliding};
  for (auto _ : state) {
    ExactPMF law = automaton_dp_law(spec);
    benchmark::DoNotOptimize(law.mass.size());
  }
}
BENCHMARK(BM_AutomatonDp_w8_n300)->Unit(benchmark::kMillisecond);

void BM_ChainPmf_n80(benchmark::State& state) {
  OccurrenceSpec spec{{PartialWord("011", Alphabet::binary()),
                       PartialWord("0111", Alphabet::binary()),
                       PartialWord("01111", Alphabet::binary())},
                      80, IIDModel::fair_coin(), CountingMode::kSliding};
  for (auto _ : state) {
    ExactPMF law = chain_pmf(spec);
    benchmark::DoNotOptimize(law.mass.size());
  }
}
BENCHMARK(BM_ChainPmf_n80)->Unit(benchmark::kMillisecond);

void BM_BsdRandomStream(benchmark::State& state) {
  BsdRandom gen(12345);
  for (auto _ : state) {
    std::uint32_t acc = 0;
    for (int i = 0; i < 1000; ++i) acc ^= gen.next();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_BsdRandomStream);

void BM_Mt19937Stream(benchmark::State& state) {
  Mt19937 gen(5489);
  for (auto _ : state) {
    std::uint32_t acc = 0;
    for (int i = 0; i < 1000; ++i) acc ^= gen.next();
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Mt19937Stream);

void BM_MonteCarloCounting_n1600(benchmark::State& state) {
  OccurrenceSpec spec{{PartialWord("11110", Alphabet::binary())}, 1600, IIDModel::fair_coin(),
                      CountingMode::kSliding};
  Mt19937 gen(5489);
  GeneratorBitSource bits(gen, BitExtraction::kLsb);
  for (auto _ : state) {
    MonteCarloResult result = monte_carlo_pmf(spec, bits, 100);
    benchmark::DoNotOptimize(result.sorted_counts.size());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_MonteCarloCounting_n1600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
