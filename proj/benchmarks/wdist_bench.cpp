// Copyright 2026 The wdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "wdist/analysis.hpp"
#include "wdist/entmetrics.hpp"
#include "wdist/protocols.hpp"

namespace {

void BM_Protocol1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wdist::protocol1(0.2).fidelity);
}
BENCHMARK(BM_Protocol1);

void BM_Protocol2Explicit(benchmark::State& state) {
  const auto chain = wdist::ChainSpec::uniform(static_cast<int>(state.range(0)), 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(wdist::protocol2(chain).fidelity);
}
BENCHMARK(BM_Protocol2Explicit)->Arg(1)->Arg(3)->Arg(5);

void BM_Protocol3Explicit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(wdist::protocol3(0.2, wdist::Protocol3Mode::Explicit).fidelity);
  }
}
BENCHMARK(BM_Protocol3Explicit);

void BM_TangleReport(benchmark::State& state) {
  const auto rho = wdist::protocol1(0.2).final_state;
  for (auto _ : state) benchmark::DoNotOptimize(wdist::tangle_report(rho).tau_av);
}
BENCHMARK(BM_TangleReport);

void BM_FidelitySweep(benchmark::State& state) {
  const auto grid = wdist::default_p_grid();
  for (auto _ : state) benchmark::DoNotOptimize(wdist::fidelity_sweep(grid).rows.size());
}
BENCHMARK(BM_FidelitySweep)->Unit(benchmark::kMillisecond);

void BM_ThresholdSearch(benchmark::State& state) {
  const auto grid = wdist::default_p_grid();
  for (auto _ : state) benchmark::DoNotOptimize(wdist::protocol_threshold(1, "tau12", grid));
}
BENCHMARK(BM_ThresholdSearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
