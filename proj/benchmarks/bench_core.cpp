// Copyright 2026 The oscillatk Authors
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
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "oscillatk/cube_grid.hpp"
#include "oscillatk/families.hpp"
#include "oscillatk/inequality_lab.hpp"
#include "oscillatk/kcalc.hpp"
#include "oscillatk/norms.hpp"
#include "oscillatk/step_measure.hpp"

namespace {

using namespace oscillatk;

void BM_Rearrange(benchmark::State& state) {
  const StepFunction f = generate_step("random-step", 1, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rearrange(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rearrange)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_DoubleStarLq(benchmark::State& state) {
  const DecreasingStep g =
      rearrange(generate_step("random-step", 2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(double_star_lq(g, 3.0));
}
BENCHMARK(BM_DoubleStarLq)->Arg(12)->Arg(256);

void BM_LorentzNorm(benchmark::State& state) {
  const DecreasingStep g = rearrange(generate_step("random-step", 3, 256));
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_norm(g, {2.0, 3.0}));
}
BENCHMARK(BM_LorentzNorm);

void BM_InterpNorm(benchmark::State& state) {
  const ConcaveCurve k = k_curve_l1_linf(
      rearrange(generate_step("random-step", 4, static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(interp_norm(k, {0.4, 2.5}));
}
BENCHMARK(BM_InterpNorm)->Arg(12)->Arg(256);

void BM_Sharp1D(benchmark::State& state) {
  const GridFunction f =
      generate_grid("random-bmo-grid", 5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sharp_function(f));
}
BENCHMARK(BM_Sharp1D)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Sharp2D(benchmark::State& state) {
  const GridFunction f =
      generate_grid("random-bmo-grid", 6, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sharp_function(f));
}
BENCHMARK(BM_Sharp2D)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_RunCheck(benchmark::State& state, const char* name) {
  CheckSpec spec;
  spec.name = name;
  spec.trials = 10;
  for (auto _ : state) benchmark::DoNotOptimize(run_check(spec));
}
BENCHMARK_CAPTURE(BM_RunCheck, reverse_hardy, "reverse-hardy")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunCheck, good_lambda, "good-lambda")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
