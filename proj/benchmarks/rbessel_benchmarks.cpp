/*
 * Copyright 2026 The rbessel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "rbessel/circle.hpp"
#include "rbessel/deform.hpp"
#include "rbessel/genfun.hpp"
#include "rbessel/ladder.hpp"

namespace {

using namespace rbessel;

void BM_PhiDirect(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_direct(RealOrder(2.5), z));
}
BENCHMARK(BM_PhiDirect)->Arg(1)->Arg(5)->Arg(20);

void BM_LadderExact(benchmark::State& state) {
  const auto s = phi_series_exact(0, 30);
  for (auto _ : state) benchmark::DoNotOptimize(ladder_series(s, RealOrder(0.0), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LadderExact)->Arg(-5)->Arg(5);

void BM_DeformFourier(benchmark::State& state) {
  DeformationPlan p;
  p.lambda = 0.5;
  p.window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deform_phi(0, 1.0, p));
}
BENCHMARK(BM_DeformFourier)->Arg(40)->Arg(160);

void BM_DeformTaylor(benchmark::State& state) {
  DeformationPlan p;
  p.lambda = 0.5;
  p.strategy = Strategy::taylor_operator;
  p.taylor_order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deform_phi(0, 1.0, p));
}
BENCHMARK(BM_DeformTaylor)->Arg(10)->Arg(20);

void BM_Spectrum(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto p = Prepotential::smooth(M);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(p, 0.5, M));
}
BENCHMARK(BM_Spectrum)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_DeformedState(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const auto p = Prepotential::alternating(M);
  for (auto _ : state) benchmark::DoNotOptimize(deformed_state(0, 0.5, p, M, SummationMethod::abel(0.999)));
}
BENCHMARK(BM_DeformedState)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_GenFun(benchmark::State& state) {
  const GenFunWindow w{};
  for (auto _ : state) benchmark::DoNotOptimize(Phi(2.0, std::polar(1.0, 1.0), w));
}
BENCHMARK(BM_GenFun);

}  // namespace

BENCHMARK_MAIN();
