// Copyright 2026 The lricwalk Authors
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

// Serial vs OpenMP comparisons for the coherent commutator kernel, a full
// integrator step, and the mixing sweep.

#include <benchmark/benchmark.h>

#include <random>

#include "lric/dephasing.hpp"
#include "lric/kernels.hpp"
#include "lric/mixing.hpp"

namespace {

lric::ComplexMatrix random_state(int n) {
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  lric::ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = {nd(rng), nd(rng)};
  lric::ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

lric::LricSpec spec_for(int n) { return lric::LricSpec(n, n / 4 + 1); }

void BM_CommutatorSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = spec_for(n);
  const auto rho = random_state(n);
  lric::ComplexMatrix out;
  for (auto _ : state) {
    lric::kernels::coherent_commutator_serial(spec, rho, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_CommutatorOmp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = spec_for(n);
  const auto rho = random_state(n);
  lric::ComplexMatrix out;
  for (auto _ : state) {
    lric::kernels::coherent_commutator_omp(spec, rho, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

void BM_Evolve(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = spec_for(n);
  lric::IntegratorSettings settings;
  settings.parallel_kernel = parallel;
  settings.warmup_time = 0.0;
  const auto rho0 = lric::DensityMatrix::localized(n, 0);
  for (auto _ : state) {
    auto rho = lric::evolve(rho0, spec, 50.0, 1.0, settings);
    benchmark::DoNotOptimize(rho.rho.data());
  }
}

lric::SweepGrid bench_grid() {
  lric::SweepGrid g;
  g.n = {8, 12, 16};
  g.m = {2, 3};
  g.gamma = {20.0};
  g.epsilon = {0.01};
  return g;
}

void BM_SweepSerial(benchmark::State& state) {
  lric::SandwichOptions opt;
  opt.source = lric::MixingSource::kAnalytic;
  for (auto _ : state) benchmark::DoNotOptimize(lric::run_sweep_serial(bench_grid(), opt));
}

void BM_SweepOmp(benchmark::State& state) {
  lric::SandwichOptions opt;
  opt.source = lric::MixingSource::kAnalytic;
  for (auto _ : state) benchmark::DoNotOptimize(lric::run_sweep(bench_grid(), opt));
}

}  // namespace

BENCHMARK(BM_CommutatorSerial)->Arg(16)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_CommutatorOmp)->Arg(16)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_Evolve, serial, false)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Evolve, omp, true)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOmp)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
