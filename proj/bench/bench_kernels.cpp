// Copyright 2026 The pssynth Authors
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

// Gate kernels at one thread and at every thread, against the dense
// reference, plus end-to-end runs and seed sweeps.
//
//   ./build/bench/pssynth_bench --benchmark_filter=Single

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pssynth/kernels.hpp"
#include "pssynth/runner.hpp"
#include "reference/dense_reference.hpp"

namespace {

using pssynth::Amplitude;

std::vector<Amplitude> random_amplitudes(int n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> normal;
  std::vector<Amplitude> v(std::size_t{1} << n);
  for (auto& a : v) a = {normal(rng), normal(rng)};
  const double scale = 1.0 / std::sqrt(pssynth::kernels::norm_squared(v));
  for (auto& a : v) a *= scale;
  return v;
}

void thread_args(benchmark::internal::Benchmark* b) {
  const int max_threads = omp_get_max_threads();
  for (const int n : {10, 14, 18, 22}) {
    b->Args({n, 1});
    if (max_threads > 1) b->Args({n, max_threads});
  }
}

void BM_ApplySingle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  auto v = random_amplitudes(n);
  const double s = 1.0 / std::sqrt(2.0);
  const pssynth::kernels::Matrix2 h{Amplitude{s}, Amplitude{s}, Amplitude{s}, Amplitude{-s}};
  for (auto _ : state) {
    pssynth::kernels::apply_single(v, static_cast<unsigned>(n / 2), h);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_ApplySingle)->Apply(thread_args)->ArgNames({"qubits", "threads"});

void BM_ApplyCnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  auto v = random_amplitudes(n);
  for (auto _ : state) {
    pssynth::kernels::apply_cnot(v, static_cast<unsigned>(n - 1), 0);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_ApplyCnot)->Apply(thread_args)->ArgNames({"qubits", "threads"});

void BM_InnerProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  const auto a = random_amplitudes(n);
  auto b = a;
  std::reverse(b.begin(), b.end());
  for (auto _ : state) benchmark::DoNotOptimize(pssynth::kernels::inner_product(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}
BENCHMARK(BM_InnerProduct)->Apply(thread_args)->ArgNames({"qubits", "threads"});

void BM_ReferenceApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto v = random_amplitudes(n);
  const auto gate = pssynth::GateInstruction::single(pssynth::GateKind::H, static_cast<pssynth::Qubit>(n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(pssynth::reference::apply(v, n, gate));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_ReferenceApply)->DenseRange(2, 10, 2)->ArgName("qubits");

void BM_RunExperiment(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto cfg = pssynth::default_config(n);
  cfg.episodes = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(pssynth::run_experiment(cfg).summary.distinct_circuits);
  state.SetItemsProcessed(state.iterations() * cfg.episodes);
}
BENCHMARK(BM_RunExperiment)->DenseRange(2, 5)->ArgName("qubits")->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  auto cfg = pssynth::default_config(3);
  cfg.episodes = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(pssynth::run_sweep(cfg, 8).size());
}
BENCHMARK(BM_Sweep)
    ->Apply([](benchmark::internal::Benchmark* b) {
      b->Arg(1);
      if (omp_get_max_threads() > 1) b->Arg(omp_get_max_threads());
    })
    ->ArgName("threads")
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
