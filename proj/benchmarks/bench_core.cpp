// Copyright 2026 The qemlab Authors
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

#include "qemlab/checks.hpp"
#include "qemlab/circuit_ops.hpp"
#include "qemlab/fit.hpp"
#include "qemlab/frame_sampler.hpp"
#include "qemlab/statevector.hpp"
#include "qemlab/trajectory.hpp"

namespace {

using namespace qem;

void BM_PauliMultiply(benchmark::State& state) {
  Rng rng(1);
  PauliString p = PauliString::identity(24);
  p.x = rng.bits(24);
  p.z = rng.bits(24);
  PauliString q = PauliString::identity(24);
  q.x = rng.bits(24);
  q.z = rng.bits(24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(p, q));
  }
}
BENCHMARK(BM_PauliMultiply);

void BM_TableauConjugate(benchmark::State& state) {
  const auto n = static_cast<uint32_t>(state.range(0));
  Rng rng(2);
  const CliffordTableau t = random_clifford(n, rng);
  PauliString p = PauliString::identity(n);
  p.x = rng.bits(n);
  p.z = rng.bits(n) | 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.conjugate(p));
  }
}
BENCHMARK(BM_TableauConjugate)->Arg(4)->Arg(8)->Arg(16);

void BM_SampleRandomClifford(benchmark::State& state) {
  const auto n = static_cast<uint32_t>(state.range(0));
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_random_clifford(n, rng));
  }
}
BENCHMARK(BM_SampleRandomClifford)->Arg(4)->Arg(8);

void BM_FrameShots(benchmark::State& state) {
  const Circuit payload = random_clifford_circuit(8, 40, 7);
  SandwichPlan plan;
  plan.payload = payload;
  for (uint32_t j = 0; j < 4; ++j) {
    plan.layers.push_back(find_check_pair(payload, PauliString::single_z(8, j)).value());
  }
  const auto sandwich = build_sandwich(plan);
  NoiseModel noise;
  noise.p1 = 5e-4;
  noise.p2 = 5e-3;
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_shots_frames(sandwich.circuit, noise, 1000, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_FrameShots);

void BM_StatevectorShots(benchmark::State& state) {
  const Circuit prep = standin_prep(8, 2, 9);
  NoiseModel noise;
  noise.p1 = 0.002;
  noise.p2 = 0.02;
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_shots(prep, noise, 100, ++seed));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_StatevectorShots);

void BM_ExponentialFit(benchmark::State& state) {
  std::vector<SeriesPoint> pts;
  for (int m = 1; m <= 4; ++m) {
    pts.push_back(SeriesPoint{static_cast<double>(m), 0.9 - 0.2 * std::pow(0.7, m), 0});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_exponential(pts, 8));
  }
}
BENCHMARK(BM_ExponentialFit);

}  // namespace

BENCHMARK_MAIN();
