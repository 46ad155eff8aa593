// Copyright 2026 The qmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "qmeas/correlations.hpp"
#include "qmeas/entropy.hpp"
#include "qmeas/linalg.hpp"
#include "qmeas/measurement.hpp"
#include "qmeas/random.hpp"

namespace {

using namespace qmeas;

MeasurementModel model(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed, 0);
  MeasurementModel m;
  m.system_amplitudes = random_unit_vector(rng, d);
  m.apparatus_spectrum = random_probabilities(rng, n);
  m.apparatus_basis = random_unitary(rng, n);
  return m;
}

OptimizerConfig quick() {
  OptimizerConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 100;
  cfg.seed = 5;
  return cfg;
}

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1, 0);
  const ComplexMatrix h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(4)->Arg(9)->Arg(16)->Arg(36)->Arg(64);

void BM_VonNeumannEntropy(benchmark::State& state) {
  Rng rng(2, 0);
  const DensityMatrix rho = random_density_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->Arg(4)->Arg(16)->Arg(64);

void BM_RunMeasurement(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MeasurementModel m = model(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(run_measurement(m));
}
BENCHMARK(BM_RunMeasurement)->DenseRange(2, 4);

void BM_ClassicalCorrelations(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MeasurementOutcome o = run_measurement(model(n, n, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical_correlations(o.rho_f_dephased, Side::B, quick()));
  }
}
BENCHMARK(BM_ClassicalCorrelations)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_EntanglementEstimate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MeasurementOutcome o = run_measurement(model(n, n, 6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(relative_entropy_of_entanglement_ub(o.rho_f, quick()));
  }
}
BENCHMARK(BM_EntanglementEstimate)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
