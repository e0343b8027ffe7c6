// Copyright 2026 The phasecov Authors
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

#include "phasecov/cost_derivative.hpp"
#include "phasecov/generator.hpp"
#include "phasecov/integrator.hpp"
#include "phasecov/states.hpp"

namespace {

using namespace phasecov;

struct Fixture {
    explicit Fixture(std::size_t d)
        : spectrum(Spectrum::cyclic(d)),
          gen(random_covariant_generator(spectrum, 1)),
          dense(to_dense(gen)),
          rho(random_phase_pure(spectrum, 2, 3)) {}

    Spectrum spectrum;
    CovariantGenerator gen;
    LindbladGenerator dense;
    DensityMatrix rho;
};

void BM_LindbladStructured(benchmark::State &state) {
    const Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lindblad_apply(f.gen, f.rho.entries()));
    }
}
BENCHMARK(BM_LindbladStructured)->RangeMultiplier(2)->Range(4, 64);

void BM_LindbladDense(benchmark::State &state) {
    const Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lindblad_apply(f.dense, f.rho.entries()));
    }
}
BENCHMARK(BM_LindbladDense)->RangeMultiplier(2)->Range(4, 64);

void BM_Rk4Step(benchmark::State &state) {
    const Fixture f(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rk4_step(f.gen, f.rho.entries(), 1e-3, 1.0));
    }
}
BENCHMARK(BM_Rk4Step)->RangeMultiplier(2)->Range(4, 64);

void BM_CostDerivativeAnalytic(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const Fixture f(d);
    const PhasePureDecomposition decomp = require_phase_pure(f.rho);
    const CostFunction cost = CostFunction::reciprocal_peak_likelihood(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost_derivative_analytic(f.gen, f.rho, decomp, cost));
    }
}
BENCHMARK(BM_CostDerivativeAnalytic)->RangeMultiplier(2)->Range(4, 64);

void BM_CostDerivativeOracle(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const Fixture f(d);
    const PhasePureDecomposition decomp = require_phase_pure(f.rho);
    const CostFunction cost = CostFunction::reciprocal_peak_likelihood(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost_derivative_numeric(f.gen, f.rho, decomp, cost));
    }
}
BENCHMARK(BM_CostDerivativeOracle)->RangeMultiplier(2)->Range(4, 64);

} // namespace

BENCHMARK_MAIN();
