// Copyright 2026 The oplab Authors
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

#include "oplab/algebra.hpp"
#include "oplab/bell.hpp"
#include "oplab/fock.hpp"
#include "oplab/modular.hpp"
#include "oplab/random.hpp"
#include "oplab/states.hpp"

namespace {

using namespace oplab;

void BM_HermEig(benchmark::State &state) {
    Rng rng(1);
    CMatrix a = random_hermitian(state.range(0), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(herm_eig(a));
    }
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(4, 128);

void BM_Commutant(benchmark::State &state) {
    Rng rng(2);
    Index n = state.range(0);
    Subalgebra s = generate(random_subalgebra_generators(n, rng), n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutant(s));
    }
}
BENCHMARK(BM_Commutant)->DenseRange(2, 8, 2);

void BM_Gns(benchmark::State &state) {
    Rng rng(3);
    Index n = state.range(0);
    State s(random_density(n, n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gns(s));
    }
}
BENCHMARK(BM_Gns)->DenseRange(2, 8, 2);

void BM_Tomita(benchmark::State &state) {
    Rng rng(4);
    Index n = state.range(0);
    State s(random_density(n, n, rng));
    Subalgebra m = left_factor_algebra(n, n);
    CVector omega = purification(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tomita(m, omega));
    }
}
BENCHMARK(BM_Tomita)->DenseRange(2, 4, 1);

void BM_Weyl(benchmark::State &state) {
    FockSpace space = FockSpace::bosonic(1, state.range(0));
    CVector f = CVector::Constant(1, Complex(0.8, 0.0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(weyl(space, f));
    }
}
BENCHMARK(BM_Weyl)->RangeMultiplier(2)->Range(8, 64);

void BM_ChshOptimize(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(chsh_optimize({0.1, 0.2, 0.3, 0.4}));
    }
}
BENCHMARK(BM_ChshOptimize);

}  // namespace

BENCHMARK_MAIN();
