// Copyright 2026 The dgrover Authors
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
// Serial vs OpenMP kernels on state vectors of 2^10 .. 2^20 amplitudes.

#include <benchmark/benchmark.h>

#include <random>

#include "dgrover/kernels.hpp"

namespace {

using dgrover::Complex;
namespace ks = dgrover::kernels::serial;
namespace ko = dgrover::kernels::omp;

std::vector<Complex> random_state(std::size_t n) {
    std::mt19937_64 gen(n);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& z : v) z = {u(gen), u(gen)};
    return v;
}

template <bool Parallel>
void BM_NormSquared(benchmark::State& state) {
    const auto psi = random_state(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Parallel ? ko::norm_squared(psi) : ks::norm_squared(psi));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_UPlus(benchmark::State& state) {
    auto psi = random_state(std::size_t(state.range(0)));
    const Complex c = 1.0 - std::exp(Complex(0.0, -0.3));
    for (auto _ : state) {
        const Complex shift = c * (Parallel ? ko::sum(psi) : ks::sum(psi)) / double(psi.size());
        Parallel ? ko::subtract_constant(psi, shift) : ks::subtract_constant(psi, shift);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_WalshHadamard(benchmark::State& state) {
    auto psi = random_state(std::size_t(state.range(0)));
    for (auto _ : state) {
        Parallel ? ko::walsh_hadamard(psi) : ks::walsh_hadamard(psi);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    dgrover::DenseMatrix m(n, n);
    const auto entries = random_state(n * n);
    std::copy(entries.begin(), entries.end(), m.data().begin());
    const auto x = random_state(n);
    std::vector<Complex> y(n);
    for (auto _ : state) {
        Parallel ? ko::matvec(m, x, y, true) : ks::matvec(m, x, y, true);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_NormSquared<false>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_NormSquared<true>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_UPlus<false>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_UPlus<true>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_WalshHadamard<false>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_WalshHadamard<true>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Matvec<false>)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(BM_Matvec<true>)->RangeMultiplier(2)->Range(256, 2048);

BENCHMARK_MAIN();
