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
// The omp kernels against the serial reference.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dgrover/kernels.hpp"

using namespace dgrover;
namespace ks = dgrover::kernels::serial;
namespace ko = dgrover::kernels::omp;

namespace {

std::vector<Complex> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& z : v) z = {u(gen), u(gen)};
    return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

const std::size_t kSizes[] = {1, 7, 1024, 4096, 5000, 1 << 14, 1 << 16};

}  // namespace

TEST_CASE("reductions agree") {
    for (std::size_t n : kSizes) {
        const auto a = random_vector(n, n);
        const auto b = random_vector(n, n + 1);
        const double tol = 1e-12 * double(n);
        CHECK(std::abs(ks::sum(a) - ko::sum(a)) < tol);
        CHECK(std::abs(ks::norm_squared(a) - ko::norm_squared(a)) < tol);
        CHECK(std::abs(ks::dot(a, b) - ko::dot(a, b)) < tol);
        if (n <= kernels::kReductionBlock) {
            CHECK(ks::sum(a) == ko::sum(a));
            CHECK(ks::norm_squared(a) == ko::norm_squared(a));
        }
    }
}

TEST_CASE("omp reductions are repeatable") {
    const auto a = random_vector(1 << 16, 3);
    const Complex first = ko::sum(a);
    for (int i = 0; i < 5; ++i) CHECK(ko::sum(a) == first);
}

TEST_CASE("elementwise kernels agree bitwise") {
    for (std::size_t n : kSizes) {
        auto a = random_vector(n, 11 * n);
        auto b = a;
        ks::subtract_constant(a, {0.25, -0.5});
        ko::subtract_constant(b, {0.25, -0.5});
        CHECK(a == b);

        std::vector<double> eig(n);
        for (std::size_t i = 0; i < n; ++i) eig[i] = 0.01 * double(i) - 3.0;
        ks::apply_spectral_phases(a, eig, 1.7);
        ko::apply_spectral_phases(b, eig, 1.7);
        CHECK(a == b);
    }
}

TEST_CASE("solution block kernels agree") {
    const std::size_t reservoir = 16;
    const std::size_t n = 1024 * reservoir;
    const std::vector<std::uint64_t> marked = {0, 3, 500, 1023};
    std::vector<Complex> phases(reservoir);
    for (std::size_t k = 0; k < reservoir; ++k) phases[k] = std::polar(1.0, 0.1 * double(k));
    auto a = random_vector(n, 5);
    auto b = a;
    ks::scale_solution_blocks(a, marked, phases);
    ko::scale_solution_blocks(b, marked, phases);
    CHECK(a == b);
    CHECK(std::abs(ks::solution_mass(a, marked, reservoir) - ko::solution_mass(b, marked, reservoir)) < 1e-12);
}

TEST_CASE("walsh-hadamard matches the explicit transform and agrees across variants") {
    for (int q = 0; q <= 6; ++q) {
        const std::size_t n = std::size_t{1} << q;
        const auto x = random_vector(n, 100 + q);
        std::vector<Complex> expected(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                expected[i] += (__builtin_popcountll(i & j) % 2 ? -1.0 : 1.0) * x[j] / std::sqrt(double(n));
        auto got = x;
        ks::walsh_hadamard(got);
        CHECK(max_diff(got, expected) < 1e-13);
    }
    for (std::size_t n : {std::size_t{1} << 12, std::size_t{1} << 15}) {
        auto a = random_vector(n, n);
        auto b = a;
        const auto orig = a;
        ks::walsh_hadamard(a);
        ko::walsh_hadamard(b);
        CHECK(max_diff(a, b) < 1e-13);
        ko::walsh_hadamard(b);
        CHECK(max_diff(b, orig) < 1e-12);
    }
}

TEST_CASE("matvec agrees and honours the adjoint flag") {
    for (std::size_t n : {std::size_t{5}, std::size_t{100}, std::size_t{300}}) {
        DenseMatrix m(n, n);
        const auto entries = random_vector(n * n, 9 * n);
        std::copy(entries.begin(), entries.end(), m.data().begin());
        const auto x = random_vector(n, 4 * n);
        for (bool adj : {false, true}) {
            std::vector<Complex> a(n), b(n), ref(n);
            ks::matvec(m, x, a, adj);
            ko::matvec(m, x, b, adj);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    ref[i] += (adj ? std::conj(m(j, i)) : m(i, j)) * x[j];
            CHECK(max_diff(a, ref) < 1e-12);
            CHECK(max_diff(a, b) < 1e-12);
        }
    }
}
