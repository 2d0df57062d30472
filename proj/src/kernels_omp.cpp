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

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"

namespace dgrover::kernels {

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace omp {

namespace {

using Index = std::int64_t;

// A single-thread team only adds overhead; the reduction partition does not
// depend on this choice.
bool go_parallel(std::size_t n) { return n >= kParallelThreshold && max_threads() > 1; }

// Fixed-partition reduction: block b covers [b*kReductionBlock, ...). Partials
// are combined in block order.
template <typename T, typename Body>
T blocked_reduce(std::size_t n, Body body) {
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    if (blocks <= 1) return body(std::size_t{0}, n);
    std::vector<T> partial(blocks);
#pragma omp parallel for schedule(static) if (go_parallel(n))
    for (Index b = 0; b < Index(blocks); ++b) {
        const std::size_t lo = std::size_t(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        partial[b] = body(lo, hi);
    }
    T acc{};
    for (const T& p : partial) acc += p;
    return acc;
}

}  // namespace

Complex sum(std::span<const Complex> psi) {
    return blocked_reduce<Complex>(psi.size(), [&](std::size_t lo, std::size_t hi) {
        Complex acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += psi[i];
        return acc;
    });
}

double norm_squared(std::span<const Complex> psi) {
    return blocked_reduce<double>(psi.size(), [&](std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::norm(psi[i]);
        return acc;
    });
}

Complex dot(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    if (lhs.size() != rhs.size()) throw ArgumentError("dot: size mismatch");
    return blocked_reduce<Complex>(lhs.size(), [&](std::size_t lo, std::size_t hi) {
        Complex acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += std::conj(lhs[i]) * rhs[i];
        return acc;
    });
}

void subtract_constant(std::span<Complex> psi, Complex shift) {
    const Index n = Index(psi.size());
#pragma omp parallel for schedule(static) if (go_parallel(psi.size()))
    for (Index i = 0; i < n; ++i) psi[i] -= shift;
}

void scale_solution_blocks(std::span<Complex> psi, std::span<const std::uint64_t> solutions,
                           std::span<const Complex> phases) {
    const std::size_t width = phases.size();
    const Index total = Index(solutions.size() * width);
#pragma omp parallel for schedule(static) if (go_parallel(solutions.size() * width))
    for (Index flat = 0; flat < total; ++flat) {
        const std::size_t m = std::size_t(flat) / width;
        const std::size_t k = std::size_t(flat) % width;
        psi[solutions[m] * width + k] *= phases[k];
    }
}

double solution_mass(std::span<const Complex> psi, std::span<const std::uint64_t> solutions,
                     std::uint64_t reservoir_size) {
    // Solutions are the outer loop, so short blocks (small R) still reduce in
    // the same order as the serial kernel when M * R <= kReductionBlock.
    const std::size_t total = solutions.size() * reservoir_size;
    return blocked_reduce<double>(total, [&](std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t flat = lo; flat < hi; ++flat) {
            const std::uint64_t s = solutions[flat / reservoir_size];
            acc += std::norm(psi[s * reservoir_size + flat % reservoir_size]);
        }
        return acc;
    });
}

void walsh_hadamard(std::span<Complex> psi) {
    const std::size_t dim = psi.size();
    if (!go_parallel(dim)) return serial::walsh_hadamard(psi);
    if (!std::has_single_bit(dim)) throw ArgumentError("walsh_hadamard: size must be a power of two");
    const double h = std::numbers::sqrt2 / 2.0;
    Complex* const p = psi.data();
    auto butterfly = [p, h](std::size_t j, std::size_t half) {
        const Complex a = p[j];
        const Complex c = p[j + half];
        p[j] = (a + c) * h;
        p[j + half] = (a - c) * h;
    };
#pragma omp parallel
    for (std::size_t half = 1; half < dim; half *= 2) {
        const Index blocks = Index(dim / (2 * half));
        if (std::size_t(blocks) >= half) {
            // Many short blocks: split the blocks.
#pragma omp for schedule(static)
            for (Index blk = 0; blk < blocks; ++blk) {
                const std::size_t base = std::size_t(blk) * 2 * half;
                for (std::size_t j = base; j < base + half; ++j) butterfly(j, half);
            }
        } else {
            // Few long blocks: split inside each block.
            for (Index blk = 0; blk < blocks; ++blk) {
                const std::size_t base = std::size_t(blk) * 2 * half;
#pragma omp for schedule(static)
                for (Index j = 0; j < Index(half); ++j) butterfly(base + std::size_t(j), half);
            }
        }
    }
}

void matvec(const DenseMatrix& a, std::span<const Complex> x, std::span<Complex> out,
            bool adjoint) {
    const std::size_t n_out = adjoint ? a.cols() : a.rows();
    const std::size_t n_in = adjoint ? a.rows() : a.cols();
    if (x.size() != n_in || out.size() != n_out) throw ArgumentError("matvec: dimension mismatch");
#pragma omp parallel for schedule(static) if (go_parallel(n_out * n_in / 64))
    for (Index ii = 0; ii < Index(n_out); ++ii) {
        const std::size_t i = std::size_t(ii);
        Complex acc{};
        if (adjoint) {
            for (std::size_t j = 0; j < n_in; ++j) acc += std::conj(a(j, i)) * x[j];
        } else {
            const auto row = a.row(i);
            for (std::size_t j = 0; j < n_in; ++j) acc += row[j] * x[j];
        }
        out[i] = acc;
    }
}

void apply_spectral_phases(std::span<Complex> psi, std::span<const double> eigenvalues, double t) {
    if (psi.size() != eigenvalues.size()) throw ArgumentError("apply_spectral_phases: size mismatch");
    const Index n = Index(psi.size());
#pragma omp parallel for schedule(static) if (go_parallel(psi.size()))
    for (Index i = 0; i < n; ++i) psi[i] *= std::polar(1.0, -eigenvalues[i] * t);
}

}  // namespace omp
}  // namespace dgrover::kernels
