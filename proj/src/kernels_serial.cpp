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

// Reference kernels. Straight loops, no blocking; the tests hold the OpenMP
// versions to these.

#include <bit>
#include <cmath>
#include <numbers>

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"

namespace dgrover::kernels::serial {

Complex sum(std::span<const Complex> psi) {
    Complex acc{};
    for (const Complex& a : psi) acc += a;
    return acc;
}

double norm_squared(std::span<const Complex> psi) {
    double acc = 0.0;
    for (const Complex& a : psi) acc += std::norm(a);
    return acc;
}

Complex dot(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    if (lhs.size() != rhs.size()) throw ArgumentError("dot: size mismatch");
    Complex acc{};
    for (std::size_t i = 0; i < lhs.size(); ++i) acc += std::conj(lhs[i]) * rhs[i];
    return acc;
}

void subtract_constant(std::span<Complex> psi, Complex shift) {
    for (Complex& a : psi) a -= shift;
}

void scale_solution_blocks(std::span<Complex> psi, std::span<const std::uint64_t> solutions,
                           std::span<const Complex> phases) {
    const std::size_t width = phases.size();
    for (std::uint64_t s : solutions) {
        Complex* block = psi.data() + s * width;
        for (std::size_t k = 0; k < width; ++k) block[k] *= phases[k];
    }
}

double solution_mass(std::span<const Complex> psi, std::span<const std::uint64_t> solutions,
                     std::uint64_t reservoir_size) {
    double acc = 0.0;
    for (std::uint64_t s : solutions)
        for (std::uint64_t k = 0; k < reservoir_size; ++k) acc += std::norm(psi[s * reservoir_size + k]);
    return acc;
}

void walsh_hadamard(std::span<Complex> psi) {
    const std::size_t dim = psi.size();
    if (!std::has_single_bit(dim)) throw ArgumentError("walsh_hadamard: size must be a power of two");
    const double h = std::numbers::sqrt2 / 2.0;
    for (std::size_t half = 1; half < dim; half *= 2) {
        for (std::size_t base = 0; base < dim; base += 2 * half) {
            for (std::size_t j = base; j < base + half; ++j) {
                const Complex a = psi[j];
                const Complex b = psi[j + half];
                psi[j] = (a + b) * h;
                psi[j + half] = (a - b) * h;
            }
        }
    }
}

void matvec(const DenseMatrix& a, std::span<const Complex> x, std::span<Complex> out,
            bool adjoint) {
    const std::size_t n_out = adjoint ? a.cols() : a.rows();
    const std::size_t n_in = adjoint ? a.rows() : a.cols();
    if (x.size() != n_in || out.size() != n_out) throw ArgumentError("matvec: dimension mismatch");
    for (std::size_t i = 0; i < n_out; ++i) {
        Complex acc{};
        if (adjoint) {
            for (std::size_t j = 0; j < n_in; ++j) acc += std::conj(a(j, i)) * x[j];
        } else {
            for (std::size_t j = 0; j < n_in; ++j) acc += a(i, j) * x[j];
        }
        out[i] = acc;
    }
}

void apply_spectral_phases(std::span<Complex> psi, std::span<const double> eigenvalues, double t) {
    if (psi.size() != eigenvalues.size()) throw ArgumentError("apply_spectral_phases: size mismatch");
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= std::polar(1.0, -eigenvalues[i] * t);
}

}  // namespace dgrover::kernels::serial
