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

// State-vector kernels. Every kernel exists twice:
//
//   kernels::serial  plain loops, the reference used by the tests
//   kernels::omp     OpenMP data-parallel loops, used by the library
//
// The omp reductions split the vector into fixed blocks of kReductionBlock
// entries and add the block partials in index order, so their results do not
// depend on the thread count. Below kReductionBlock entries the two variants
// are bit-identical.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "dgrover/dense.hpp"
#include "dgrover/search_core.hpp"

namespace dgrover::kernels {

inline constexpr std::size_t kReductionBlock = 1024;
// Loops shorter than this stay on one thread.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

Complex sum(std::span<const Complex> psi);
double norm_squared(std::span<const Complex> psi);
// sum_i conj(lhs[i]) * rhs[i]
Complex dot(std::span<const Complex> lhs, std::span<const Complex> rhs);

// psi[i] -= shift for every i: a rank-1 update along the uniform vector.
void subtract_constant(std::span<Complex> psi, Complex shift);

// psi[s*R + k] *= phases[k] for every marked s, R = phases.size().
void scale_solution_blocks(std::span<Complex> psi, std::span<const std::uint64_t> solutions,
                           std::span<const Complex> phases);

double solution_mass(std::span<const Complex> psi, std::span<const std::uint64_t> solutions,
                     std::uint64_t reservoir_size);

// Normalized Walsh-Hadamard transform (H on every qubit), in place.
void walsh_hadamard(std::span<Complex> psi);

// out = A x, or A^dagger x when adjoint is set. out must not alias x.
void matvec(const DenseMatrix& a, std::span<const Complex> x, std::span<Complex> out,
            bool adjoint);

// psi[i] *= exp(-i * eigenvalues[i] * t)
void apply_spectral_phases(std::span<Complex> psi, std::span<const double> eigenvalues, double t);

}  // namespace serial

namespace omp {

Complex sum(std::span<const Complex> psi);
double norm_squared(std::span<const Complex> psi);
Complex dot(std::span<const Complex> lhs, std::span<const Complex> rhs);
void subtract_constant(std::span<Complex> psi, Complex shift);
void scale_solution_blocks(std::span<Complex> psi, std::span<const std::uint64_t> solutions,
                           std::span<const Complex> phases);
double solution_mass(std::span<const Complex> psi, std::span<const std::uint64_t> solutions,
                     std::uint64_t reservoir_size);
void walsh_hadamard(std::span<Complex> psi);
void matvec(const DenseMatrix& a, std::span<const Complex> x, std::span<Complex> out,
            bool adjoint);
void apply_spectral_phases(std::span<Complex> psi, std::span<const double> eigenvalues, double t);

}  // namespace omp

/// Threads the omp kernels may use (1 when built without OpenMP).
int max_threads();

}  // namespace dgrover::kernels
