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

// Dense Hamiltonians and exact continuous-time evolution.
//
// Propagation goes through a single eigendecomposition H = V diag(lambda) V^dagger;
// evolving to any time t is then two dense matvecs and a diagonal phase.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dgrover/dense.hpp"
#include "dgrover/search_core.hpp"

namespace dgrover {

/// Square complex matrix that is Hermitian to 1e-12 (checked on construction).
class HermitianOperator {
public:
    static constexpr double kTolerance = 1e-12;

    explicit HermitianOperator(DenseMatrix entries);

    std::size_t dim() const { return entries_.rows(); }
    const DenseMatrix& entries() const { return entries_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

private:
    DenseMatrix entries_;
};

/// Eigendecomposition of a HermitianOperator; eigenvalues ascending.
class Propagator {
public:
    Propagator(std::vector<double> eigenvalues, DenseMatrix eigenvectors);

    std::size_t dim() const { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    /// Column j is the eigenvector of eigenvalues()[j].
    const DenseMatrix& eigenvectors() const { return eigenvectors_; }

private:
    std::vector<double> eigenvalues_;
    DenseMatrix eigenvectors_;
};

/// Finite Bixon-Jortner ladder: source |a> coupled with strength beta to the
/// levels eps_a + m * delta, m = -ladder_size/2 .. ladder_size/2.
struct BJLadderSpec {
    int ladder_size = 2;  // even; the ladder holds ladder_size + 1 levels
    double beta = 1.0;
    double delta = 1.0;
    double eps_a = 0.0;
};

/// E_k = 1 + delta * (k - R/2 + 1/2)
double reservoir_energy(const ReservoirSpec& spec, std::uint64_t k);

/// |+^n><+^n| + sum_m |S_m><S_m|
HermitianOperator build_standard_grover(const SearchProblem& problem);

/// |+^n,+^r><+^n,+^r| + sum_m sum_k E_k |S_m,k><S_m,k|
HermitianOperator build_dissipative(const SearchProblem& problem, const ReservoirSpec& spec);

/// Source at index 0, then ladder levels in increasing m.
HermitianOperator build_finite_bj(const BJLadderSpec& spec);

Propagator diagonalize(const HermitianOperator& h);

/// e^{-iHt} psi0
StateVector evolve(const Propagator& prop, const StateVector& psi0, double t);

/// <psi|H|psi> (real part; the imaginary part vanishes for Hermitian H).
double expectation(const HermitianOperator& h, const StateVector& psi);

/// Success probability of e^{-iHt} psi0 at each requested time.
FidelityTrace trace_continuous(const HermitianOperator& h, const StateVector& psi0,
                               std::span<const double> times, const SearchProblem& problem,
                               const ReservoirSpec& spec);

/// Same, reusing an existing decomposition.
FidelityTrace trace_continuous(const Propagator& prop, const StateVector& psi0,
                               std::span<const double> times, const SearchProblem& problem,
                               const ReservoirSpec& spec);

/// Evolves psi0 to each time and hands the state to visit(t, state).
/// The spectral coefficients V^dagger psi0 are computed once.
template <typename Visitor>
void sweep_times(const Propagator& prop, const StateVector& psi0, std::span<const double> times,
                 Visitor&& visit);

/// n_samples evenly spaced times over [0, t_end], endpoints included.
std::vector<double> uniform_grid(double t_end, std::size_t n_samples);

}  // namespace dgrover

#include "dgrover/detail/sweep_times.inl"
