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

#include "dgrover/search_core.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"

namespace dgrover {

namespace {
// 2^(n+r) must stay addressable and dense-simulable.
constexpr int kMaxTotalQubits = 30;
}  // namespace

SearchProblem::SearchProblem(int n, std::vector<std::uint64_t> solutions)
    : n_(n), solutions_(std::move(solutions)) {
    if (n < 1 || n > kMaxTotalQubits)
        throw ArgumentError("SearchProblem: n must be in [1, 30], got " + std::to_string(n));
    const std::uint64_t size = N();
    if (solutions_.empty() || solutions_.size() >= size)
        throw ArgumentError("SearchProblem: need 1 <= M < N");
    for (std::size_t i = 0; i < solutions_.size(); ++i) {
        if (solutions_[i] >= size)
            throw ArgumentError("SearchProblem: solution index " + std::to_string(solutions_[i]) +
                                " out of range");
        if (i > 0 && solutions_[i] <= solutions_[i - 1])
            throw ArgumentError("SearchProblem: solutions must be strictly increasing");
    }
}

SearchProblem SearchProblem::first_m(int n, std::uint64_t m) {
    std::vector<std::uint64_t> sols(m);
    for (std::uint64_t i = 0; i < m; ++i) sols[i] = i;
    return SearchProblem(n, std::move(sols));
}

ReservoirSpec::ReservoirSpec(int r, double delta) : r_(r), delta_(delta) {
    if (r < 0 || r > kMaxTotalQubits)
        throw ArgumentError("ReservoirSpec: r must be in [0, 30], got " + std::to_string(r));
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ArgumentError("ReservoirSpec: delta must be positive and finite");
}

StateVector::StateVector(std::size_t dim) : amps_(dim) {}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {}

double StateVector::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

void FidelityTrace::append(double abscissa, double fidelity) {
    if (!abscissa_.empty() && !(abscissa > abscissa_.back()))
        throw ArgumentError("FidelityTrace: abscissa must be strictly increasing");
    if (!(fidelity >= -kSlack && fidelity <= 1.0 + kSlack))
        throw ConsistencyError("FidelityTrace: fidelity " + std::to_string(fidelity) +
                               " outside [0, 1]");
    abscissa_.push_back(abscissa);
    fidelity_.push_back(fidelity);
}

void FidelityTrace::reserve(std::size_t n) {
    abscissa_.reserve(n);
    fidelity_.reserve(n);
}

std::uint64_t basis_index(std::uint64_t s, std::uint64_t k, const ReservoirSpec& spec) {
    if (k >= spec.R())
        throw ArgumentError("basis_index: reservoir index " + std::to_string(k) + " >= R");
    return s * spec.R() + k;
}

StateVector uniform_state(int n, int r) {
    if (n < 1 || r < 0 || n + r > kMaxTotalQubits)
        throw ArgumentError("uniform_state: need n >= 1, r >= 0, n + r <= 30");
    const std::size_t dim = std::size_t{1} << (n + r);
    return StateVector(std::vector<Complex>(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0)));
}

double success_probability(std::span<const Complex> amps, const SearchProblem& problem,
                           std::uint64_t reservoir_size) {
    if (amps.size() != problem.N() * reservoir_size)
        throw ArgumentError("success_probability: state dimension " + std::to_string(amps.size()) +
                            " != N * R");
    return kernels::omp::solution_mass(amps, problem.solutions(), reservoir_size);
}

double success_probability(const StateVector& state, const SearchProblem& problem,
                           const ReservoirSpec& spec) {
    return success_probability(state.amplitudes(), problem, spec.R());
}

StateVector fourier_solution_state(const SearchProblem& problem, std::uint64_t p,
                                   const ReservoirSpec& spec, std::uint64_t k) {
    const std::uint64_t m_count = problem.M();
    if (p >= m_count) throw ArgumentError("fourier_solution_state: p must be < M");
    if (k >= spec.R()) throw ArgumentError("fourier_solution_state: k must be < R");
    StateVector out(problem.N() * spec.R());
    const double scale = 1.0 / std::sqrt(double(m_count));
    for (std::uint64_t m = 0; m < m_count; ++m) {
        // Reduce p*m mod M first so the phase argument stays small.
        const double angle = 2.0 * std::numbers::pi * double((p * m) % m_count) / double(m_count);
        out[basis_index(problem.solutions()[m], k, spec)] = std::polar(scale, angle);
    }
    return out;
}

Complex inner_product(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.dim() != rhs.dim()) throw ArgumentError("inner_product: dimension mismatch");
    return kernels::omp::dot(lhs.amplitudes(), rhs.amplitudes());
}

}  // namespace dgrover
