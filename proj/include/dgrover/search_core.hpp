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

// Basis conventions shared by every simulation path.
//
// The joint register is |s> (x) |k> with s the n-qubit system index and k the
// r-qubit reservoir index. Amplitudes are stored system-major: s * R + k, so
// each solution owns one contiguous block of R reservoir amplitudes.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dgrover {

using Complex = std::complex<double>;

/// Search instance: n qubits, N = 2^n items, M marked items.
class SearchProblem {
public:
    /// Solutions must be strictly increasing, in [0, 2^n), with 1 <= M < N.
    SearchProblem(int n, std::vector<std::uint64_t> solutions);

    /// Convenience: solutions {0, 1, ..., M-1}.
    static SearchProblem first_m(int n, std::uint64_t m);

    int n() const { return n_; }
    std::uint64_t N() const { return std::uint64_t{1} << n_; }
    std::uint64_t M() const { return solutions_.size(); }
    const std::vector<std::uint64_t>& solutions() const { return solutions_; }

    bool operator==(const SearchProblem&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> solutions_;
};

/// Ancilla reservoir of r qubits whose solution-block energies form a ladder
/// spaced by delta. r = 0 is the standard (single-level) case.
class ReservoirSpec {
public:
    ReservoirSpec(int r, double delta);

    int r() const { return r_; }
    std::uint64_t R() const { return std::uint64_t{1} << r_; }
    double delta() const { return delta_; }

    bool operator==(const ReservoirSpec&) const = default;

private:
    int r_;
    double delta_;
};

/// Normalized amplitude vector over the system (x) reservoir basis.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim);
    explicit StateVector(std::vector<Complex> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex& operator[](std::size_t i) { return amps_[i]; }
    const Complex& operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;

private:
    std::vector<Complex> amps_;
};

/// Time (or Trotter step) samples paired with success probabilities.
/// Abscissae strictly increase; every value lies in [0, 1] up to 1e-12.
class FidelityTrace {
public:
    static constexpr double kSlack = 1e-12;

    void append(double abscissa, double fidelity);
    void reserve(std::size_t n);

    std::size_t size() const { return abscissa_.size(); }
    bool empty() const { return abscissa_.empty(); }
    const std::vector<double>& abscissa() const { return abscissa_; }
    const std::vector<double>& fidelity() const { return fidelity_; }

private:
    std::vector<double> abscissa_;
    std::vector<double> fidelity_;
};

std::uint64_t basis_index(std::uint64_t s, std::uint64_t k, const ReservoirSpec& spec);

StateVector uniform_state(int n, int r);

/// Total probability on solution states, marginalized over the reservoir.
double success_probability(const StateVector& state, const SearchProblem& problem,
                           const ReservoirSpec& spec);

/// Reservoir-marginalized mass on the solution blocks of a raw amplitude span.
double success_probability(std::span<const Complex> amps, const SearchProblem& problem,
                           std::uint64_t reservoir_size);

/// |S~_p> (x) |k>: Fourier combination of the solution basis states.
StateVector fourier_solution_state(const SearchProblem& problem, std::uint64_t p,
                                   const ReservoirSpec& spec, std::uint64_t k);

Complex inner_product(const StateVector& lhs, const StateVector& rhs);

}  // namespace dgrover
