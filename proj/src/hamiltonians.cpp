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

#include "dgrover/hamiltonians.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"

namespace dgrover {

namespace {

// Eigen is used only behind diagonalize(); the rest of the library works on
// DenseMatrix.
Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(Eigen::Index(i), Eigen::Index(j)) = m(i, j);
    return out;
}

// Adds scale * |u><u| with u the uniform unit vector of the given dimension.
void add_uniform_projector(DenseMatrix& m, double scale = 1.0) {
    const double entry = scale / double(m.rows());
    for (auto& z : m.data()) z += entry;
}

}  // namespace

HermitianOperator::HermitianOperator(DenseMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw ArgumentError("HermitianOperator: matrix is not square");
    const double asym = entries_.max_hermitian_asymmetry();
    if (asym >= kTolerance)
        throw ArgumentError("HermitianOperator: asymmetry " + std::to_string(asym) + " >= 1e-12");
}

Propagator::Propagator(std::vector<double> eigenvalues, DenseMatrix eigenvectors)
    : eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    if (eigenvectors_.rows() != eigenvalues_.size() || eigenvectors_.cols() != eigenvalues_.size())
        throw ArgumentError("Propagator: eigenvector matrix shape does not match eigenvalue count");
}

double reservoir_energy(const ReservoirSpec& spec, std::uint64_t k) {
    const std::uint64_t size = spec.R();
    if (k >= size) throw ArgumentError("reservoir_energy: k must be < R");
    return 1.0 + spec.delta() * (double(k) - double(size) / 2.0 + 0.5);
}

HermitianOperator build_standard_grover(const SearchProblem& problem) {
    DenseMatrix m(problem.N(), problem.N());
    add_uniform_projector(m);
    for (std::uint64_t s : problem.solutions()) m(s, s) += 1.0;
    return HermitianOperator(std::move(m));
}

HermitianOperator build_dissipative(const SearchProblem& problem, const ReservoirSpec& spec) {
    const std::uint64_t dim = problem.N() * spec.R();
    DenseMatrix m(dim, dim);
    add_uniform_projector(m);
    for (std::uint64_t s : problem.solutions())
        for (std::uint64_t k = 0; k < spec.R(); ++k) {
            const std::uint64_t i = basis_index(s, k, spec);
            m(i, i) += reservoir_energy(spec, k);
        }
    return HermitianOperator(std::move(m));
}

HermitianOperator build_finite_bj(const BJLadderSpec& spec) {
    if (spec.ladder_size <= 0 || spec.ladder_size % 2 != 0)
        throw ArgumentError("build_finite_bj: ladder_size must be even and positive");
    if (!(spec.delta > 0.0)) throw ArgumentError("build_finite_bj: delta must be positive");
    const int half = spec.ladder_size / 2;
    const std::size_t dim = std::size_t(spec.ladder_size) + 2;
    DenseMatrix m(dim, dim);
    m(0, 0) = spec.eps_a;
    for (int level = -half; level <= half; ++level) {
        const std::size_t i = std::size_t(level + half) + 1;
        m(i, i) = spec.eps_a + double(level) * spec.delta;
        m(0, i) = spec.beta;
        m(i, 0) = spec.beta;
    }
    return HermitianOperator(std::move(m));
}

Propagator diagonalize(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h.entries()));
    if (solver.info() != Eigen::Success)
        throw NumericalError("diagonalize: eigensolver failed to converge");
    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();
    const std::size_t dim = h.dim();
    std::vector<double> lambda(dim);
    DenseMatrix v(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        lambda[j] = values(Eigen::Index(j));
        for (std::size_t i = 0; i < dim; ++i) v(i, j) = vectors(Eigen::Index(i), Eigen::Index(j));
    }
    return Propagator(std::move(lambda), std::move(v));
}

StateVector evolve(const Propagator& prop, const StateVector& psi0, double t) {
    if (psi0.dim() != prop.dim()) throw ArgumentError("evolve: dimension mismatch");
    if (!(t >= 0.0)) throw ArgumentError("evolve: t must be nonnegative");
    if (t == 0.0) return psi0;
    StateVector out;
    const double times[] = {t};
    sweep_times(prop, psi0, times, [&](double, const StateVector& s) { out = s; });
    return out;
}

double expectation(const HermitianOperator& h, const StateVector& psi) {
    if (psi.dim() != h.dim()) throw ArgumentError("expectation: dimension mismatch");
    std::vector<Complex> h_psi(h.dim());
    kernels::omp::matvec(h.entries(), psi.amplitudes(), h_psi, false);
    return kernels::omp::dot(psi.amplitudes(), h_psi).real();
}

FidelityTrace trace_continuous(const Propagator& prop, const StateVector& psi0,
                               std::span<const double> times, const SearchProblem& problem,
                               const ReservoirSpec& spec) {
    FidelityTrace trace;
    trace.reserve(times.size());
    sweep_times(prop, psi0, times, [&](double t, const StateVector& state) {
        trace.append(t, success_probability(state, problem, spec));
    });
    return trace;
}

FidelityTrace trace_continuous(const HermitianOperator& h, const StateVector& psi0,
                               std::span<const double> times, const SearchProblem& problem,
                               const ReservoirSpec& spec) {
    return trace_continuous(diagonalize(h), psi0, times, problem, spec);
}

std::vector<double> uniform_grid(double t_end, std::size_t n_samples) {
    if (n_samples < 2 || !(t_end > 0.0))
        throw ArgumentError("uniform_grid: need t_end > 0 and at least two samples");
    std::vector<double> grid(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
        grid[i] = t_end * double(i) / double(n_samples - 1);
    return grid;
}

}  // namespace dgrover
