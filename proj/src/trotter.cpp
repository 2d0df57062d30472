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

#include "dgrover/trotter.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dgrover/errors.hpp"
#include "dgrover/hamiltonians.hpp"
#include "dgrover/kernels.hpp"
#include "dgrover/rng.hpp"
#include "dgrover/stats.hpp"

namespace dgrover {

namespace {

void check_run_args(double dt, int steps) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("dt must be positive and finite");
    if (steps < 0) throw ArgumentError("steps must be nonnegative");
}

std::vector<Complex> reservoir_phases(const ReservoirSpec& spec, double dt) {
    std::vector<Complex> phases(spec.R());
    for (std::uint64_t k = 0; k < spec.R(); ++k)
        phases[k] = std::polar(1.0, -reservoir_energy(spec, k) * dt);
    return phases;
}

}  // namespace

void NoiseSpec::validate() const {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw ArgumentError("NoiseSpec: epsilon must be >= 0");
    if (runs < 1) throw ArgumentError("NoiseSpec: runs must be >= 1");
}

void apply_u_plus_inplace(std::span<Complex> psi, double dt) {
    // (1 - e^{-i dt}) <+|psi> |+>, with every entry of |+> equal to 1/sqrt(dim).
    const Complex total = kernels::omp::sum(psi);
    const Complex factor = 1.0 - std::polar(1.0, -dt);
    kernels::omp::subtract_constant(psi, factor * total / double(psi.size()));
}

void apply_u_s_inplace(std::span<Complex> psi, double dt, const SearchProblem& problem,
                       const ReservoirSpec& spec) {
    if (psi.size() != problem.N() * spec.R()) throw ArgumentError("apply_u_s: dimension mismatch");
    const auto phases = reservoir_phases(spec, dt);
    kernels::omp::scale_solution_blocks(psi, problem.solutions(), phases);
}

StateVector apply_u_plus(StateVector state, double dt, std::optional<double> relative_error) {
    apply_u_plus_inplace(state.amplitudes(), dt * (1.0 + relative_error.value_or(0.0)));
    return state;
}

StateVector apply_u_s(StateVector state, double dt, const SearchProblem& problem,
                      const ReservoirSpec& spec, std::optional<double> relative_error) {
    apply_u_s_inplace(state.amplitudes(), dt * (1.0 + relative_error.value_or(0.0)), problem, spec);
    return state;
}

FidelityTrace run_trotter(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                          int steps, const std::optional<NoiseSpec>& noise, std::uint64_t run) {
    check_run_args(dt, steps);
    if (noise) noise->validate();
    const double epsilon = noise ? noise->epsilon : 0.0;
    SplitMix64 rng = run_stream(noise ? noise->seed : 0, run);

    StateVector state = uniform_state(problem.n(), spec.r());
    FidelityTrace trace;
    trace.reserve(std::size_t(steps) + 1);
    trace.append(0.0, success_probability(state, problem, spec));
    const auto ideal_phases = reservoir_phases(spec, dt);
    for (int step = 1; step <= steps; ++step) {
        if (noise) {
            const double xi_s = rng.uniform_symmetric();
            const double xi_plus = rng.uniform_symmetric();
            apply_u_s_inplace(state.amplitudes(), dt * (1.0 + epsilon * xi_s), problem, spec);
            apply_u_plus_inplace(state.amplitudes(), dt * (1.0 + epsilon * xi_plus));
        } else {
            kernels::omp::scale_solution_blocks(state.amplitudes(), problem.solutions(), ideal_phases);
            apply_u_plus_inplace(state.amplitudes(), dt);
        }
        trace.append(double(step), success_probability(state, problem, spec));
    }
    return trace;
}

StateVector trotter_state(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                          int steps) {
    check_run_args(dt, steps);
    StateVector state = uniform_state(problem.n(), spec.r());
    const auto phases = reservoir_phases(spec, dt);
    for (int step = 0; step < steps; ++step) {
        kernels::omp::scale_solution_blocks(state.amplitudes(), problem.solutions(), phases);
        apply_u_plus_inplace(state.amplitudes(), dt);
    }
    return state;
}

CircuitState::CircuitState(const StateVector& reg) : dim_(reg.dim()), amps_(2 * reg.dim()) {
    std::copy(reg.amplitudes().begin(), reg.amplitudes().end(), amps_.begin());
}

double CircuitState::ancilla_excited_population() const {
    return kernels::omp::norm_squared(ancilla_one());
}

double CircuitState::norm() const { return std::sqrt(kernels::omp::norm_squared(amps_)); }

StateVector CircuitState::register_state() const {
    const auto lower = ancilla_zero();
    return StateVector(std::vector<Complex>(lower.begin(), lower.end()));
}

void apply_gate_iterate(CircuitState& state, const SearchProblem& problem,
                        const ReservoirSpec& spec, double dt) {
    const std::uint64_t width = spec.R();
    if (state.register_dim() != problem.N() * width)
        throw ArgumentError("apply_gate_iterate: register dimension mismatch");
    auto lower = state.ancilla_zero();
    auto upper = state.ancilla_one();

    // O_S: X on the ancilla for every |S_m, k>.
    auto oracle = [&] {
        for (std::uint64_t s : problem.solutions())
            for (std::uint64_t k = 0; k < width; ++k) std::swap(lower[s * width + k], upper[s * width + k]);
    };

    // U_S block: oracle, U_R on the ancilla-|1> branch, uncompute.
    oracle();
    const auto phases = reservoir_phases(spec, dt);
    for (std::size_t i = 0; i < upper.size(); ++i) upper[i] *= phases[i % width];
    oracle();

    // U_+ block in the Hadamard frame, where |+^{n+r}> becomes |0...0>.
    kernels::omp::walsh_hadamard(lower);
    kernels::omp::walsh_hadamard(upper);
    std::swap(lower[0], upper[0]);
    const Complex kick = std::polar(1.0, -dt);
    for (Complex& a : upper) a *= kick;
    std::swap(lower[0], upper[0]);
    kernels::omp::walsh_hadamard(lower);
    kernels::omp::walsh_hadamard(upper);
}

GateCircuitRun run_gate_circuit_detailed(const SearchProblem& problem, const ReservoirSpec& spec,
                                         double dt, int steps) {
    check_run_args(dt, steps);
    CircuitState state(uniform_state(problem.n(), spec.r()));
    GateCircuitRun out;
    out.trace.reserve(std::size_t(steps) + 1);
    out.ancilla_excited.reserve(std::size_t(steps) + 1);
    out.trace.append(0.0, success_probability(state.ancilla_zero(), problem, spec.R()));
    out.ancilla_excited.push_back(state.ancilla_excited_population());
    for (int step = 1; step <= steps; ++step) {
        apply_gate_iterate(state, problem, spec, dt);
        const double leak = state.ancilla_excited_population();
        if (leak > kAncillaLeakageLimit)
            throw ConsistencyError("run_gate_circuit: ancilla |1> population " + std::to_string(leak) +
                                   " after iterate " + std::to_string(step));
        out.ancilla_excited.push_back(leak);
        out.trace.append(double(step), success_probability(state.ancilla_zero(), problem, spec.R()));
    }
    out.final_register = state.register_state();
    return out;
}

FidelityTrace run_gate_circuit(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                               int steps) {
    return run_gate_circuit_detailed(problem, spec, dt, steps).trace;
}

DeviationTrace mean_deviation_trace(const SearchProblem& problem, const ReservoirSpec& spec,
                                    double dt, int steps, const NoiseSpec& noise) {
    noise.validate();
    const FidelityTrace ideal = run_trotter(problem, spec, dt, steps);
    const std::size_t width = std::size_t(steps) + 1;
    std::vector<std::vector<double>> deviations(std::size_t(noise.runs));

#pragma omp parallel for schedule(dynamic)
    for (int run = 0; run < noise.runs; ++run) {
        const FidelityTrace noisy = run_trotter(problem, spec, dt, steps, noise, std::uint64_t(run));
        std::vector<double> dev(width);
        for (std::size_t i = 0; i < width; ++i) dev[i] = std::abs(noisy.fidelity()[i] - ideal.fidelity()[i]);
        deviations[std::size_t(run)] = std::move(dev);
    }

    DeviationTrace out;
    out.mean.reserve(width);
    out.standard_error.reserve(width);
    std::vector<double> column(deviations.size());
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t run = 0; run < deviations.size(); ++run) column[run] = deviations[run][i];
        const SampleSummary summary = summarize(column);
        out.mean.append(double(i), summary.mean);
        out.standard_error.push_back(summary.standard_error);
    }
    return out;
}

}  // namespace dgrover
