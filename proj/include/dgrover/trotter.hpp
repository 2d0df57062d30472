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

// Discrete-time dissipative search.
//
// One iterate is U_+ U_S (U_S acts first):
//   U_S = exp(-i dt sum_{m,k} E_k |S_m,k><S_m,k|)   diagonal on the solution blocks
//   U_+ = I - (1 - e^{-i dt}) |+^{n+r}><+^{n+r}|    rank-1 about the uniform state
//
// Phase-control errors rescale dt in each operator by (1 + relative_error),
// relative_error = epsilon * xi with xi uniform on [-1, 1). Each iterate draws
// xi' for U_S first, then xi for U_+, from the run's own stream.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dgrover/search_core.hpp"

namespace dgrover {

struct NoiseSpec {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    int runs = 1;

    /// Throws ArgumentError unless epsilon >= 0 and runs >= 1.
    void validate() const;
};

StateVector apply_u_plus(StateVector state, double dt, std::optional<double> relative_error = {});

StateVector apply_u_s(StateVector state, double dt, const SearchProblem& problem,
                      const ReservoirSpec& spec, std::optional<double> relative_error = {});

/// In-place forms; dt is the already-perturbed step.
void apply_u_plus_inplace(std::span<Complex> psi, double dt);
void apply_u_s_inplace(std::span<Complex> psi, double dt, const SearchProblem& problem,
                       const ReservoirSpec& spec);

/// Fidelity after 0, 1, ..., steps iterates starting from the uniform state.
/// With noise, run `run` of noise->seed supplies the draws.
FidelityTrace run_trotter(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                          int steps, const std::optional<NoiseSpec>& noise = {},
                          std::uint64_t run = 0);

/// (U_+ U_S)^steps applied to the uniform state, noise-free.
StateVector trotter_state(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                          int steps);

/// Register of n + r qubits plus one ancilla. The ancilla is the most
/// significant qubit: amplitude index a * dim + i for ancilla value a.
class CircuitState {
public:
    explicit CircuitState(const StateVector& reg);

    std::size_t register_dim() const { return dim_; }
    std::span<Complex> ancilla_zero() { return {amps_.data(), dim_}; }
    std::span<Complex> ancilla_one() { return {amps_.data() + dim_, dim_}; }
    std::span<const Complex> ancilla_zero() const { return {amps_.data(), dim_}; }
    std::span<const Complex> ancilla_one() const { return {amps_.data() + dim_, dim_}; }

    double ancilla_excited_population() const;
    double norm() const;
    /// The ancilla-|0> register amplitudes.
    StateVector register_state() const;

private:
    std::size_t dim_;
    std::vector<Complex> amps_;
};

/// One iterate gate by gate: oracle, conditional reservoir phase, oracle
/// uncompute, Hadamards, |0...0>-controlled ancilla flip, ancilla phase
/// e^{-i dt} (Z at dt = pi), uncompute flip, Hadamards.
void apply_gate_iterate(CircuitState& state, const SearchProblem& problem,
                        const ReservoirSpec& spec, double dt);

struct GateCircuitRun {
    FidelityTrace trace;
    /// Ancilla |1> population after each iterate (index 0 = initial state).
    std::vector<double> ancilla_excited;
    StateVector final_register;
};

inline constexpr double kAncillaLeakageLimit = 1e-9;

/// Throws ConsistencyError if the ancilla |1> population after an iterate
/// exceeds kAncillaLeakageLimit.
GateCircuitRun run_gate_circuit_detailed(const SearchProblem& problem, const ReservoirSpec& spec,
                                         double dt, int steps);

FidelityTrace run_gate_circuit(const SearchProblem& problem, const ReservoirSpec& spec, double dt,
                               int steps);

/// Per-step Monte Carlo mean of |F_run - F_ideal| with its standard error.
struct DeviationTrace {
    FidelityTrace mean;
    std::vector<double> standard_error;
};

/// Runs are independent and execute in parallel; results are summed in run
/// order, so the output does not depend on the thread count.
DeviationTrace mean_deviation_trace(const SearchProblem& problem, const ReservoirSpec& spec,
                                    double dt, int steps, const NoiseSpec& noise);

}  // namespace dgrover
