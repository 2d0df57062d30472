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

// Figure presets.

#include <numbers>

#include "dgrover/errors.hpp"
#include "dgrover/experiments.hpp"

namespace dgrover {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;
constexpr double kPi = std::numbers::pi;

ExperimentConfig base(const std::string& id, ExperimentKind kind) {
    ExperimentConfig c;
    c.figure_id = id;
    c.kind = kind;
    c.seed = kDefaultSeed;
    return c;
}

// n = 3, M = 1, delta = 0.1; one curve for standard search and one dissipative.
ExperimentConfig small_search(const std::string& id, ExperimentKind kind, int r) {
    ExperimentConfig c = base(id, kind);
    c.n = 3;
    c.solutions = {0};
    c.reservoir_qubits = {0, r};
    c.delta_rule = DeltaRule::fixed;
    c.delta = 0.1;
    if (kind == ExperimentKind::continuous) {
        c.t_max = 150.0;
        c.samples = 400;
    } else {
        c.dt = kPi;
        c.steps = 48;
    }
    c.notes.push_back("horizon spans the first two revivals (tau = 2 pi / 0.1)");
    return c;
}

// n = 6, M = 1, r = 3, delta = 3 sqrt(M (N - M)) / (N R).
ExperimentConfig noisy_search(const std::string& id, ExperimentKind kind) {
    ExperimentConfig c = base(id, kind);
    c.n = 6;
    c.solutions = {0};
    c.reservoir_qubits = {3};
    c.delta_rule = DeltaRule::known;
    c.C = 3.0;
    c.dt = kPi;
    c.steps = 64;
    return c;
}

ExperimentConfig fixed_point_base(const std::string& id, ExperimentKind kind) {
    ExperimentConfig c = base(id, kind);
    c.n = 6;
    c.solutions = {0};
    c.reservoir_qubits = {0};
    c.notes.push_back("delta chosen so that 2l + 1 = ln(2/delta) / sqrt(M/N) holds with equality");
    return c;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"fig2a", "fig2b", "fig2c", "fig2d", "fig4a",
                                                 "fig4b", "fig5a", "fig5b", "fig6a", "fig6b"};
    return ids;
}

ExperimentConfig preset(const std::string& figure_id) {
    if (figure_id == "fig2a") return small_search(figure_id, ExperimentKind::continuous, 4);
    if (figure_id == "fig2b") return small_search(figure_id, ExperimentKind::continuous, 3);
    if (figure_id == "fig2c") return small_search(figure_id, ExperimentKind::trotter, 4);
    if (figure_id == "fig2d") return small_search(figure_id, ExperimentKind::trotter, 3);
    if (figure_id == "fig4a") {
        ExperimentConfig c = noisy_search(figure_id, ExperimentKind::trotter_noise);
        c.epsilons = {0.05};
        c.trajectories = 3;
        return c;
    }
    if (figure_id == "fig4b") {
        ExperimentConfig c = noisy_search(figure_id, ExperimentKind::mean_deviation);
        c.epsilons = {0.01, 0.02, 0.05};
        c.runs = 100;
        c.notes.push_back("epsilon set {0.01, 0.02, 0.05} is a preset choice, not taken from a caption");
        return c;
    }
    if (figure_id == "fig5a") {
        ExperimentConfig c = base(figure_id, ExperimentKind::finite_bj);
        c.ladder_sizes = {10, 100};
        c.beta = 1.0;
        c.ladder_delta = 1.0;
        c.t_max = 10.0;
        c.samples = 400;
        c.notes.push_back("2 Gamma bound line drawn for the first ladder size only");
        return c;
    }
    if (figure_id == "fig5b") {
        ExperimentConfig c = base(figure_id, ExperimentKind::residual_sweep);
        c.ladder_sizes = {10, 30, 50};
        c.ladder_delta = 1.0;
        c.samples = 400;
        for (int i = 0; i <= 12; ++i) c.betas.push_back(0.4 + 0.05 * i);
        c.notes.push_back("Gamma varied through beta in [0.4, 1.0] at fixed delta = 1; residual is "
                          "max ||a|^2 - e^{-gamma t}| over t in [5/gamma, 0.9 tau]");
        return c;
    }
    if (figure_id == "fig6a") {
        ExperimentConfig c = fixed_point_base(figure_id, ExperimentKind::fixed_point);
        c.lengths = {12};
        c.epsilons = {0.05};
        c.trajectories = 3;
        c.notes.push_back("sequence length l = 12 is a preset choice");
        return c;
    }
    if (figure_id == "fig6b") {
        ExperimentConfig c = fixed_point_base(figure_id, ExperimentKind::fixed_point_sweep);
        for (int l = 3; l <= 15; ++l) c.lengths.push_back(l);
        c.epsilons = {0.01, 0.02, 0.05};
        c.runs = 1000;
        c.notes.push_back("epsilon set {0.01, 0.02, 0.05} is a preset choice, not taken from a caption");
        return c;
    }
    throw UsageError("unknown figure id '" + figure_id + "' (see list-figures)");
}

}  // namespace dgrover
