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

// Experiment orchestration: configs, figure presets, CSV series and manifests.
//
// Output layout for a run:
//   <out_dir>/<figure_id>/<series>.csv     header "abscissa,value" or
//                                          "abscissa,value,stderr"
//   <out_dir>/<figure_id>/manifest.json    resolved config, provenance, timing
//
// CSV bytes depend only on the resolved config (seed included).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace dgrover {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ExperimentKind {
    continuous,         // exact evolution per reservoir size, plus BJ curve
    trotter,            // noise-free (U_+ U_S)^L per reservoir size, plus BJ curve
    gate_circuit,       // gate-level circuit per reservoir size
    trotter_noise,      // ideal + noisy trajectories + BJ curve
    mean_deviation,     // Monte Carlo dF per step, one series per epsilon
    finite_bj,          // |a(t)|^2 of the finite ladder, plus 2 Gamma line
    residual_sweep,     // max residual oscillation vs Gamma, plus 2 Gamma line
    fixed_point,        // fixed-point ideal + noisy trajectories + guarantee
    fixed_point_sweep,  // fixed-point final dF vs sequence length
};

enum class DeltaRule {
    fixed,    // use `delta`
    known,    // C sqrt(M (N - M)) / (N R)
    unknown,  // 2 pi / sqrt(C N R)
};

struct ExperimentConfig {
    std::string figure_id = "custom";
    ExperimentKind kind = ExperimentKind::continuous;

    int n = 3;
    std::vector<std::uint64_t> solutions{0};

    std::vector<int> reservoir_qubits{0};
    DeltaRule delta_rule = DeltaRule::fixed;
    double delta = 0.1;
    double C = 5.0;

    double t_max = 0.0;  // continuous and finite-ladder horizons
    int samples = 400;
    double dt = 0.0;     // Trotter step
    int steps = 0;

    std::vector<double> epsilons;
    std::uint64_t seed = 0;
    int runs = 1;
    int trajectories = 0;

    std::vector<int> ladder_sizes;
    double beta = 1.0;
    double ladder_delta = 1.0;
    std::vector<double> betas;  // residual_sweep couplings

    std::vector<int> lengths;  // fixed-point sequence lengths

    std::string out_dir = "results";
    std::vector<std::string> notes;  // preset decisions carried into the manifest
};

/// Ids accepted by preset(); "custom" is not among them.
const std::vector<std::string>& figure_ids();

/// Throws UsageError for an unknown id.
ExperimentConfig preset(const std::string& figure_id);

/// Throws UsageError describing the first invalid field.
void check_config(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);

/// Accepts a bare config object or a manifest (uses its "config" member).
/// A preset figure_id starts from the preset and applies the given fields on
/// top; "custom" requires every field its kind uses.
ExperimentConfig config_from_json(const nlohmann::json& j);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Reservoir spacing for r qubits under the config's delta rule.
double resolve_delta(const ExperimentConfig& config, int r);

struct Diagnostic {
    enum class Severity { info, warning };
    Severity severity = Severity::info;
    std::string message;
};

std::vector<Diagnostic> validate(const ExperimentConfig& config);

std::string kind_name(ExperimentKind kind);

/// One plotted curve.
struct Series {
    std::string name;
    std::string provenance;      // "simulated", "analytic" or "bound"
    std::string abscissa_label;  // "t", "step", "ell" or "Gamma"
    std::string value_label;     // "F", "|a|^2", "dF" or "residual"
    std::vector<double> abscissa;
    std::vector<double> value;
    std::optional<std::vector<double>> stderr_values;
};

/// Computes every series of the experiment without touching the filesystem.
/// Sorted by name.
std::vector<Series> compute_series(const ExperimentConfig& config);

/// CSV text for one series: LF endings, 17 significant digits.
std::string to_csv(const Series& series);

/// Writes all series and the manifest; returns the written paths (CSV files
/// in name order, manifest last).
std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config);

}  // namespace dgrover
