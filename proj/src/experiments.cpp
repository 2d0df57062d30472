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

#include "dgrover/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "dgrover/bj_analytic.hpp"
#include "dgrover/errors.hpp"
#include "dgrover/finite_ladder.hpp"
#include "dgrover/fixed_point.hpp"
#include "dgrover/hamiltonians.hpp"
#include "dgrover/parameters.hpp"
#include "dgrover/trotter.hpp"

namespace dgrover {

NLOHMANN_JSON_SERIALIZE_ENUM(ExperimentKind,
                             {
                                 {ExperimentKind::continuous, "continuous"},
                                 {ExperimentKind::trotter, "trotter"},
                                 {ExperimentKind::gate_circuit, "gate_circuit"},
                                 {ExperimentKind::trotter_noise, "trotter_noise"},
                                 {ExperimentKind::mean_deviation, "mean_deviation"},
                                 {ExperimentKind::finite_bj, "finite_bj"},
                                 {ExperimentKind::residual_sweep, "residual_sweep"},
                                 {ExperimentKind::fixed_point, "fixed_point"},
                                 {ExperimentKind::fixed_point_sweep, "fixed_point_sweep"},
                             })

NLOHMANN_JSON_SERIALIZE_ENUM(DeltaRule, {
                                            {DeltaRule::fixed, "fixed"},
                                            {DeltaRule::known, "known"},
                                            {DeltaRule::unknown, "unknown"},
                                        })

namespace {

using nlohmann::json;

// Dense simulation limit on n + r.
constexpr int kMaxDenseQubits = 14;

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::string num(double value) { return fmt("%.5g", value); }

std::string eps_tag(double epsilon) { return "eps" + fmt("%g", epsilon); }

bool uses_reservoir(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::continuous:
        case ExperimentKind::trotter:
        case ExperimentKind::gate_circuit:
        case ExperimentKind::trotter_noise:
        case ExperimentKind::mean_deviation:
            return true;
        default:
            return false;
    }
}

bool uses_steps(ExperimentKind kind) {
    return kind == ExperimentKind::trotter || kind == ExperimentKind::gate_circuit ||
           kind == ExperimentKind::trotter_noise || kind == ExperimentKind::mean_deviation;
}

bool is_fixed_point(ExperimentKind kind) {
    return kind == ExperimentKind::fixed_point || kind == ExperimentKind::fixed_point_sweep;
}

bool uses_noise(ExperimentKind kind) {
    return kind == ExperimentKind::trotter_noise || kind == ExperimentKind::mean_deviation ||
           is_fixed_point(kind);
}

// Fields a "custom" config must spell out, by kind.
std::vector<std::string> required_fields(const json& j, ExperimentKind kind) {
    std::vector<std::string> req = {"n"};
    if (!j.contains("solutions")) req.push_back("M");
    const bool fixed_rule = !j.contains("delta_rule") || j.at("delta_rule") == "fixed";
    switch (kind) {
        case ExperimentKind::continuous:
            req.insert(req.end(), {"reservoir_qubits", "t_max", "samples"});
            break;
        case ExperimentKind::trotter:
        case ExperimentKind::gate_circuit:
            req.insert(req.end(), {"reservoir_qubits", "dt", "steps"});
            break;
        case ExperimentKind::trotter_noise:
            req.insert(req.end(), {"reservoir_qubits", "dt", "steps", "epsilons", "seed", "trajectories"});
            break;
        case ExperimentKind::mean_deviation:
            req.insert(req.end(), {"reservoir_qubits", "dt", "steps", "epsilons", "seed", "runs"});
            break;
        case ExperimentKind::finite_bj:
            req = {"ladder_sizes", "beta", "ladder_delta", "t_max", "samples"};
            break;
        case ExperimentKind::residual_sweep:
            req = {"ladder_sizes", "ladder_delta", "betas", "samples"};
            break;
        case ExperimentKind::fixed_point:
            req.insert(req.end(), {"lengths", "epsilons", "seed", "trajectories"});
            break;
        case ExperimentKind::fixed_point_sweep:
            req.insert(req.end(), {"lengths", "epsilons", "seed", "runs"});
            break;
    }
    if (uses_reservoir(kind)) req.push_back(fixed_rule ? "delta" : "C");
    return req;
}

template <typename T>
void read_if_present(const json& j, const char* key, T& field) {
    if (j.contains(key)) field = j.at(key).get<T>();
}

SearchProblem problem_of(const ExperimentConfig& c) { return SearchProblem(c.n, c.solutions); }

std::vector<double> step_axis(int steps) {
    std::vector<double> axis(std::size_t(steps) + 1);
    for (int i = 0; i <= steps; ++i) axis[std::size_t(i)] = double(i);
    return axis;
}

Series make_series(std::string name, std::string provenance, std::string abscissa_label,
                   std::string value_label, std::vector<double> abscissa, std::vector<double> value) {
    Series s;
    s.name = std::move(name);
    s.provenance = std::move(provenance);
    s.abscissa_label = std::move(abscissa_label);
    s.value_label = std::move(value_label);
    s.abscissa = std::move(abscissa);
    s.value = std::move(value);
    return s;
}

Series from_trace(std::string name, std::string abscissa_label, const FidelityTrace& trace) {
    return make_series(std::move(name), "simulated", std::move(abscissa_label), "F", trace.abscissa(),
                       trace.fidelity());
}

Series bj_series(const std::string& name, const BJParams& params, std::vector<double> abscissa,
                 double time_per_unit, const std::string& abscissa_label) {
    std::vector<double> value(abscissa.size());
    for (std::size_t i = 0; i < abscissa.size(); ++i)
        value[i] = bj_fidelity(params, abscissa[i] * time_per_unit);
    return make_series(name, "analytic", abscissa_label, "F", std::move(abscissa), std::move(value));
}

void add_continuous(const ExperimentConfig& c, std::vector<Series>& out) {
    const SearchProblem problem = problem_of(c);
    const std::vector<double> grid = uniform_grid(c.t_max, std::size_t(c.samples));
    for (int r : c.reservoir_qubits) {
        const ReservoirSpec spec(r, resolve_delta(c, r));
        const FidelityTrace trace = trace_continuous(build_dissipative(problem, spec),
                                                     uniform_state(problem.n(), r), grid, problem, spec);
        out.push_back(from_trace("continuous_r" + std::to_string(r), "t", trace));
        if (r > 0)
            out.push_back(bj_series("bj_r" + std::to_string(r), map_to_bj(problem, spec), grid, 1.0, "t"));
    }
}

void add_trotter(const ExperimentConfig& c, std::vector<Series>& out, bool gate_level) {
    const SearchProblem problem = problem_of(c);
    for (int r : c.reservoir_qubits) {
        const ReservoirSpec spec(r, resolve_delta(c, r));
        const FidelityTrace trace = gate_level ? run_gate_circuit(problem, spec, c.dt, c.steps)
                                               : run_trotter(problem, spec, c.dt, c.steps);
        out.push_back(from_trace((gate_level ? "gate_r" : "trotter_r") + std::to_string(r), "step", trace));
        if (r > 0)
            out.push_back(bj_series("bj_r" + std::to_string(r), map_to_bj(problem, spec),
                                    step_axis(c.steps), c.dt, "step"));
    }
}

void add_trotter_noise(const ExperimentConfig& c, std::vector<Series>& out) {
    const SearchProblem problem = problem_of(c);
    const int r = c.reservoir_qubits.front();
    const ReservoirSpec spec(r, resolve_delta(c, r));
    out.push_back(from_trace("ideal", "step", run_trotter(problem, spec, c.dt, c.steps)));
    out.push_back(bj_series("bj", map_to_bj(problem, spec), step_axis(c.steps), c.dt, "step"));
    for (double epsilon : c.epsilons) {
        const NoiseSpec noise{epsilon, c.seed, c.trajectories};
        for (int run = 0; run < c.trajectories; ++run)
            out.push_back(from_trace("noisy_" + eps_tag(epsilon) + "_run" + std::to_string(run), "step",
                                     run_trotter(problem, spec, c.dt, c.steps, noise, std::uint64_t(run))));
    }
}

void add_mean_deviation(const ExperimentConfig& c, std::vector<Series>& out) {
    const SearchProblem problem = problem_of(c);
    const int r = c.reservoir_qubits.front();
    const ReservoirSpec spec(r, resolve_delta(c, r));
    for (double epsilon : c.epsilons) {
        const DeviationTrace dev =
            mean_deviation_trace(problem, spec, c.dt, c.steps, NoiseSpec{epsilon, c.seed, c.runs});
        Series s = make_series("mean_deviation_" + eps_tag(epsilon), "simulated", "step", "dF",
                               dev.mean.abscissa(), dev.mean.fidelity());
        s.stderr_values = dev.standard_error;
        out.push_back(std::move(s));
    }
}

void add_finite_bj(const ExperimentConfig& c, std::vector<Series>& out) {
    const std::vector<double> grid = uniform_grid(c.t_max, std::size_t(c.samples));
    for (int ladder : c.ladder_sizes) {
        const BJLadderSpec spec{ladder, c.beta, c.ladder_delta, 0.0};
        out.push_back(make_series("amplitude_R" + std::to_string(ladder), "simulated", "t", "|a|^2", grid,
                                  source_population(spec, grid)));
    }
    const int first = c.ladder_sizes.front();
    const double bound = residual_bound(residual_gamma(c.beta, c.ladder_delta, double(first)));
    out.push_back(make_series("bound_R" + std::to_string(first), "bound", "t", "|a|^2", grid,
                              std::vector<double>(grid.size(), bound)));
}

void add_residual_sweep(const ExperimentConfig& c, std::vector<Series>& out) {
    std::set<double> all_gammas;
    for (int ladder : c.ladder_sizes) {
        std::map<double, double> by_gamma;
        for (double beta : c.betas) {
            const double g = residual_gamma(beta, c.ladder_delta, double(ladder));
            by_gamma[g] = max_residual_oscillation(BJLadderSpec{ladder, beta, c.ladder_delta, 0.0},
                                                   std::size_t(c.samples))
                              .max_deviation;
            all_gammas.insert(g);
        }
        std::vector<double> xs, ys;
        for (const auto& [g, v] : by_gamma) {
            xs.push_back(g);
            ys.push_back(v);
        }
        out.push_back(make_series("residual_R" + std::to_string(ladder), "simulated", "Gamma", "residual",
                                  std::move(xs), std::move(ys)));
    }
    std::vector<double> xs(all_gammas.begin(), all_gammas.end());
    std::vector<double> ys(xs.size());
    std::transform(xs.begin(), xs.end(), ys.begin(), residual_bound);
    out.push_back(make_series("bound", "bound", "Gamma", "residual", std::move(xs), std::move(ys)));
}

FixedPointPlan plan_for(const ExperimentConfig& c, int ell) {
    const SearchProblem problem = problem_of(c);
    return fp_angles(ell, fp_delta_for_length(problem.N(), problem.M(), ell));
}

void add_fixed_point(const ExperimentConfig& c, std::vector<Series>& out) {
    const SearchProblem problem = problem_of(c);
    const FixedPointPlan plan = plan_for(c, c.lengths.front());
    out.push_back(from_trace("ideal", "step", run_fixed_point(problem, plan)));
    const std::vector<double> axis = step_axis(plan.ell);
    out.push_back(make_series("guarantee", "bound", "step", "F", axis,
                              std::vector<double>(axis.size(), 1.0 - plan.delta_acc * plan.delta_acc)));
    for (double epsilon : c.epsilons) {
        const NoiseSpec noise{epsilon, c.seed, c.trajectories};
        for (int run = 0; run < c.trajectories; ++run)
            out.push_back(from_trace("noisy_" + eps_tag(epsilon) + "_run" + std::to_string(run), "step",
                                     run_fixed_point(problem, plan, noise, std::uint64_t(run))));
    }
}

void add_fixed_point_sweep(const ExperimentConfig& c, std::vector<Series>& out) {
    const SearchProblem problem = problem_of(c);
    for (double epsilon : c.epsilons) {
        std::vector<double> xs, ys, errs;
        for (int ell : c.lengths) {
            const MeanDeviation dev =
                fp_mean_deviation(problem, plan_for(c, ell), NoiseSpec{epsilon, c.seed, c.runs});
            xs.push_back(double(ell));
            ys.push_back(dev.mean);
            errs.push_back(dev.standard_error);
        }
        Series s = make_series("mean_deviation_" + eps_tag(epsilon), "simulated", "ell", "dF", std::move(xs),
                               std::move(ys));
        s.stderr_values = std::move(errs);
        out.push_back(std::move(s));
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string kind_name(ExperimentKind kind) { return json(kind).get<std::string>(); }

double resolve_delta(const ExperimentConfig& config, int r) {
    switch (config.delta_rule) {
        case DeltaRule::fixed:
            return config.delta;
        case DeltaRule::known:
            return choose_delta_known(problem_of(config), r, config.C).delta;
        case DeltaRule::unknown:
            return choose_delta_unknown(problem_of(config).N(), r, config.C).delta;
    }
    throw UsageError("unknown delta rule");
}

void check_config(const ExperimentConfig& c) {
    auto fail = [](const std::string& msg) { throw UsageError("invalid config: " + msg); };
    const auto& ids = figure_ids();
    if (c.figure_id != "custom" && std::find(ids.begin(), ids.end(), c.figure_id) == ids.end())
        fail("figure_id '" + c.figure_id + "' is neither a preset nor 'custom'");
    if (c.figure_id.empty() || c.figure_id.find('/') != std::string::npos) fail("bad figure_id");

    const bool ladder_kind = c.kind == ExperimentKind::finite_bj || c.kind == ExperimentKind::residual_sweep;
    if (!ladder_kind) {
        try {
            (void)problem_of(c);
        } catch (const ArgumentError& e) {
            fail(e.what());
        }
    }
    if (uses_reservoir(c.kind)) {
        if (c.reservoir_qubits.empty()) fail("reservoir_qubits is empty");
        for (int r : c.reservoir_qubits)
            if (r < 0 || c.n + r > kMaxDenseQubits) fail("need 0 <= r and n + r <= 14");
        if (c.delta_rule == DeltaRule::fixed && !(c.delta > 0.0)) fail("delta must be positive");
        if (c.delta_rule != DeltaRule::fixed && !(c.C > 0.0)) fail("C must be positive");
    }
    if (c.kind == ExperimentKind::trotter_noise || c.kind == ExperimentKind::mean_deviation)
        if (c.reservoir_qubits.size() != 1) fail("noise experiments take exactly one reservoir size");
    if (c.kind == ExperimentKind::continuous || c.kind == ExperimentKind::finite_bj) {
        if (!(c.t_max > 0.0)) fail("t_max must be positive");
        if (c.samples < 2) fail("samples must be >= 2");
    }
    if (c.kind == ExperimentKind::residual_sweep && c.samples < 2) fail("samples must be >= 2");
    if (uses_steps(c.kind)) {
        if (!(c.dt > 0.0)) fail("dt must be positive");
        if (c.steps < 1) fail("steps must be >= 1");
    }
    if (uses_noise(c.kind)) {
        if (c.epsilons.empty()) fail("epsilons is empty");
        for (double e : c.epsilons)
            if (!(e >= 0.0)) fail("epsilons must be >= 0");
        const bool averaged = c.kind == ExperimentKind::mean_deviation || c.kind == ExperimentKind::fixed_point_sweep;
        if (averaged && c.runs < 1) fail("runs must be >= 1");
        if (!averaged && c.trajectories < 0) fail("trajectories must be >= 0");
    }
    if (ladder_kind) {
        if (c.ladder_sizes.empty()) fail("ladder_sizes is empty");
        for (int s : c.ladder_sizes)
            if (s <= 0 || s % 2 != 0 || s > 4096) fail("ladder sizes must be even, in [2, 4096]");
        if (!(c.ladder_delta > 0.0)) fail("ladder_delta must be positive");
        if (c.kind == ExperimentKind::finite_bj && !(c.beta >= 0.0)) fail("beta must be >= 0");
        if (c.kind == ExperimentKind::residual_sweep) {
            if (c.betas.empty()) fail("betas is empty");
            for (double b : c.betas) {
                const BJParams p(0.0, b > 0.0 ? b : 0.0, c.ladder_delta);
                if (!(b > 0.0) || !(5.0 / p.gamma() < 0.9 * p.tau()))
                    fail("beta " + num(b) + " leaves no window between decay (5/gamma) and 0.9 tau");
            }
        }
    }
    if (is_fixed_point(c.kind)) {
        if (c.lengths.empty()) fail("lengths is empty");
        const SearchProblem problem = problem_of(c);
        for (int ell : c.lengths) {
            if (ell < 1) fail("lengths must be >= 1");
            if (!(fp_delta_for_length(problem.N(), problem.M(), ell) < 1.0))
                fail("length " + std::to_string(ell) + " is too short: its accuracy delta is >= 1");
        }
    }
}

json to_json(const ExperimentConfig& c) {
    return json{{"figure_id", c.figure_id},
                {"kind", c.kind},
                {"n", c.n},
                {"solutions", c.solutions},
                {"reservoir_qubits", c.reservoir_qubits},
                {"delta_rule", c.delta_rule},
                {"delta", c.delta},
                {"C", c.C},
                {"t_max", c.t_max},
                {"samples", c.samples},
                {"dt", c.dt},
                {"steps", c.steps},
                {"epsilons", c.epsilons},
                {"seed", c.seed},
                {"runs", c.runs},
                {"trajectories", c.trajectories},
                {"ladder_sizes", c.ladder_sizes},
                {"beta", c.beta},
                {"ladder_delta", c.ladder_delta},
                {"betas", c.betas},
                {"lengths", c.lengths},
                {"out_dir", c.out_dir},
                {"notes", c.notes}};
}

ExperimentConfig config_from_json(const json& input) {
    try {
        const json& j = (input.contains("config") && input.at("config").is_object()) ? input.at("config") : input;
        if (!j.is_object()) throw UsageError("config must be a JSON object");
        const std::string id = j.value("figure_id", std::string("custom"));
        ExperimentConfig c;
        if (id == "custom") {
            if (!j.contains("kind")) throw UsageError("custom config requires 'kind'");
            c.kind = j.at("kind").get<ExperimentKind>();
            if (json(c.kind).is_null()) throw UsageError("unknown kind " + j.at("kind").dump());
            for (const std::string& key : required_fields(j, c.kind))
                if (!j.contains(key)) throw UsageError("custom config requires '" + key + "'");
        } else {
            c = preset(id);
        }
        c.figure_id = id;
        read_if_present(j, "kind", c.kind);
        read_if_present(j, "n", c.n);
        if (j.contains("solutions")) {
            c.solutions = j.at("solutions").get<std::vector<std::uint64_t>>();
        } else if (j.contains("M")) {
            const auto m = j.at("M").get<std::uint64_t>();
            c.solutions.resize(m);
            for (std::uint64_t i = 0; i < m; ++i) c.solutions[i] = i;
        }
        read_if_present(j, "reservoir_qubits", c.reservoir_qubits);
        read_if_present(j, "delta_rule", c.delta_rule);
        read_if_present(j, "delta", c.delta);
        read_if_present(j, "C", c.C);
        read_if_present(j, "t_max", c.t_max);
        read_if_present(j, "samples", c.samples);
        read_if_present(j, "dt", c.dt);
        read_if_present(j, "steps", c.steps);
        read_if_present(j, "epsilons", c.epsilons);
        read_if_present(j, "seed", c.seed);
        read_if_present(j, "runs", c.runs);
        read_if_present(j, "trajectories", c.trajectories);
        read_if_present(j, "ladder_sizes", c.ladder_sizes);
        read_if_present(j, "beta", c.beta);
        read_if_present(j, "ladder_delta", c.ladder_delta);
        read_if_present(j, "betas", c.betas);
        read_if_present(j, "lengths", c.lengths);
        read_if_present(j, "out_dir", c.out_dir);
        read_if_present(j, "notes", c.notes);
        if (json(c.kind).is_null() || json(c.delta_rule).is_null())
            throw UsageError("unrecognized kind or delta_rule");
        return c;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read config " + path.string());
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError("config " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(j);
}

std::vector<Diagnostic> validate(const ExperimentConfig& c) {
    std::vector<Diagnostic> out;
    auto info = [&](std::string m) { out.push_back({Diagnostic::Severity::info, std::move(m)}); };
    auto warn = [&](std::string m) { out.push_back({Diagnostic::Severity::warning, std::move(m)}); };
    try {
        check_config(c);
    } catch (const std::exception& e) {
        warn(e.what());
        return out;
    }
    auto revival_check = [&](const std::string& label, double horizon, double tau) {
        const auto crossings = std::int64_t(std::floor(horizon / tau));
        if (crossings >= 1)
            warn(label + "horizon t = " + num(horizon) + " crosses " + std::to_string(crossings) +
                 (crossings == 1 ? " revival" : " revivals") + " (tau = " + num(tau) + ")");
    };

    if (uses_reservoir(c.kind)) {
        const SearchProblem problem = problem_of(c);
        const double horizon = uses_steps(c.kind) ? c.dt * c.steps : c.t_max;
        for (int r : c.reservoir_qubits) {
            const std::string label = "r=" + std::to_string(r) + ": ";
            if (r == 0) {
                info(label + "standard search, t_max = (pi/2) sqrt(N/M) = " +
                     num(standard_grover_tmax(problem.N(), problem.M())));
                continue;
            }
            const ReservoirSpec spec(r, resolve_delta(c, r));
            const BJParams bj = map_to_bj(problem, spec);
            info(label + "delta = " + num(spec.delta()) + ", gamma = " + num(bj.gamma()) + ", tau = " +
                 num(bj.tau()) + ", Gamma = " + num(residual_gamma(problem, spec)) +
                 ", runtime estimate 1/gamma = " + num(1.0 / bj.gamma()));
            const CriteriaResult crit = check_criteria(problem, spec);
            if (!crit.separation_ok)
                warn(label + "revival-separation criterion violated: R delta^2 = " +
                     num(double(spec.R()) * spec.delta() * spec.delta()) +
                     " is not << 4 pi^2 M(N-M)/N^2");
            if (!crit.smoothness_ok)
                warn(label + "residual-oscillation criterion violated: Gamma = " +
                     num(residual_gamma(problem, spec)) + " is not << 1");
            revival_check(label, horizon, bj.tau());
        }
    }
    if (c.kind == ExperimentKind::finite_bj || c.kind == ExperimentKind::residual_sweep) {
        const std::vector<double> couplings = c.kind == ExperimentKind::finite_bj ? std::vector<double>{c.beta} : c.betas;
        for (int ladder : c.ladder_sizes)
            for (double beta : couplings) {
                const BJParams bj(0.0, beta, c.ladder_delta);
                const double g = residual_gamma(beta, c.ladder_delta, double(ladder));
                const std::string label = "R=" + std::to_string(ladder) + ", beta=" + num(beta) + ": ";
                info(label + "gamma = " + num(bj.gamma()) + ", tau = " + num(bj.tau()) + ", Gamma = " + num(g) +
                     ", bound 2 Gamma = " + num(residual_bound(g)));
                if (c.kind == ExperimentKind::finite_bj) revival_check(label, c.t_max, bj.tau());
            }
    }
    if (is_fixed_point(c.kind)) {
        const SearchProblem problem = problem_of(c);
        for (int ell : c.lengths) {
            const double d = fp_delta_for_length(problem.N(), problem.M(), ell);
            info("l=" + std::to_string(ell) + ": delta = " + num(d) + ", guaranteed F >= " + num(1.0 - d * d));
        }
    }
    return out;
}

std::vector<Series> compute_series(const ExperimentConfig& c) {
    check_config(c);
    std::vector<Series> out;
    switch (c.kind) {
        case ExperimentKind::continuous: add_continuous(c, out); break;
        case ExperimentKind::trotter: add_trotter(c, out, false); break;
        case ExperimentKind::gate_circuit: add_trotter(c, out, true); break;
        case ExperimentKind::trotter_noise: add_trotter_noise(c, out); break;
        case ExperimentKind::mean_deviation: add_mean_deviation(c, out); break;
        case ExperimentKind::finite_bj: add_finite_bj(c, out); break;
        case ExperimentKind::residual_sweep: add_residual_sweep(c, out); break;
        case ExperimentKind::fixed_point: add_fixed_point(c, out); break;
        case ExperimentKind::fixed_point_sweep: add_fixed_point_sweep(c, out); break;
    }
    std::sort(out.begin(), out.end(), [](const Series& a, const Series& b) { return a.name < b.name; });
    return out;
}

std::string to_csv(const Series& s) {
    const bool with_err = s.stderr_values.has_value();
    std::string text = with_err ? "abscissa,value,stderr\n" : "abscissa,value\n";
    char buf[96];
    for (std::size_t i = 0; i < s.abscissa.size(); ++i) {
        if (with_err)
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.abscissa[i], s.value[i], (*s.stderr_values)[i]);
        else
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.abscissa[i], s.value[i]);
        text += buf;
    }
    return text;
}

std::vector<std::filesystem::path> run_experiment(const ExperimentConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    const std::vector<Series> series = compute_series(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const std::filesystem::path dir = std::filesystem::path(config.out_dir) / config.figure_id;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    json series_meta = json::array();
    for (const Series& s : series) {
        const auto path = dir / (s.name + ".csv");
        write_file(path, to_csv(s));
        written.push_back(path);
        series_meta.push_back({{"name", s.name},
                               {"file", s.name + ".csv"},
                               {"provenance", s.provenance},
                               {"abscissa", s.abscissa_label},
                               {"value", s.value_label},
                               {"rows", s.abscissa.size()},
                               {"has_stderr", s.stderr_values.has_value()}});
    }
    json diagnostics = json::array();
    for (const Diagnostic& d : validate(config))
        diagnostics.push_back({{"severity", d.severity == Diagnostic::Severity::warning ? "warning" : "info"},
                               {"message", d.message}});
    const json manifest = {{"tool", "dgrover"},
                           {"version", kToolVersion},
                           {"figure_id", config.figure_id},
                           {"seed", config.seed},
                           {"config", to_json(config)},
                           {"series", series_meta},
                           {"diagnostics", diagnostics},
                           {"notes", config.notes},
                           {"wall_clock_seconds", elapsed}};
    const auto manifest_path = dir / "manifest.json";
    write_file(manifest_path, manifest.dump(2) + "\n");
    written.push_back(manifest_path);
    return written;
}

}  // namespace dgrover
