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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Each criterion also has a wall-clock limit.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dgrover/bj_analytic.hpp"
#include "dgrover/experiments.hpp"
#include "dgrover/finite_ladder.hpp"
#include "dgrover/fixed_point.hpp"
#include "dgrover/hamiltonians.hpp"
#include "dgrover/parameters.hpp"
#include "dgrover/trotter.hpp"

using namespace dgrover;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string f(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * double(i) / double(n - 1);
    return out;
}

double distance(const StateVector& a, const StateVector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

Outcome standard_search() {
    Outcome out{true, ""};
    for (int n = 3; n <= 6; ++n) {
        const SearchProblem problem(n, {0});
        const ReservoirSpec spec(0, 1.0);
        const double N = double(problem.N());
        const auto prop = diagonalize(build_standard_grover(problem));
        const auto psi0 = uniform_state(n, 0);
        const std::vector<double> at = {standard_grover_tmax(problem.N(), 1)};
        const double f_max = trace_continuous(prop, psi0, at, problem, spec).fidelity()[0];

        // Period: the first return to the minimum after t = 0.
        const double expected = pi * std::sqrt(N);
        const auto grid = linspace(0.5 * expected, 1.5 * expected, 20001);
        const auto tr = trace_continuous(prop, psi0, grid, problem, spec);
        const auto it = std::min_element(tr.fidelity().begin(), tr.fidelity().end());
        const double period = grid[std::size_t(it - tr.fidelity().begin())];
        const double rel = std::abs(period - expected) / expected;
        out.pass = out.pass && f_max >= 0.999 && rel <= 0.02;
        out.detail += "n=" + std::to_string(n) + " F(t_max)=" + f("%.6f", f_max) + " period err=" +
                      f("%.2e", rel) + "; ";
    }
    return out;
}

struct FigureTwo {
    SearchProblem problem{3, {0}};
    ReservoirSpec spec{4, 0.1};
    BJParams bj = map_to_bj(problem, spec);
    Propagator prop = diagonalize(build_dissipative(problem, spec));
};

Outcome decay_vs_prediction() {
    const FigureTwo fig;
    const double tau = fig.bj.tau();
    const auto grid = linspace(0.0, 0.9 * tau, 4001);
    const auto tr = trace_continuous(fig.prop, uniform_state(3, 4), grid, fig.problem, fig.spec);
    double worst = 0.0, t_worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = std::abs(tr.fidelity()[i] - bj_fidelity_two_windows(fig.bj, grid[i]));
        if (d > worst) {
            worst = d;
            t_worst = grid[i];
        }
    }
    const std::vector<double> at = {0.8 * tau};
    const double f08 = trace_continuous(fig.prop, uniform_state(3, 4), at, fig.problem, fig.spec).fidelity()[0];
    return {worst <= 0.1 && f08 >= 0.85, "max |F_sim - F_BJ| = " + f("%.4f", worst) + " at t=" + f("%.3f", t_worst) +
                                            " (limit 0.1); F_sim(0.8 tau) = " + f("%.5f", f08) + " (limit 0.85)"};
}

Outcome revival() {
    const FigureTwo fig;
    const double tau = fig.bj.tau(), gamma = fig.bj.gamma();
    const auto grid = linspace(tau, tau + 4.0 / gamma, 4001);
    const auto tr = trace_continuous(fig.prop, uniform_state(3, 4), grid, fig.problem, fig.spec);
    const double sim_min = *std::min_element(tr.fidelity().begin(), tr.fidelity().end());
    double bj_min = 1.0;
    for (double t : grid) bj_min = std::min(bj_min, bj_fidelity(fig.bj, t));
    const double at_two = bj_fidelity(fig.bj, tau + 2.0 / gamma);
    const bool pass = sim_min <= 0.6 && std::abs(sim_min - bj_min) <= 0.1;
    return {pass, "min F_sim over [tau, tau+4/gamma] = " + f("%.4f", sim_min) + " (limit 0.6); BJ min = " +
                      f("%.4f", bj_min) + ", BJ at tau+2/gamma = " + f("%.4f", at_two) + ", gap " +
                      f("%.4f", std::abs(sim_min - bj_min)) + " (limit 0.1)"};
}

// Least-squares slope of log ||psi_trotter - psi_exact|| against log dt at
// t = 20 pi, dt = pi / 2^h for h = 0..7.
double observed_order(int r) {
    const SearchProblem problem(3, {0});
    const ReservoirSpec spec(r, 0.1);
    const double t = 20.0 * pi;
    const auto exact = evolve(diagonalize(build_dissipative(problem, spec)), uniform_state(3, r), t);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int levels = 8;
    for (int h = 0; h < levels; ++h) {
        const int steps = 20 << h;
        const double x = std::log(t / steps);
        const double y = std::log(distance(trotter_state(problem, spec, t / steps, steps), exact));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (levels * sxy - sx * sy) / (levels * sxx - sx * sx);
}

Outcome trotter_gate() {
    Outcome out{true, ""};
    const SearchProblem problem(3, {0});
    for (int r : {3, 4}) {
        const ReservoirSpec spec(r, 0.1);
        const auto gate = run_gate_circuit_detailed(problem, spec, pi, 20);
        const auto direct = run_trotter(problem, spec, pi, 20);
        double diff = 0.0;
        for (std::size_t i = 0; i < direct.size(); ++i)
            diff = std::max(diff, std::abs(gate.trace.fidelity()[i] - direct.fidelity()[i]));
        const double leak = *std::max_element(gate.ancilla_excited.begin(), gate.ancilla_excited.end());
        const double order = observed_order(r);
        out.pass = out.pass && diff < 1e-10 && leak < 1e-12 && order >= 1.0;
        out.detail += "r=" + std::to_string(r) + " dF=" + f("%.1e", diff) + " leak=" + f("%.1e", leak) +
                      " order=" + f("%.4f", order) + "; ";
    }
    out.detail += "limits 1e-10, 1e-12, order >= 1";
    return out;
}

Outcome finite_ladder() {
    Outcome out{true, ""};
    for (int ladder : {10, 30, 50}) {
        const auto res = max_residual_oscillation(BJLadderSpec{ladder, 1.0, 1.0, 0.0}, 4000);
        const double bound = residual_bound(residual_gamma(1.0, 1.0, double(ladder)));
        out.pass = out.pass && res.max_deviation <= bound;
        out.detail += "R=" + std::to_string(ladder) + " osc=" + f("%.5f", res.max_deviation) + " <= " +
                      f("%.5f", bound) + "; ";
    }
    return out;
}

Outcome parameter_identities() {
    double worst_runtime = 0.0, worst_gamma = 0.0;
    int cases = 0;
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t m = 1; m <= 4 && m < (std::uint64_t{1} << n); ++m)
            for (int r = 0; r <= 5; ++r)
                for (double C : {3.0, 5.0, 8.0}) {
                    const auto problem = SearchProblem::first_m(n, m);
                    const auto choice = choose_delta_known(problem, r, C);
                    const ReservoirSpec spec(r, choice.delta);
                    const auto bj = map_to_bj(problem, spec);
                    worst_runtime = std::max(worst_runtime, std::abs(bj.gamma() * choice.runtime_estimate - 1.0));
                    const double main_text = residual_gamma(problem, spec);
                    const double ladder = residual_gamma(bj.beta(), bj.delta(), double(spec.R()));
                    worst_gamma = std::max(worst_gamma, std::abs(main_text - ladder) / main_text);
                    ++cases;
                }
    return {worst_runtime <= 1e-12 && worst_gamma <= 1e-12,
            std::to_string(cases) + " cases; max |gamma*runtime - 1| = " + f("%.1e", worst_runtime) +
                ", max rel Gamma mismatch = " + f("%.1e", worst_gamma) + " (limit 1e-12)"};
}

Outcome fixed_point_guarantee() {
    Outcome out{true, ""};
    const SearchProblem problem(6, {0});
    for (double d : {0.1, 0.2}) {
        const int ell = fp_length(64, 1, d);
        const double final_f = run_fixed_point(problem, fp_angles(ell, d)).fidelity().back();
        out.pass = out.pass && final_f >= 1.0 - d * d;
        out.detail += "delta=" + f("%.1f", d) + " l=" + std::to_string(ell) + " F=" + f("%.5f", final_f) +
                      " >= " + f("%.2f", 1.0 - d * d) + "; ";
    }
    return out;
}

Outcome robustness() {
    const auto fig = preset("fig4b");
    const SearchProblem problem(6, {0});
    const ReservoirSpec spec(3, choose_delta_known(problem, 3, 3.0).delta);
    const double dt = pi;
    const auto diss = mean_deviation_trace(problem, spec, dt, 64, NoiseSpec{0.05, fig.seed, 100});
    const auto diss_zero = mean_deviation_trace(problem, spec, dt, 64, NoiseSpec{0.0, fig.seed, 100});

    const BJParams bj = map_to_bj(problem, spec);
    const auto first = std::size_t(std::ceil(5.0 / bj.gamma() / dt));
    const auto last = std::size_t(std::floor(0.9 * bj.tau() / dt));
    const auto& df = diss.mean.fidelity();
    const double plateau = *std::max_element(df.begin() + std::ptrdiff_t(first), df.begin() + std::ptrdiff_t(last) + 1);

    bool matched = true, zero_ok = true;
    double fp_min = 1.0;
    std::string per_ell;
    for (double v : diss_zero.mean.fidelity()) zero_ok = zero_ok && v == 0.0;
    for (int ell = 9; ell <= 15; ++ell) {
        const auto plan = fp_angles(ell, fp_delta_for_length(64, 1, ell));
        const double fp = fp_mean_deviation(problem, plan, NoiseSpec{0.05, fig.seed, 1000}).mean;
        zero_ok = zero_ok && fp_mean_deviation(problem, plan, NoiseSpec{0.0, fig.seed, 1000}).mean == 0.0;
        matched = matched && df[std::size_t(ell)] < fp;
        fp_min = std::min(fp_min, fp);
        per_ell += " l=" + std::to_string(ell) + ":" + f("%.4f", df[std::size_t(ell)]) + "<" + f("%.4f", fp);
    }
    const bool pass = matched && plateau < fp_min && zero_ok;
    return {pass, "plateau max dF (steps " + std::to_string(first) + ".." + std::to_string(last) + ") = " +
                      f("%.4f", plateau) + " < min FP dF(l>=9) = " + f("%.4f", fp_min) + "; matched calls" + per_ell +
                      "; eps=0 exact: " + (zero_ok ? "yes" : "no")};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / ("dgrover_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    bool same = true;
    std::size_t files = 0;
    for (const auto& id : figure_ids()) {
        ExperimentConfig c = preset(id);
        c.out_dir = (root / "a").string();
        const auto first = run_experiment(c);
        c.out_dir = (root / "b").string();
        const auto second = run_experiment(c);
        same = same && first.size() == second.size();
        for (std::size_t i = 0; same && i + 1 < first.size(); ++i, ++files)
            same = slurp(first[i]) == slurp(second[i]) && !slurp(first[i]).empty();
    }
    fs::remove_all(root);
    return {same, std::to_string(figure_ids().size()) + " presets, " + std::to_string(files) +
                      " CSV files compared byte for byte"};
}

struct Criterion {
    const char* name;
    double limit_seconds;  // <= 0: no limit
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"standard continuous search", 5.0, standard_search},
        {"dissipative decay vs BJ prediction", 10.0, decay_vs_prediction},
        {"revival structure", 10.0, revival},
        {"Trotter/gate equivalence and convergence", 5.0, trotter_gate},
        {"finite-ladder residual bound", 10.0, finite_ladder},
        {"parameter identities", 1.0, parameter_identities},
        {"fixed-point ideal guarantee", 2.0, fixed_point_guarantee},
        {"robustness contrast", 180.0, robustness},
        {"determinism", 0.0, determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds <= 0.0 || secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s [%zu] %s: %s | %.2fs%s%s\n", pass ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(), secs,
                    c.limit_seconds > 0.0 ? f(" (limit %gs)", c.limit_seconds).c_str() : "",
                    in_time ? "" : " TIME LIMIT EXCEEDED");
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
