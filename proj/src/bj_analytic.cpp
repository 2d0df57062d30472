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

#include "dgrover/bj_analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dgrover/errors.hpp"

namespace dgrover {

using std::numbers::pi;

BJParams::BJParams(double eps_a, double beta, double delta)
    : eps_a_(eps_a),
      beta_(beta),
      delta_(delta),
      gamma_(2.0 * pi * beta * beta / delta),
      tau_(2.0 * pi / delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("BJParams: delta must be > 0");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw ArgumentError("BJParams: beta must be >= 0");
}

BJParams map_to_bj(const SearchProblem& problem, const ReservoirSpec& spec) {
    const double n = double(problem.N());
    const double m = double(problem.M());
    const double r = double(spec.R());
    return BJParams(1.0 - m / n, std::sqrt(m * (n - m) / r) / n, spec.delta());
}

double laguerre_gen(int n, double alpha, double x) {
    if (n < 0) throw ArgumentError("laguerre_gen: degree must be >= 0");
    double prev = 1.0;
    if (n == 0) return prev;
    double curr = 1.0 + alpha - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + alpha - x) * curr - (k - 1.0 + alpha) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

std::int64_t revivals_needed(const BJParams& params, double t) {
    if (!(t >= 0.0)) throw ArgumentError("revivals_needed: t must be >= 0");
    // Theta(0) = 0: the j-th term is off at exactly t = j tau.
    std::int64_t j = std::int64_t(std::floor(t / params.tau()));
    while (j > 0 && !(double(j) * params.tau() < t)) --j;
    while (double(j + 1) * params.tau() < t) ++j;
    return j;
}

Complex bj_amplitude(const BJParams& params, double t, std::int64_t max_revivals) {
    const std::int64_t needed = revivals_needed(params, t);
    if (max_revivals < needed)
        throw ArgumentError("bj_amplitude: max_revivals " + std::to_string(max_revivals) +
                            " < revivals active at t (" + std::to_string(needed) + ")");
    const double gamma = params.gamma();
    double envelope = std::exp(-gamma * t / 2.0);
    for (std::int64_t j = 1; j <= needed; ++j) {
        const double x = gamma * (t - double(j) * params.tau());
        envelope -= x / double(j) * std::exp(-x / 2.0) * laguerre_gen(int(j - 1), 1.0, x);
    }
    return std::polar(1.0, -params.eps_a() * t) * envelope;
}

double bj_fidelity_two_windows(const BJParams& params, double t) {
    const double tau = params.tau();
    if (!(t >= 0.0) || !(t < 2.0 * tau))
        throw ArgumentError("bj_fidelity_two_windows: t must lie in [0, 2 tau)");
    const double gamma = params.gamma();
    double a = std::exp(-gamma * t / 2.0);
    if (t > tau) a -= gamma * std::exp(-gamma * (t - tau) / 2.0) * (t - tau);
    return 1.0 - a * a;
}

double bj_fidelity(const BJParams& params, double t) {
    return 1.0 - std::norm(bj_amplitude(params, t, revivals_needed(params, t)));
}

double residual_gamma(const SearchProblem& problem, const ReservoirSpec& spec) {
    const double n = double(problem.N());
    const double m = double(problem.M());
    const double scale = double(spec.R()) * n * spec.delta();
    return m * (n - m) / (scale * scale);
}

double residual_gamma(double beta, double delta, double ladder_levels) {
    if (!(delta > 0.0) || !(ladder_levels > 0.0))
        throw ArgumentError("residual_gamma: delta and ladder size must be positive");
    return beta * beta / (delta * delta * ladder_levels);
}

double residual_bound(double gamma_resid) {
    if (!(gamma_resid >= 0.0)) throw ArgumentError("residual_bound: Gamma must be >= 0");
    return 2.0 * gamma_resid;
}

}  // namespace dgrover
