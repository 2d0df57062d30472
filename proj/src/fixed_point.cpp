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

#include "dgrover/fixed_point.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"
#include "dgrover/rng.hpp"
#include "dgrover/stats.hpp"

namespace dgrover {

using std::numbers::pi;

namespace {

// Inverse cotangent onto (0, pi).
double arccot(double x) { return pi / 2.0 - std::atan(x); }

void check_delta(double delta_acc) {
    if (!(delta_acc > 0.0 && delta_acc < 1.0))
        throw ArgumentError("fixed-point: delta must lie in (0, 1)");
}

}  // namespace

double chebyshev_t(double order, double x) {
    if (x < -1.0) throw ArgumentError("chebyshev_t: x must be >= -1");
    if (x <= 1.0) return std::cos(order * std::acos(x));
    return std::cosh(order * std::acosh(x));
}

int fp_length(std::uint64_t N, std::uint64_t M, double delta_acc) {
    check_delta(delta_acc);
    if (M < 1 || M > N) throw ArgumentError("fp_length: need 1 <= M <= N");
    const double required = std::log(2.0 / delta_acc) / std::sqrt(double(M) / double(N));
    const int ell = int(std::ceil((required - 1.0) / 2.0));
    return ell < 1 ? 1 : ell;
}

double fp_delta_for_length(std::uint64_t N, std::uint64_t M, int ell) {
    if (ell < 1) throw ArgumentError("fp_delta_for_length: ell must be >= 1");
    if (M < 1 || M > N) throw ArgumentError("fp_delta_for_length: need 1 <= M <= N");
    return 2.0 * std::exp(-double(2 * ell + 1) * std::sqrt(double(M) / double(N)));
}

FixedPointPlan fp_angles(int ell, double delta_acc) {
    if (ell < 1) throw ArgumentError("fp_angles: ell must be >= 1");
    check_delta(delta_acc);
    const double length = 2.0 * ell + 1.0;
    const double cheb = chebyshev_t(1.0 / length, 1.0 / delta_acc);
    const double shrink = std::sqrt(1.0 - 1.0 / (cheb * cheb));
    FixedPointPlan plan;
    plan.ell = ell;
    plan.delta_acc = delta_acc;
    plan.alphas.resize(std::size_t(ell));
    plan.betas.resize(std::size_t(ell));
    for (int j = 1; j <= ell; ++j)
        plan.alphas[std::size_t(j - 1)] = 2.0 * arccot(std::tan(2.0 * pi * j / length) * shrink);
    for (int j = 1; j <= ell; ++j)
        plan.betas[std::size_t(j - 1)] = -plan.alphas[std::size_t(ell - j)];
    return plan;
}

FidelityTrace run_fixed_point(const SearchProblem& problem, const FixedPointPlan& plan,
                              const std::optional<NoiseSpec>& noise, std::uint64_t run) {
    if (plan.alphas.size() != std::size_t(plan.ell) || plan.betas.size() != std::size_t(plan.ell))
        throw ArgumentError("run_fixed_point: plan angle count does not match ell");
    if (noise) noise->validate();
    const double epsilon = noise ? noise->epsilon : 0.0;
    SplitMix64 rng = run_stream(noise ? noise->seed : 0, run);

    StateVector state = uniform_state(problem.n(), 0);
    auto psi = state.amplitudes();
    const double dim = double(psi.size());
    FidelityTrace trace;
    trace.reserve(std::size_t(plan.ell) + 1);
    trace.append(0.0, success_probability(psi, problem, 1));
    std::vector<Complex> target_phase(1);
    for (int j = 0; j < plan.ell; ++j) {
        double alpha = plan.alphas[std::size_t(j)];
        double beta = plan.betas[std::size_t(j)];
        if (noise) {
            alpha *= 1.0 + epsilon * rng.uniform_symmetric();
            beta *= 1.0 + epsilon * rng.uniform_symmetric();
        }
        // S_t(beta): solutions pick up e^{i beta}.
        target_phase[0] = std::polar(1.0, beta);
        kernels::omp::scale_solution_blocks(psi, problem.solutions(), target_phase);
        // S_s(alpha) followed by the overall minus sign of G.
        const Complex total = kernels::omp::sum(psi);
        kernels::omp::subtract_constant(psi, (1.0 - std::polar(1.0, -alpha)) * total / dim);
        for (Complex& a : psi) a = -a;
        trace.append(double(j + 1), success_probability(psi, problem, 1));
    }
    return trace;
}

MeanDeviation fp_mean_deviation(const SearchProblem& problem, const FixedPointPlan& plan,
                                const NoiseSpec& noise) {
    noise.validate();
    const double ideal = run_fixed_point(problem, plan).fidelity().back();
    std::vector<double> deviations(std::size_t(noise.runs));
#pragma omp parallel for schedule(dynamic)
    for (int run = 0; run < noise.runs; ++run) {
        const double noisy = run_fixed_point(problem, plan, noise, std::uint64_t(run)).fidelity().back();
        deviations[std::size_t(run)] = std::abs(noisy - ideal);
    }
    const SampleSummary summary = summarize(deviations);
    return {summary.mean, summary.standard_error};
}

}  // namespace dgrover
