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

// Fixed-point amplitude amplification baseline (Yoder, Low, Chuang 2014).
//
// Iterate j applies G(alpha_j, beta_j) = -S_s(alpha_j) S_t(beta_j) with
//   S_s(a) = I - (1 - e^{-ia}) |+^n><+^n|
//   S_t(b) = I - (1 - e^{ib})  sum_m |S_m><S_m|
// and the angle sequence of a length-l plan guarantees F >= 1 - delta^2 after
// the last iterate when 2l + 1 >= ln(2/delta) / sqrt(M/N).

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dgrover/search_core.hpp"
#include "dgrover/trotter.hpp"

namespace dgrover {

struct FixedPointPlan {
    int ell = 0;
    double delta_acc = 0.0;
    std::vector<double> alphas;
    std::vector<double> betas;  // betas[j] = -alphas[ell - 1 - j]
};

/// T_order(x): cos(order acos x) on [-1, 1], cosh(order acosh x) above 1.
double chebyshev_t(double order, double x);

/// Smallest l >= 1 with 2l + 1 >= ln(2/delta) / sqrt(M/N). Accepts M == N.
int fp_length(std::uint64_t N, std::uint64_t M, double delta_acc);

/// delta with 2l + 1 = ln(2/delta) / sqrt(M/N) exactly; may be >= 1 for short plans.
double fp_delta_for_length(std::uint64_t N, std::uint64_t M, int ell);

FixedPointPlan fp_angles(int ell, double delta_acc);

/// Fidelity after 0, 1, ..., ell iterates from |+^n>. With noise, iterate j
/// draws xi (for alpha) then xi' (for beta) from run `run` of noise->seed.
FidelityTrace run_fixed_point(const SearchProblem& problem, const FixedPointPlan& plan,
                              const std::optional<NoiseSpec>& noise = {}, std::uint64_t run = 0);

struct MeanDeviation {
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Monte Carlo E|F(eps) - F(0)| at the end of the sequence.
MeanDeviation fp_mean_deviation(const SearchProblem& problem, const FixedPointPlan& plan,
                                const NoiseSpec& noise);

}  // namespace dgrover
