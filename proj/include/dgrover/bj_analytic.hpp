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

// Closed-form Bixon-Jortner predictions.
//
// A source level coupled with strength beta to an infinite ladder of spacing
// delta decays at gamma = 2 pi beta^2 / delta and is refed by the ladder at
// multiples of the revival time tau = 2 pi / delta. The dissipative search
// Hamiltonian maps onto this model with the source |perp, +^r> and the ladder
// |S~_0, k>.

#pragma once

#include <complex>
#include <cstdint>

#include "dgrover/search_core.hpp"

namespace dgrover {

class BJParams {
public:
    BJParams(double eps_a, double beta, double delta);

    double eps_a() const { return eps_a_; }
    double beta() const { return beta_; }
    double delta() const { return delta_; }
    /// 2 pi beta^2 / delta
    double gamma() const { return gamma_; }
    /// 2 pi / delta
    double tau() const { return tau_; }

private:
    double eps_a_;
    double beta_;
    double delta_;
    double gamma_;
    double tau_;
};

/// eps_a = 1 - M/N, beta = sqrt(M (N - M) / R) / N, same delta.
BJParams map_to_bj(const SearchProblem& problem, const ReservoirSpec& spec);

/// Generalized Laguerre polynomial L_n^(alpha)(x) by three-term recurrence.
double laguerre_gen(int n, double alpha, double x);

/// Number of revival terms that are switched on at time t: #{j >= 1 : j tau < t}.
std::int64_t revivals_needed(const BJParams& params, double t);

/// Source amplitude a(t) of the infinite-ladder model, summing the first
/// max_revivals revival terms. Throws ArgumentError if that is fewer than
/// revivals_needed(t).
Complex bj_amplitude(const BJParams& params, double t, std::int64_t max_revivals);

/// 1 - |a(t)|^2 with only the first revival term; defined on [0, 2 tau).
double bj_fidelity_two_windows(const BJParams& params, double t);

/// 1 - |a(t)|^2 with every revival term active at t.
double bj_fidelity(const BJParams& params, double t);

/// Residual oscillation amplitude M (N - M) / (R N delta)^2.
double residual_gamma(const SearchProblem& problem, const ReservoirSpec& spec);

/// beta^2 / (delta^2 R) for a finite ladder of R levels.
double residual_gamma(double beta, double delta, double ladder_levels);

/// 2 Gamma, the bound on the squared residual oscillation amplitude.
double residual_bound(double gamma_resid);

}  // namespace dgrover
