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

#include "dgrover/parameters.hpp"

#include <cmath>
#include <numbers>

#include "dgrover/errors.hpp"

namespace dgrover {

using std::numbers::pi;

namespace {

// M (N - M) / N^2
double solution_weight(double n, double m) { return m * (n - m) / (n * n); }

CriteriaResult evaluate(double n, double m, double r, double delta, double margin) {
    if (!(margin > 1.0)) throw ArgumentError("check_criteria: margin must exceed 1");
    const double weight = solution_weight(n, m);
    CriteriaResult out;
    out.separation_ok = r * delta * delta * margin <= 4.0 * pi * pi * weight;
    out.smoothness_ok = weight * margin <= r * r * delta * delta;
    return out;
}

}  // namespace

CriteriaResult check_criteria(const SearchProblem& problem, const ReservoirSpec& spec,
                              double margin) {
    return evaluate(double(problem.N()), double(problem.M()), double(spec.R()), spec.delta(), margin);
}

ParamChoice choose_delta_known(const SearchProblem& problem, int r, double C, double margin) {
    if (!(C > 0.0)) throw ArgumentError("choose_delta_known: C must be positive");
    const double n = double(problem.N());
    const double m = double(problem.M());
    ParamChoice out;
    out.R = std::uint64_t{1} << r;
    out.C = C;
    out.delta = C * std::sqrt(m * (n - m)) / (n * double(out.R));
    const ReservoirSpec spec(r, out.delta);
    const CriteriaResult crit = check_criteria(problem, spec, margin);
    out.crit1_ok = crit.separation_ok;
    out.crit2_ok = crit.smoothness_ok;
    out.runtime_estimate = C * n / (2.0 * pi * std::sqrt(m * (n - m)));
    return out;
}

ParamChoice choose_delta_unknown(std::uint64_t N, int r, double C, double margin) {
    if (!(C > 0.0)) throw ArgumentError("choose_delta_unknown: C must be positive");
    if (N < 2) throw ArgumentError("choose_delta_unknown: N must be >= 2");
    ParamChoice out;
    out.R = std::uint64_t{1} << r;
    out.C = C;
    const double n = double(N);
    const double big_r = double(out.R);
    out.delta = 2.0 * pi / std::sqrt(C * n * big_r);
    const CriteriaResult crit = evaluate(n, 1.0, big_r, out.delta, margin);
    out.crit1_ok = crit.separation_ok;
    out.crit2_ok = crit.smoothness_ok;
    out.runtime_estimate = std::sqrt(big_r * n / C);
    return out;
}

double standard_grover_tmax(std::uint64_t N, std::uint64_t M) {
    if (M < 1 || M >= N) throw ArgumentError("standard_grover_tmax: need 1 <= M < N");
    return pi / 2.0 * std::sqrt(double(N) / double(M));
}

}  // namespace dgrover
