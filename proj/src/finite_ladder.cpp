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

#include "dgrover/finite_ladder.hpp"

#include <cmath>

#include "dgrover/bj_analytic.hpp"
#include "dgrover/errors.hpp"

namespace dgrover {

namespace {

StateVector source_state(std::size_t dim) {
    StateVector psi(dim);
    psi[0] = 1.0;
    return psi;
}

}  // namespace

std::vector<double> source_population(const BJLadderSpec& spec, std::span<const double> times) {
    const HermitianOperator h = build_finite_bj(spec);
    const Propagator prop = diagonalize(h);
    std::vector<double> out;
    out.reserve(times.size());
    sweep_times(prop, source_state(h.dim()), times,
                [&](double, const StateVector& s) { out.push_back(std::norm(s[0])); });
    return out;
}

ResidualOscillation max_residual_oscillation(const BJLadderSpec& spec, std::size_t samples) {
    if (samples < 2) throw ArgumentError("max_residual_oscillation: need at least two samples");
    const BJParams params(spec.eps_a, spec.beta, spec.delta);
    ResidualOscillation out;
    out.window_begin = 5.0 / params.gamma();
    out.window_end = 0.9 * params.tau();
    if (!(out.window_begin < out.window_end))
        throw ArgumentError("max_residual_oscillation: decay does not finish before 0.9 tau");
    std::vector<double> times(samples);
    for (std::size_t i = 0; i < samples; ++i)
        times[i] = out.window_begin +
                   (out.window_end - out.window_begin) * double(i) / double(samples - 1);
    const std::vector<double> population = source_population(spec, times);
    for (std::size_t i = 0; i < samples; ++i) {
        const double dev = std::abs(population[i] - std::exp(-params.gamma() * times[i]));
        if (dev > out.max_deviation) {
            out.max_deviation = dev;
            out.t_at_max = times[i];
        }
    }
    return out;
}

}  // namespace dgrover
