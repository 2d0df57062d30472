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

// Numerical side of the finite Bixon-Jortner ladder: source population over
// time and its residual oscillation about the infinite-ladder prediction.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dgrover/hamiltonians.hpp"

namespace dgrover {

/// |a(t)|^2 for the source state evolved under build_finite_bj(spec).
std::vector<double> source_population(const BJLadderSpec& spec, std::span<const double> times);

struct ResidualOscillation {
    double window_begin = 0.0;  // 5 / gamma
    double window_end = 0.0;    // 0.9 tau
    double max_deviation = 0.0; // max ||a_sim(t)|^2 - e^{-gamma t}| over the window
    double t_at_max = 0.0;
};

/// Samples the post-decay, pre-revival window [5/gamma, 0.9 tau] uniformly.
/// Throws ArgumentError when the window is empty (gamma tau <= 50/9).
ResidualOscillation max_residual_oscillation(const BJLadderSpec& spec, std::size_t samples);

}  // namespace dgrover
