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

// Reservoir parameter selection.
//
// Two conditions keep the decay clean:
//   separation  1/gamma << tau          <=>  R delta^2 << 4 pi^2 M (N - M) / N^2
//   smoothness  Gamma << 1              <=>  M (N - M) / N^2 << R^2 delta^2
// "<<" is read as "smaller by at least the factor `margin`".

#pragma once

#include <cstdint>

#include "dgrover/search_core.hpp"

namespace dgrover {

inline constexpr double kDefaultMargin = 10.0;

struct CriteriaResult {
    bool separation_ok = false;  // revival well after the decay
    bool smoothness_ok = false;  // residual oscillation small
};

struct ParamChoice {
    double delta = 0.0;
    std::uint64_t R = 1;
    double C = 0.0;
    bool crit1_ok = false;
    bool crit2_ok = false;
    /// Expected decay time 1/gamma.
    double runtime_estimate = 0.0;
};

CriteriaResult check_criteria(const SearchProblem& problem, const ReservoirSpec& spec,
                              double margin = kDefaultMargin);

/// delta = C sqrt(M (N - M)) / (N R) for a known solution count.
ParamChoice choose_delta_known(const SearchProblem& problem, int r, double C,
                               double margin = kDefaultMargin);

/// delta = 2 pi / sqrt(C N R) when M is unknown. The runtime and the
/// criteria flags are reported for the worst case M = 1.
ParamChoice choose_delta_unknown(std::uint64_t N, int r, double C, double margin = kDefaultMargin);

/// (pi / 2) sqrt(N / M), first time the continuous standard search reaches F = 1.
double standard_grover_tmax(std::uint64_t N, std::uint64_t M);

}  // namespace dgrover
