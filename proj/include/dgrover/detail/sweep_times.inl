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

#pragma once

#include <vector>

#include "dgrover/errors.hpp"
#include "dgrover/kernels.hpp"

namespace dgrover {

template <typename Visitor>
void sweep_times(const Propagator& prop, const StateVector& psi0, std::span<const double> times,
                 Visitor&& visit) {
    if (psi0.dim() != prop.dim()) throw ArgumentError("sweep_times: dimension mismatch");
    std::vector<Complex> coeffs(prop.dim());
    kernels::omp::matvec(prop.eigenvectors(), psi0.amplitudes(), coeffs, /*adjoint=*/true);
    std::vector<Complex> rotated(prop.dim());
    StateVector state(prop.dim());
    for (double t : times) {
        if (!(t >= 0.0)) throw ArgumentError("sweep_times: times must be nonnegative");
        rotated = coeffs;
        kernels::omp::apply_spectral_phases(rotated, prop.eigenvalues(), t);
        kernels::omp::matvec(prop.eigenvectors(), rotated, state.amplitudes(), /*adjoint=*/false);
        visit(t, static_cast<const StateVector&>(state));
    }
}

}  // namespace dgrover
