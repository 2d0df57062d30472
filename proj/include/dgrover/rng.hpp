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

// Per-run random streams for the Monte Carlo noise experiments.
//
// Algorithm: SplitMix64 (Steele, Lea, Flood 2014). Run i of a master seed s
// starts from state mix(s ^ mix(i + 1)), where mix is the SplitMix64
// finalizer, so streams depend only on (s, i) and never on execution order.
// Doubles are built from the top 53 bits; no std:: distributions are used,
// which keeps outputs identical across standard libraries.

#pragma once

#include <cstdint>

namespace dgrover {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform on [0, 1).
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform on [-1, 1).
    double uniform_symmetric() { return 2.0 * uniform01() - 1.0; }

private:
    std::uint64_t state_;
};

inline SplitMix64 run_stream(std::uint64_t master_seed, std::uint64_t run) {
    return SplitMix64(SplitMix64::mix(master_seed ^ SplitMix64::mix(run + 1)));
}

}  // namespace dgrover
