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

#include <cmath>
#include <span>

namespace dgrover {

struct SampleSummary {
    double mean = 0.0;
    double stddev = 0.0;          // sample (n - 1) standard deviation; 0 for n = 1
    double standard_error = 0.0;  // stddev / sqrt(n)
};

/// Two-pass mean and spread, accumulated in index order.
inline SampleSummary summarize(std::span<const double> xs) {
    SampleSummary out;
    if (xs.empty()) return out;
    double total = 0.0;
    for (double x : xs) total += x;
    out.mean = total / double(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.stddev = std::sqrt(ss / double(xs.size() - 1));
        out.standard_error = out.stddev / std::sqrt(double(xs.size()));
    }
    return out;
}

}  // namespace dgrover
