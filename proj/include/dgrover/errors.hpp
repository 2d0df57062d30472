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

#include <stdexcept>
#include <string>

namespace dgrover {

/// Bad argument to a library operation (range, dimension, precondition).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed (e.g. eigensolver did not converge).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant was violated during simulation (e.g. ancilla leakage).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Invalid experiment configuration or command-line usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dgrover
