// Copyright 2026 The holoqed Authors
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

#ifndef HOLOQED_ERRORS_HPP
#define HOLOQED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace holoqed {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operator/state built on incompatible Hilbert-space layouts.
struct LayoutError : Error {
    using Error::Error;
};

// Physical or numerical parameter out of its valid range.
struct ParameterError : Error {
    using Error::Error;
};

// Pulse duration does not close the cyclic evolution (lambda*tau != pi).
struct CyclicityError : Error {
    using Error::Error;
};

// Density-matrix invariant violated during integration.
struct IntegrationError : Error {
    IntegrationError(const std::string& what, double t)
        : Error(what), time(t) {}
    double time;
};

// State has support outside a requested excitation-restricted subspace.
struct RestrictionError : Error {
    using Error::Error;
};

// Configuration file problem; line == 0 when no line applies.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                            : what),
          line(line_no) {}
    int line;
};

}  // namespace holoqed

#endif  // HOLOQED_ERRORS_HPP
