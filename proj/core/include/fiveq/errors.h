// Copyright 2026 The fiveq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FIVEQ_ERRORS_H
#define FIVEQ_ERRORS_H

#include <stdexcept>
#include <string>

namespace fiveq {

/// Operands disagree on qubit count (or matrix shape).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size cap (e.g. more than kMaxQubits qubits).
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Text could not be parsed into the requested value.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A CodeSpec violates one of its structural invariants.
struct InvalidCodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A channel does not have the matrix pattern an operation requires.
struct PatternError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input lies outside the regime in which a closed form is certified.
struct OutOfRegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Two computation routes that must agree did not. Signals a bug, not bad input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace fiveq

#endif
