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

#ifndef FIVEQ_VERIFY_H
#define FIVEQ_VERIFY_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fiveq/channel.h"

namespace fiveq {

struct VerifyOptions {
    /// Fewer random samples and a coarser threshold grid.
    bool quick = false;
    std::uint64_t seed = 1729;
    /// Maps under test. Replacing one with a perturbed copy must make the
    /// checks that depend on it fail.
    std::function<UnitalBlock(const UnitalBlock&)> explicit_map;
    std::function<ReducedChannel(const ReducedChannel&)> reduced_map;

    VerifyOptions();
};

struct CheckOutcome {
    bool passed = false;
    std::string detail;
};

struct NamedCheck {
    std::string name;
    std::function<CheckOutcome(const VerifyOptions&)> run;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Built-in checks in their fixed run order.
const std::vector<NamedCheck>& builtin_checks();

/// Runs the built-in checks followed by `extra`. An exception inside a check
/// marks it failed with the exception text as detail.
std::vector<CheckResult> run_verification(const VerifyOptions& options, std::span<const NamedCheck> extra = {});

bool all_passed(std::span<const CheckResult> results);

}  // namespace fiveq

#endif
