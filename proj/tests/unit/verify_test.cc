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

#include <algorithm>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fiveq/coding_map.h"
#include "fiveq/verify.h"

namespace fiveq {
namespace {

const CheckResult& find(const std::vector<CheckResult>& results, const std::string& name) {
    const auto it = std::find_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.name == name; });
    if (it == results.end()) {
        throw std::out_of_range(name);
    }
    return *it;
}

VerifyOptions quick() {
    VerifyOptions o;
    o.quick = true;
    return o;
}

TEST(Verify, BuiltinChecksHaveUniqueNames) {
    std::vector<std::string> names;
    for (const auto& c : builtin_checks()) {
        names.push_back(c.name);
    }
    std::sort(names.begin(), names.end());
    EXPECT_EQ(std::adjacent_find(names.begin(), names.end()), names.end());
    EXPECT_GE(names.size(), 14u);
}

TEST(Verify, QuickSuiteCoreChecksPass) {
    const auto results = run_verification(quick());
    for (const char* name : {"oracle-equivalence", "dense-equivalence", "decoder-lists", "weight-one-correction",
                             "fixed-point-derivative", "reduced-consistency", "pattern-preservation", "jacobian-fd",
                             "basin-attraction", "threshold-region", "metric-closed-forms", "asymptotics",
                             "choi-spectrum", "haar-fidelity"}) {
        const CheckResult& r = find(results, name);
        EXPECT_TRUE(r.passed) << name << ": " << r.detail;
    }
}

TEST(Verify, QuickModeIsDeterministic) {
    const auto a = run_verification(quick());
    const auto b = run_verification(quick());
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].passed, b[k].passed);
        EXPECT_EQ(a[k].detail, b[k].detail);
    }
}

TEST(Verify, PerturbedExplicitMapFailsOracleEquivalence) {
    VerifyOptions o = quick();
    o.explicit_map = [](const UnitalBlock& b) {
        UnitalBlock out = process_matrix_explicit(b);
        out(0, 0) += 1e-9 * b(1, 1);
        return out;
    };
    const CheckResult r = find(run_verification(o), "oracle-equivalence");
    EXPECT_FALSE(r.passed);
}

TEST(Verify, PerturbedGCoefficientFailsConsistencyChecks) {
    // Replace the 5 y^2 z^2 term by 5.001 y^2 z^2 in the first component.
    VerifyOptions o = quick();
    o.reduced_map = [](const ReducedChannel& m) {
        ReducedChannel out = apply_reduced(m);
        out.x += -m.x / 4 * 0.001 * m.y * m.y * m.z * m.z;
        return out;
    };
    const auto results = run_verification(o);
    EXPECT_FALSE(find(results, "oracle-equivalence").passed);
    EXPECT_FALSE(find(results, "reduced-consistency").passed);
    EXPECT_FALSE(find(results, "metric-closed-forms").passed);
}

TEST(Verify, ExceptionsBecomeFailures) {
    const std::vector<NamedCheck> extra{
        {"throws", [](const VerifyOptions&) -> CheckOutcome { throw std::runtime_error("boom"); }},
        {"passes", [](const VerifyOptions&) { return CheckOutcome{true, "ok"}; }}};
    const auto results = run_verification(quick(), extra);
    EXPECT_FALSE(find(results, "throws").passed);
    EXPECT_NE(find(results, "throws").detail.find("boom"), std::string::npos);
    EXPECT_TRUE(find(results, "passes").passed);
    EXPECT_FALSE(all_passed(results));
    EXPECT_TRUE(all_passed(std::vector<CheckResult>{{"a", true, "", 0.0}}));
}

}  // namespace
}  // namespace fiveq
