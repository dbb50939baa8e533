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

#include <cmath>

#include <gtest/gtest.h>

#include "fiveq/sweep.h"

namespace fiveq {
namespace {

TEST(Sweep, ZeroNoiseRowIsAllZero) {
    const SweepRecord r = sweep_point({0.0, 0.0});
    EXPECT_EQ(r.r_physical, 0.0);
    EXPECT_EQ(r.d_physical, 0.0);
    EXPECT_EQ(r.r_logical, 0.0);
    EXPECT_EQ(r.d_logical, 0.0);
    EXPECT_TRUE(r.converged);
}

TEST(Sweep, ThresholdEdgeRowConverges) { EXPECT_TRUE(sweep_point({0.0, 0.379}).converged); }

TEST(Sweep, SmallRotationRowScalesAsFourthPower) {
    const double eps = 0.01;
    const SweepRecord r = sweep_point({0.0, eps});
    EXPECT_NEAR(r.r_logical / (5.0 / 12.0 * std::pow(eps, 4)), 1.0, 1e-3);
}

TEST(Sweep, GridOrderIsQOuterAndMatchesPointwise) {
    const std::vector<double> qs{0.0, 0.01, 0.02};
    const std::vector<double> es{0.0, 0.1, 0.2, 0.3};
    const auto rows = sweep(qs, es);
    ASSERT_EQ(rows.size(), 12u);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            const SweepRecord& r = rows[i * es.size() + j];
            const SweepRecord expected = sweep_point({qs[i], es[j]});
            EXPECT_EQ(r.q, qs[i]);
            EXPECT_EQ(r.epsilon, es[j]);
            EXPECT_EQ(r.r_logical, expected.r_logical);
            EXPECT_EQ(r.d_logical, expected.d_logical);
            EXPECT_EQ(r.converged, expected.converged);
        }
    }
}

TEST(Sweep, RepeatedRunsAreIdentical) {
    const std::vector<double> qs{0.0, 0.02, 0.04};
    const std::vector<double> es{0.1, 0.3, 0.5};
    const auto a = sweep(qs, es);
    const auto b = sweep(qs, es);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].d_physical, b[k].d_physical);
        EXPECT_EQ(a[k].r_logical, b[k].r_logical);
    }
}

}  // namespace
}  // namespace fiveq
