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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fiveq/coding_map.h"
#include "fiveq/errors.h"
#include "fiveq/metrics.h"
#include "support/oracles.h"

namespace fiveq {
namespace {

ReducedChannel random_rotation_pattern(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    const double y = u(rng);
    const double w = u(rng);
    return ReducedChannel{pos(rng), y, y, w, -w};
}

bool in_regime(const ReducedChannel& c) { return std::hypot(1 - c.y, c.u) >= (1 - c.x) / 2 + 1e-9; }

TEST(Infidelity, MatchesKrausFidelityOracle) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto kraus = oracle::random_mixed_unitary(rng, 1 + trial % 3);
        const TransferMatrix t(oracle::ptm_of_kraus(kraus));
        EXPECT_NEAR(avg_infidelity(t), 1.0 - oracle::average_fidelity_kraus(kraus), 1e-14);
    }
}

TEST(Infidelity, ReducedOverloadAgreesWithTransferMatrix) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        const ReducedChannel c = random_rotation_pattern(rng);
        EXPECT_NEAR(avg_infidelity(c), avg_infidelity(c.to_block().embed()), 1e-15);
        EXPECT_NEAR(avg_infidelity(c), (3 - c.x - c.y - c.z) / 6, 1e-15);
    }
    EXPECT_EQ(avg_infidelity(ReducedChannel::identity()), 0.0);
}

TEST(Infidelity, HaarMonteCarloAgrees) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        const auto kraus = oracle::random_mixed_unitary(rng, 2);
        const TransferMatrix t(oracle::ptm_of_kraus(kraus));
        EXPECT_NEAR(haar_average_fidelity_mc(t, 200000, 7 + trial), oracle::average_fidelity_kraus(kraus), 2e-3);
    }
}

TEST(Infidelity, HaarMonteCarloIsSeedDeterministic) {
    const TransferMatrix t = rotation_bitflip_channel({0.1, 0.4}).to_block().embed();
    EXPECT_EQ(haar_average_fidelity_mc(t, 1000, 5), haar_average_fidelity_mc(t, 1000, 5));
    EXPECT_NE(haar_average_fidelity_mc(t, 1000, 5), haar_average_fidelity_mc(t, 1000, 6));
}

TEST(Choi, ClosedFormMatchesDefinition) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 50; ++trial) {
        const ReducedChannel c = random_rotation_pattern(rng);
        const Eigen::Matrix4cd expected = oracle::choi_of_difference(c.to_block().embed().matrix());
        EXPECT_LT((choi_of_delta(c).entries - expected).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_LT((choi_of_delta_from_definition(c.to_block().embed()).entries - expected).cwiseAbs().maxCoeff(),
                  1e-14);
    }
}

TEST(Choi, RejectsOtherPatterns) {
    EXPECT_THROW(choi_of_delta(ReducedChannel{1, 0.9, 0.8, 0, 0}), PatternError);
    EXPECT_THROW(choi_of_delta(ReducedChannel{1, 0.9, 0.9, 0.1, 0.1}), PatternError);
}

TEST(Choi, SpectrumClosedForm) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const ReducedChannel c = random_rotation_pattern(rng);
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(oracle::choi_of_difference(c.to_block().embed().matrix()));
        std::array<double, 4> closed = choi_spectrum_closed_form(c);
        std::sort(closed.begin(), closed.end());
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(es.eigenvalues()[k], closed[k], 1e-12);
        }
    }
}

TEST(Diamond, EqualsMaximallyEntangledTraceDistance) {
    std::mt19937_64 rng(56);
    int tested = 0;
    while (tested < 50) {
        const ReducedChannel c = random_rotation_pattern(rng);
        if (!in_regime(c)) {
            continue;
        }
        ++tested;
        const Eigen::Matrix4d t = c.to_block().embed().matrix();
        EXPECT_NEAR(diamond_distance(c), oracle::half_trace_norm_output(t, oracle::max_entangled()), 1e-12);
    }
}

TEST(Diamond, NoInputDoesBetter) {
    std::mt19937_64 rng(57);
    int tested = 0;
    while (tested < 20) {
        const ReducedChannel c = random_rotation_pattern(rng);
        if (!in_regime(c)) {
            continue;
        }
        ++tested;
        const double d = diamond_distance(c);
        const Eigen::Matrix4d t = c.to_block().embed().matrix();
        for (int k = 0; k < 200; ++k) {
            EXPECT_LE(oracle::half_trace_norm_output(t, oracle::random_state(rng)), d + 1e-12);
        }
    }
}

TEST(Diamond, KnownChannels) {
    // A unitary rotation by eps is at distance sin(eps/2) from the identity; a
    // Pauli channel is at distance one minus its identity weight.
    for (double eps : {0.01, 0.3, 1.0, 2.5}) {
        EXPECT_NEAR(diamond_distance(rotation_bitflip_channel({0.0, eps})), std::sin(eps / 2), 1e-14);
    }
    for (double q : {0.001, 0.1, 0.4}) {
        EXPECT_NEAR(diamond_distance(rotation_bitflip_channel({q, 0.0})), q, 1e-14);
    }
    EXPECT_EQ(diamond_distance(ReducedChannel::identity()), 0.0);
}

TEST(Diamond, CertificateIsConsistent) {
    const ReducedChannel c = rotation_bitflip_channel({0.05, 0.2});
    const FeasiblePointCertificate cert = feasible_point_certificate(c);
    EXPECT_NEAR(cert.primal, cert.dual, 1e-12);
    EXPECT_NEAR(cert.primal, diamond_distance(c), 1e-12);
    EXPECT_NEAR(cert.lambda1, 2 * diamond_distance(c), 1e-12);
    EXPECT_GE(cert.dual_slack, -1e-12);
    EXPECT_TRUE(std::is_sorted(cert.spectrum.rbegin(), cert.spectrum.rend()));
}

TEST(Diamond, OutsideRegimeThrows) {
    EXPECT_THROW(diamond_distance(ReducedChannel{0.2, 1.0, 1.0, 0.0, 0.0}), OutOfRegimeError);
    EXPECT_THROW(diamond_distance(ReducedChannel{1.2, 0.9, 0.9, 0.0, 0.0}), OutOfRegimeError);
    EXPECT_THROW(diamond_distance(ReducedChannel{1, 0.9, 0.8, 0, 0}), PatternError);
}

TEST(ClosedForms, PhysicalChannel) {
    for (double q = 0.0; q <= 0.5; q += 0.05) {
        for (double eps = 0.0; eps < 3.1; eps += 0.2) {
            const MetricReport closed = physical_metrics({q, eps});
            const auto kraus = oracle::rotation_bitflip_kraus(q, eps);
            const Eigen::Matrix4d t = oracle::ptm_of_kraus(kraus);
            EXPECT_NEAR(closed.infidelity, 1 - oracle::average_fidelity_kraus(kraus), 1e-13);
            EXPECT_NEAR(closed.diamond_distance, oracle::half_trace_norm_output(t, oracle::max_entangled()), 1e-12);
            EXPECT_NEAR(closed.avg_fidelity, 1 - closed.infidelity, 1e-15);
        }
    }
}

TEST(ClosedForms, LogicalChannel) {
    for (double q = 0.0; q <= 0.5; q += 0.05) {
        for (double eps = 0.0; eps < 3.1; eps += 0.2) {
            const MetricReport closed = post_correction_metrics({q, eps});
            const ReducedChannel logical = apply_reduced(rotation_bitflip_channel({q, eps}));
            const Eigen::Matrix4d t = logical.to_block().embed().matrix();
            EXPECT_NEAR(closed.infidelity, avg_infidelity(logical), 1e-13);
            EXPECT_NEAR(closed.diamond_distance, oracle::half_trace_norm_output(t, oracle::max_entangled()), 1e-12);
            EXPECT_EQ(closed.channel, logical);
        }
    }
}

TEST(ClosedForms, ZeroNoise) {
    const MetricReport p = physical_metrics({0.0, 0.0});
    const MetricReport l = post_correction_metrics({0.0, 0.0});
    EXPECT_EQ(p.infidelity, 0.0);
    EXPECT_EQ(p.diamond_distance, 0.0);
    EXPECT_NEAR(l.infidelity, 0.0, 1e-16);
    EXPECT_NEAR(l.diamond_distance, 0.0, 1e-16);
}

TEST(ClosedForms, PauliLimit) {
    EXPECT_EQ(pauli_limit_metrics(0.01).infidelity, post_correction_metrics({0.01, 0.0}).infidelity);
    EXPECT_THROW(pauli_limit_metrics(0.6), std::invalid_argument);
    EXPECT_THROW(pauli_limit_metrics(-0.1), std::invalid_argument);
}

TEST(ClosedForms, LeadingOrderScaling) {
    const double eps = 1e-2;
    const MetricReport l = post_correction_metrics({0.0, eps});
    EXPECT_NEAR(l.infidelity / (5.0 / 12.0 * std::pow(eps, 4)), 1.0, 1e-3);
    EXPECT_NEAR(l.diamond_distance / (5.0 / 8.0 * std::pow(eps, 4)), 1.0, 1e-3);
    const double q = 1e-4;
    const MetricReport lp = pauli_limit_metrics(q);
    EXPECT_NEAR(lp.infidelity / (20.0 / 3.0 * q * q), 1.0, 1e-3);
    EXPECT_NEAR(lp.diamond_distance / (10.0 * q * q), 1.0, 1e-3);
}

TEST(Choi, WorkedEntries) {
    EXPECT_EQ(choi_of_delta(ReducedChannel::identity()).entries, Eigen::Matrix4cd::Zero());
    const double eps = 0.6;
    const ChoiMatrix j = choi_of_delta(ReducedChannel{1, std::cos(eps), std::cos(eps), std::sin(eps), -std::sin(eps)});
    EXPECT_NEAR(j.entries(0, 0).real(), 1 - 0.5 - 0.5 * std::cos(eps), 1e-15);
}

TEST(Diamond, RotationRelationToInfidelity) {
    for (double eps : {0.1, 0.01, 0.001}) {
        const MetricReport p = physical_metrics({0.0, eps});
        EXPECT_NEAR(p.diamond_distance / std::sqrt(1.5 * p.infidelity), 1.0, eps);
    }
}

TEST(Infidelity, HaarMonteCarloOnReducedChannels) {
    std::mt19937_64 rng(58);
    std::uniform_real_distribution<double> near(0.8, 1.0);
    std::uniform_real_distribution<double> off(-0.1, 0.1);
    for (int trial = 0; trial < 3; ++trial) {
        const ReducedChannel c{near(rng), near(rng), near(rng), off(rng), off(rng)};
        EXPECT_NEAR(1.0 - haar_average_fidelity_mc(c.to_block().embed(), 100000, 70 + trial), avg_infidelity(c), 1e-3);
    }
}

}  // namespace
}  // namespace fiveq
