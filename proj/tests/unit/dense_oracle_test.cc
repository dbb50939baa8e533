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

#include <random>

#include <gtest/gtest.h>

#include "fiveq/code_spec.h"
#include "fiveq/coding_map.h"
#include "fiveq/dense_oracle.h"
#include "support/oracles.h"

namespace fiveq {
namespace {

class DenseModel : public ::testing::Test {
   protected:
    static const DenseCodeModel& model() {
        static const DenseCodeModel m(five_qubit_code());
        return m;
    }
    static const oracle::DenseFiveQubit& reference() {
        static const oracle::DenseFiveQubit r;
        return r;
    }
};

TEST_F(DenseModel, EncoderIsAnIsometryOntoTheCodespace) {
    const Eigen::MatrixXcd& enc = model().encoder();
    ASSERT_EQ(enc.rows(), 32);
    ASSERT_EQ(enc.cols(), 2);
    EXPECT_LT((enc.adjoint() * enc - Eigen::Matrix2cd::Identity()).norm(), 1e-12);
    for (const auto& g : five_qubit_code().stabilizer_generators) {
        EXPECT_LT((to_dense(g) * enc - enc).norm(), 1e-12);
    }
    const Eigen::MatrixXcd zbar = to_dense(PauliString::parse("ZZZZZ"));
    EXPECT_LT((zbar * enc.col(0) - enc.col(0)).norm(), 1e-12);
    EXPECT_LT((zbar * enc.col(1) + enc.col(1)).norm(), 1e-12);
}

TEST_F(DenseModel, WeightOneErrorsAreCorrected) {
    for (std::size_t q = 0; q < 5; ++q) {
        for (char c : {'X', 'Y', 'Z'}) {
            const TransferMatrix t = model().logical_channel_for_error(PauliString::single(5, q, c));
            EXPECT_LT((t.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-10) << q << c;
        }
    }
}

TEST_F(DenseModel, WeightTwoErrorsCauseLogicalFaults) {
    const TransferMatrix t = model().logical_channel_for_error(PauliString::parse("XXIII"));
    EXPECT_GT((t.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 0.5);
    const Eigen::Matrix4d expected =
        reference().logical_ptm_for_error(oracle::pauli_string("XXIII"));
    EXPECT_LT((t.matrix() - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST_F(DenseModel, LogicalChannelMatchesIndependentOracle) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        KrausChannel ch{oracle::random_mixed_unitary(rng, 2 + trial % 2)};
        const Eigen::Matrix4d expected = reference().logical_ptm(oracle::ptm_of_kraus(ch.operators));
        EXPECT_LT((model().logical_channel(ch).matrix() - expected).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST_F(DenseModel, LogicalChannelMatchesExplicitMap) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 4; ++trial) {
        const KrausChannel ch = random_unital_channel(rng, 3);
        const UnitalBlock b = UnitalBlock::from_transfer(ch.transfer_matrix(), 1e-12);
        EXPECT_LT((model().logical_channel(ch).matrix() - process_matrix_explicit(b).embed().matrix())
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-10);
    }
}

TEST_F(DenseModel, RotationChannel) {
    const double eps = 0.3;
    KrausChannel ch{oracle::rotation_bitflip_kraus(0.0, eps)};
    const ReducedChannel expected = apply_reduced(rotation_bitflip_channel({0.0, eps}));
    EXPECT_LT((model().logical_channel(ch).matrix() - expected.to_block().embed().matrix()).cwiseAbs().maxCoeff(),
              1e-12);
}

TEST(EmbedSingleQubit, MatchesKroneckerOracle) {
    const Eigen::Matrix2cd y = oracle::pauli('Y');
    EXPECT_LT((embed_single_qubit(y, 2, 5) - oracle::pauli_string("IIYII")).norm(), 1e-15);
}

}  // namespace
}  // namespace fiveq
