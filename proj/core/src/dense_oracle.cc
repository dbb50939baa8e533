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

#include "fiveq/dense_oracle.h"

#include <complex>

#include "fiveq/errors.h"

namespace fiveq {

Eigen::MatrixXcd embed_single_qubit(const Eigen::Matrix2cd& op, std::size_t qubit, std::size_t num_qubits) {
    const Eigen::Index left = Eigen::Index{1} << qubit;
    const Eigen::Index right = Eigen::Index{1} << (num_qubits - qubit - 1);
    const Eigen::Index dim = left * 2 * right;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index l = 0; l < left; ++l) {
        for (Eigen::Index a = 0; a < 2; ++a) {
            for (Eigen::Index b = 0; b < 2; ++b) {
                for (Eigen::Index r = 0; r < right; ++r) {
                    out((l * 2 + a) * right + r, (l * 2 + b) * right + r) = op(a, b);
                }
            }
        }
    }
    return out;
}

DenseCodeModel::DenseCodeModel(const CodeSpec& spec) : num_qubits_(spec.num_qubits()) {
    spec.validate();
    const auto dim = static_cast<Eigen::Index>(dimension());
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);

    std::vector<Eigen::MatrixXcd> generators;
    for (const auto& g : spec.stabilizer_generators) {
        generators.push_back(to_dense(g));
    }

    Eigen::MatrixXcd code_projector = identity;
    for (const auto& g : generators) {
        code_projector = code_projector * (identity + g) * 0.5;
    }

    // |0_L> is the +1 eigenvector of logical Z inside the code space.
    const Eigen::MatrixXcd logical_z = to_dense(spec.logical_ops[3]);
    const Eigen::MatrixXcd zero_projector = code_projector * (identity + logical_z) * 0.5;
    Eigen::VectorXcd zero_l;
    for (Eigen::Index b = 0; b < dim; ++b) {
        zero_l = zero_projector.col(b);
        if (zero_l.norm() > 1e-6) {
            break;
        }
    }
    zero_l.normalize();
    const Eigen::VectorXcd one_l = to_dense(spec.logical_ops[1]) * zero_l;
    encoder_.resize(dim, 2);
    encoder_.col(0) = zero_l;
    encoder_.col(1) = one_l;

    const std::size_t num_syndromes = std::size_t{1} << generators.size();
    for (std::uint32_t s = 0; s < num_syndromes; ++s) {
        Eigen::MatrixXcd p = identity;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            const double sign = ((s >> j) & 1) ? -1.0 : 1.0;
            p = p * (identity + sign * generators[j]) * 0.5;
        }
        syndrome_projectors_.push_back(std::move(p));
        recoveries_.push_back(to_dense(spec.recovery_for(s)));
    }

    for (char label : kPauliLabels) {
        logical_basis_.push_back(to_dense(PauliString::parse(std::string(1, label))));
    }
}

Eigen::Matrix2cd DenseCodeModel::decode(const Eigen::MatrixXcd& rho) const {
    Eigen::MatrixXcd corrected = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (std::size_t s = 0; s < syndrome_projectors_.size(); ++s) {
        const Eigen::MatrixXcd op = recoveries_[s] * syndrome_projectors_[s];
        corrected += op * rho * op.adjoint();
    }
    return encoder_.adjoint() * corrected * encoder_;
}

TransferMatrix DenseCodeModel::logical_channel(const KrausChannel& channel) const {
    std::vector<std::vector<Eigen::MatrixXcd>> per_qubit(num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        for (const auto& k : channel.operators) {
            per_qubit[q].push_back(embed_single_qubit(k, q, num_qubits_));
        }
    }
    return logical_channel_with([&](const Eigen::MatrixXcd& rho) {
        Eigen::MatrixXcd state = rho;
        for (const auto& kraus : per_qubit) {
            Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(state.rows(), state.cols());
            for (const auto& k : kraus) {
                next += k * state * k.adjoint();
            }
            state = std::move(next);
        }
        return state;
    });
}

TransferMatrix DenseCodeModel::logical_channel_for_error(const PauliString& error) const {
    if (error.num_qubits() != num_qubits_) {
        throw DimensionError("error acts on the wrong number of qubits");
    }
    const Eigen::MatrixXcd e = to_dense(error);
    return logical_channel_with([&](const Eigen::MatrixXcd& rho) { return Eigen::MatrixXcd(e * rho * e.adjoint()); });
}

}  // namespace fiveq
