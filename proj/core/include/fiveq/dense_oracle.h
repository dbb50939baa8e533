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

#ifndef FIVEQ_DENSE_ORACLE_H
#define FIVEQ_DENSE_ORACLE_H

#include <vector>

#include <Eigen/Dense>

#include "fiveq/channel.h"
#include "fiveq/code_spec.h"
#include "fiveq/pauli.h"

namespace fiveq {

/// Explicit 2^n-dimensional model of encode -> noise -> syndrome projection ->
/// recovery -> unencode. Shares no code with the polynomial routes beyond the
/// Pauli matrices themselves.
class DenseCodeModel {
   public:
    explicit DenseCodeModel(const CodeSpec& spec);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return std::size_t{1} << num_qubits_; }

    /// 2^n x 2 isometry whose columns are the logical |0> and |1> codewords.
    const Eigen::MatrixXcd& encoder() const { return encoder_; }

    /// Logical transfer matrix when `channel` acts independently on every qubit.
    TransferMatrix logical_channel(const KrausChannel& channel) const;

    /// Logical transfer matrix when the register suffers the fixed Pauli `error`.
    TransferMatrix logical_channel_for_error(const PauliString& error) const;

    /// encode, apply `noise` to the register operator, decode; `noise` is any
    /// linear map on 2^n x 2^n operators.
    template <typename Noise>
    TransferMatrix logical_channel_with(const Noise& noise) const {
        Eigen::Matrix4d t;
        for (int j = 0; j < 4; ++j) {
            const Eigen::MatrixXcd image = decode(noise(encoder_ * logical_basis_[j] * encoder_.adjoint()));
            for (int i = 0; i < 4; ++i) {
                t(i, j) = 0.5 * (logical_basis_[i] * image).trace().real();
            }
        }
        return TransferMatrix(t);
    }

    Eigen::Matrix2cd decode(const Eigen::MatrixXcd& register_operator) const;

   private:
    std::size_t num_qubits_;
    Eigen::MatrixXcd encoder_;
    std::vector<Eigen::MatrixXcd> syndrome_projectors_;
    std::vector<Eigen::MatrixXcd> recoveries_;
    std::vector<Eigen::Matrix2cd> logical_basis_;
};

/// One-qubit operator `op` acting on `qubit` of an n-qubit register.
Eigen::MatrixXcd embed_single_qubit(const Eigen::Matrix2cd& op, std::size_t qubit, std::size_t num_qubits);

}  // namespace fiveq

#endif
