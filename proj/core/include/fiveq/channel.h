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

#ifndef FIVEQ_CHANNEL_H
#define FIVEQ_CHANNEL_H

#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fiveq {

/// Rotation e^{-i epsilon X / 2} preceded by a stochastic bit flip of probability q.
struct NoiseParams {
    double q = 0.0;
    double epsilon = 0.0;

    bool valid() const;
    friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

/// Pauli-Liouville matrix of a single-qubit map, entry (i, j) = Tr[P_i N(P_j)] / 2
/// with P in I, X, Y, Z order.
class TransferMatrix {
   public:
    TransferMatrix() : m_(Eigen::Matrix4d::Identity()) {}
    explicit TransferMatrix(const Eigen::Matrix4d& m) : m_(m) {}

    static TransferMatrix identity() { return TransferMatrix(); }

    const Eigen::Matrix4d& matrix() const { return m_; }
    double operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

    /// First row equal to (1, 0, 0, 0) within `tol`.
    bool is_trace_preserving(double tol = 0.0) const;
    /// First column equal to (1, 0, 0, 0)^T within `tol`.
    bool is_unital(double tol = 0.0) const;

    /// Acts on a 2x2 operator through its Pauli expansion.
    Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho) const;

   private:
    Eigen::Matrix4d m_;
};

/// Maps are composed right to left: compose(a, b) applies b first.
TransferMatrix compose(const TransferMatrix& a, const TransferMatrix& b);

/// Lower-right 3x3 block of a unital transfer matrix; rows and columns in X, Y, Z order.
struct UnitalBlock {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();

    static UnitalBlock identity() { return {}; }
    /// Throws PatternError when `t` is not unital and trace preserving within `tol`.
    static UnitalBlock from_transfer(const TransferMatrix& t, double tol = 1e-12);
    /// Row-major N_XX, N_XY, ..., N_ZZ.
    static UnitalBlock from_row_major(const std::array<double, 9>& entries);

    TransferMatrix embed() const;
    std::array<double, 9> row_major() const;

    double operator()(Eigen::Index row, Eigen::Index col) const { return m(row, col); }
    double& operator()(Eigen::Index row, Eigen::Index col) { return m(row, col); }
};

/// Labels "N_XX" ... "N_ZZ" in row-major order.
const std::array<std::string, 9>& unital_block_labels();

/// Five-coordinate channel pattern with X-row (x, 0, 0), Y-row (0, y, v), Z-row (0, u, z).
struct ReducedChannel {
    double x = 1.0;
    double y = 1.0;
    double z = 1.0;
    double u = 0.0;
    double v = 0.0;

    static ReducedChannel identity() { return {}; }
    /// Returns nothing unless the four structural zeros are present (|entry| <= tol).
    static std::optional<ReducedChannel> from_block(const UnitalBlock& block, double tol = 0.0);

    UnitalBlock to_block() const;
    std::array<double, 5> coordinates() const { return {x, y, z, u, v}; }
    static ReducedChannel from_coordinates(const std::array<double, 5>& c) { return {c[0], c[1], c[2], c[3], c[4]}; }

    friend bool operator==(const ReducedChannel&, const ReducedChannel&) = default;
};

/// Sup-norm distance between coordinate vectors.
double sup_distance(const ReducedChannel& a, const ReducedChannel& b);

/// x = 1, y = z = (1-2q) cos eps, u = (1-2q) sin eps, v = -u.
/// Throws std::invalid_argument when q is outside [0, 1] or a parameter is not finite.
ReducedChannel rotation_bitflip_channel(const NoiseParams& params);

TransferMatrix x_rotation_channel(double epsilon);
TransferMatrix bit_flip_channel(double q);

/// Finite entries and largest singular value of the block at most 1 + 1e-12.
bool validate_cptp_necessary(const UnitalBlock& block);

/// A single-qubit channel given by Kraus operators.
struct KrausChannel {
    std::vector<Eigen::Matrix2cd> operators;

    Eigen::Matrix2cd apply(const Eigen::Matrix2cd& rho) const;
    TransferMatrix transfer_matrix() const;
    /// Frobenius distance of sum K^dagger K from the identity.
    double completeness_defect() const;
};

/// Random Haar unitary on one qubit.
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng);

/// Convex mixture of `terms` unitary conjugations with random weights; CPTP and unital.
KrausChannel random_unital_channel(std::mt19937_64& rng, std::size_t terms = 3);

}  // namespace fiveq

#endif
