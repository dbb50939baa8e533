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

#include "fiveq/channel.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "fiveq/errors.h"

namespace fiveq {

namespace {

using C = std::complex<double>;

const std::array<Eigen::Matrix2cd, 4>& pauli_basis() {
    static const std::array<Eigen::Matrix2cd, 4> basis = [] {
        std::array<Eigen::Matrix2cd, 4> b;
        b[0] << 1, 0, 0, 1;
        b[1] << 0, 1, 1, 0;
        b[2] << 0, C(0, -1), C(0, 1), 0;
        b[3] << 1, 0, 0, -1;
        return b;
    }();
    return basis;
}

}  // namespace

bool NoiseParams::valid() const { return std::isfinite(q) && std::isfinite(epsilon) && q >= 0.0 && q <= 1.0; }

bool TransferMatrix::is_trace_preserving(double tol) const {
    return std::abs(m_(0, 0) - 1.0) <= tol && std::abs(m_(0, 1)) <= tol && std::abs(m_(0, 2)) <= tol &&
           std::abs(m_(0, 3)) <= tol;
}

bool TransferMatrix::is_unital(double tol) const {
    return std::abs(m_(0, 0) - 1.0) <= tol && std::abs(m_(1, 0)) <= tol && std::abs(m_(2, 0)) <= tol &&
           std::abs(m_(3, 0)) <= tol;
}

Eigen::Matrix2cd TransferMatrix::apply(const Eigen::Matrix2cd& rho) const {
    const auto& basis = pauli_basis();
    Eigen::Vector4cd coeffs;
    for (int j = 0; j < 4; ++j) {
        coeffs[j] = (basis[j] * rho).trace();
    }
    const Eigen::Vector4cd out = m_.cast<C>() * coeffs;
    Eigen::Matrix2cd result = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 4; ++i) {
        result += 0.5 * out[i] * basis[i];
    }
    return result;
}

TransferMatrix compose(const TransferMatrix& a, const TransferMatrix& b) {
    return TransferMatrix(a.matrix() * b.matrix());
}

UnitalBlock UnitalBlock::from_transfer(const TransferMatrix& t, double tol) {
    if (!t.is_trace_preserving(tol) || !t.is_unital(tol)) {
        throw PatternError("transfer matrix is not unital and trace preserving");
    }
    return UnitalBlock{t.matrix().block<3, 3>(1, 1)};
}

UnitalBlock UnitalBlock::from_row_major(const std::array<double, 9>& e) {
    UnitalBlock b;
    b.m << e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7], e[8];
    return b;
}

TransferMatrix UnitalBlock::embed() const {
    Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
    t.block<3, 3>(1, 1) = m;
    return TransferMatrix(t);
}

std::array<double, 9> UnitalBlock::row_major() const {
    return {m(0, 0), m(0, 1), m(0, 2), m(1, 0), m(1, 1), m(1, 2), m(2, 0), m(2, 1), m(2, 2)};
}

const std::array<std::string, 9>& unital_block_labels() {
    static const std::array<std::string, 9> labels{"N_XX", "N_XY", "N_XZ", "N_YX", "N_YY",
                                                   "N_YZ", "N_ZX", "N_ZY", "N_ZZ"};
    return labels;
}

std::optional<ReducedChannel> ReducedChannel::from_block(const UnitalBlock& b, double tol) {
    if (std::abs(b(0, 1)) > tol || std::abs(b(0, 2)) > tol || std::abs(b(1, 0)) > tol || std::abs(b(2, 0)) > tol) {
        return std::nullopt;
    }
    return ReducedChannel{b(0, 0), b(1, 1), b(2, 2), b(2, 1), b(1, 2)};
}

UnitalBlock ReducedChannel::to_block() const {
    UnitalBlock b;
    b.m << x, 0.0, 0.0,
           0.0, y, v,
           0.0, u, z;
    return b;
}

double sup_distance(const ReducedChannel& a, const ReducedChannel& b) {
    const auto ca = a.coordinates();
    const auto cb = b.coordinates();
    double d = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        d = std::max(d, std::abs(ca[i] - cb[i]));
    }
    return d;
}

ReducedChannel rotation_bitflip_channel(const NoiseParams& params) {
    if (!params.valid()) {
        throw std::invalid_argument("noise parameters need finite epsilon and q in [0, 1]");
    }
    const double contraction = 1.0 - 2.0 * params.q;
    const double c = contraction * std::cos(params.epsilon);
    const double s = contraction * std::sin(params.epsilon);
    return ReducedChannel{1.0, c, c, s, -s};
}

TransferMatrix x_rotation_channel(double epsilon) {
    Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
    t(2, 2) = std::cos(epsilon);
    t(2, 3) = -std::sin(epsilon);
    t(3, 2) = std::sin(epsilon);
    t(3, 3) = std::cos(epsilon);
    return TransferMatrix(t);
}

TransferMatrix bit_flip_channel(double q) {
    Eigen::Matrix4d t = Eigen::Matrix4d::Identity();
    t(2, 2) = 1.0 - 2.0 * q;
    t(3, 3) = 1.0 - 2.0 * q;
    return TransferMatrix(t);
}

bool validate_cptp_necessary(const UnitalBlock& block) {
    if (!block.m.allFinite()) {
        return false;
    }
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(block.m);
    return svd.singularValues()(0) <= 1.0 + 1e-12;
}

Eigen::Matrix2cd KrausChannel::apply(const Eigen::Matrix2cd& rho) const {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (const auto& k : operators) {
        out += k * rho * k.adjoint();
    }
    return out;
}

TransferMatrix KrausChannel::transfer_matrix() const {
    const auto& basis = pauli_basis();
    Eigen::Matrix4d t;
    for (int j = 0; j < 4; ++j) {
        const Eigen::Matrix2cd image = apply(basis[j]);
        for (int i = 0; i < 4; ++i) {
            t(i, j) = 0.5 * (basis[i] * image).trace().real();
        }
    }
    return TransferMatrix(t);
}

double KrausChannel::completeness_defect() const {
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
    for (const auto& k : operators) {
        sum += k.adjoint() * k;
    }
    return (sum - Eigen::Matrix2cd::Identity()).norm();
}

Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            g(r, c) = C(n01(rng), n01(rng));
        }
    }
    const Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 2; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) {
            q.col(k) *= r(k, k) / mag;
        }
    }
    return q;
}

KrausChannel random_unital_channel(std::mt19937_64& rng, std::size_t terms) {
    if (terms == 0) {
        throw std::invalid_argument("need at least one unitary term");
    }
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<double> weights(terms);
    double total = 0.0;
    for (auto& w : weights) {
        w = u01(rng) + 1e-3;
        total += w;
    }
    KrausChannel ch;
    for (std::size_t k = 0; k < terms; ++k) {
        ch.operators.push_back(std::sqrt(weights[k] / total) * random_unitary(rng));
    }
    return ch;
}

}  // namespace fiveq
