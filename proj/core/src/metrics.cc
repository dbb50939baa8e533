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

#include "fiveq/metrics.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "fiveq/coding_map.h"
#include "fiveq/errors.h"

namespace fiveq {

namespace {

using C = std::complex<double>;

constexpr double kPatternTol = 1e-12;
constexpr double kRankOneTol = 1e-12;
constexpr double kNumericTol = 1e-10;

void require_rotation_pattern(const ReducedChannel& c) {
    if (std::abs(c.z - c.y) > kPatternTol || std::abs(c.v + c.u) > kPatternTol) {
        throw PatternError("channel must satisfy z == y and v == -u");
    }
}

void require_regime(const ReducedChannel& c) {
    if (!(c.x <= 1.0)) {
        throw OutOfRegimeError("closed-form diamond distance needs x <= 1");
    }
    // lambda_2 of J(Delta); Pi_+ is rank one only while it is non-positive.
    const double lambda2 = 0.5 * (1.0 - c.x) - std::hypot(1.0 - c.y, c.u);
    if (lambda2 > kRankOneTol) {
        throw OutOfRegimeError("J(Delta) has more than one positive eigenvalue");
    }
}

double partial_trace_norm(const Eigen::Matrix4cd& z) {
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int a = 0; a < 2; ++a) {
                reduced(i, j) += z(2 * i + a, 2 * j + a);
            }
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(reduced);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

double avg_infidelity(const TransferMatrix& channel) {
    const double trace_l = channel.matrix().trace();
    const double trace_image_of_identity = 2.0 * channel(0, 0);
    return 1.0 - (trace_l + trace_image_of_identity) / 6.0;
}

double avg_infidelity(const ReducedChannel& c) {
    const double trace_l = 1.0 + c.x + c.y + c.z;
    return 1.0 - (trace_l + 2.0) / 6.0;
}

ChoiMatrix choi_of_delta(const ReducedChannel& c) {
    require_rotation_pattern(c);
    const double x = c.x, y = c.y, u = c.u;
    const C a(0.5 - 0.5 * y, 0.0);
    const C b(-0.5 + 0.5 * y, 0.0);
    const C corner(1.0 - 0.5 * x - 0.5 * y, 0.0);
    const C mid(-0.5 * x + 0.5 * y, 0.0);
    const C iu(0.0, 0.5 * u);
    ChoiMatrix j;
    j.entries << a, -iu, -iu, corner,
                 iu, b, mid, iu,
                 iu, mid, b, iu,
                 corner, -iu, -iu, a;
    return j;
}

ChoiMatrix choi_of_delta_from_definition(const TransferMatrix& channel) {
    ChoiMatrix j;
    for (int i = 0; i < 2; ++i) {
        for (int k = 0; k < 2; ++k) {
            Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
            unit(i, k) = 1.0;
            const Eigen::Matrix2cd delta = unit - channel.apply(unit);
            j.entries.block<2, 2>(2 * i, 2 * k) = delta;
        }
    }
    return j;
}

std::array<double, 4> choi_spectrum_closed_form(const ReducedChannel& c) {
    const double half = 0.5 * (1.0 - c.x);
    const double root = std::hypot(1.0 - c.y, c.u);
    return {half + root, half - root, -half, -half};
}

FeasiblePointCertificate feasible_point_certificate(const ReducedChannel& c) {
    require_rotation_pattern(c);
    require_regime(c);
    const ChoiMatrix j = choi_of_delta(c);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> eig(j.entries);
    const Eigen::Vector4d values = eig.eigenvalues();  // ascending

    FeasiblePointCertificate cert;
    for (int k = 0; k < 4; ++k) {
        cert.spectrum[k] = values[3 - k];
    }
    cert.lambda1 = cert.spectrum[0];
    const Eigen::Vector4cd psi1 = eig.eigenvectors().col(3);
    const Eigen::Matrix4cd projector = psi1 * psi1.adjoint();
    const Eigen::Matrix4cd w = 0.5 * projector;
    cert.primal = (j.entries.adjoint() * w).trace().real();
    const Eigen::Matrix4cd z = cert.lambda1 * projector;
    cert.dual = partial_trace_norm(z);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> slack(z - j.entries);
    cert.dual_slack = slack.eigenvalues().minCoeff();
    return cert;
}

double diamond_distance(const ReducedChannel& c) {
    const FeasiblePointCertificate cert = feasible_point_certificate(c);
    const double closed = 0.25 * (1.0 - c.x) + 0.5 * std::hypot(1.0 - c.y, c.u);
    if (std::abs(0.5 * cert.lambda1 - closed) > kNumericTol || cert.spectrum[1] > kNumericTol ||
        cert.dual_slack < -kNumericTol) {
        throw ConsistencyError("diamond distance closed form failed its eigenvalue cross-check");
    }
    return closed;
}

MetricReport evaluate_metrics(const ReducedChannel& channel) {
    const double r = avg_infidelity(channel);
    return MetricReport{r, 1.0 - r, diamond_distance(channel), channel};
}

MetricReport physical_metrics(const NoiseParams& params) {
    const ReducedChannel channel = rotation_bitflip_channel(params);
    const double s = 1.0 - 2.0 * params.q;
    const double c = std::cos(params.epsilon);
    const double r = (1.0 - s * c) / 3.0;
    const double d = 0.5 * std::sqrt(std::max(0.0, 1.0 + s * s - 2.0 * s * c));
    return MetricReport{r, 1.0 - r, d, channel};
}

MetricReport post_correction_metrics(const NoiseParams& params) {
    const ReducedChannel physical = rotation_bitflip_channel(params);
    const double y = physical.y;
    const double u = physical.u;
    const double y2 = y * y, y4 = y2 * y2, y5 = y4 * y;
    const double u5 = u * u * u * u * u;
    const double r = (13.0 - 10.0 * y - 10.0 * y2 + 5.0 * y4 + 2.0 * y5) / 24.0;
    const double w = 4.0 - 5.0 * y + y5;
    const double d = (5.0 / 16.0) * (1.0 - 2.0 * y2 + y4) + std::sqrt(w * w + u5 * u5) / 8.0;
    return MetricReport{r, 1.0 - r, d, apply_reduced(physical)};
}

MetricReport pauli_limit_metrics(double q) {
    if (!(q >= 0.0 && q <= 0.5)) {
        throw std::invalid_argument("pauli_limit_metrics needs 0 <= q <= 1/2");
    }
    return post_correction_metrics(NoiseParams{q, 0.0});
}

double haar_average_fidelity_mc(const TransferMatrix& channel, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("need at least one Monte Carlo sample");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01(0.0, 1.0);
    double total = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        Eigen::Vector2cd psi(C(n01(rng), n01(rng)), C(n01(rng), n01(rng)));
        psi.normalize();
        const Eigen::Matrix2cd out = channel.apply(psi * psi.adjoint());
        total += (psi.adjoint() * out * psi).value().real();
    }
    return total / static_cast<double>(samples);
}

}  // namespace fiveq
