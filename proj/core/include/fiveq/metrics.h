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

#ifndef FIVEQ_METRICS_H
#define FIVEQ_METRICS_H

#include <array>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "fiveq/channel.h"

namespace fiveq {

/// r = 1 - F_avg with F_avg = (Tr L + Tr E(I)) / (d (d + 1)), d = 2.
double avg_infidelity(const TransferMatrix& channel);

/// (3 - x - y - z) / 6, i.e. (3 - x - 2y) / 6 on the y == z pattern.
double avg_infidelity(const ReducedChannel& channel);

/// Choi matrix J(Delta) = sum_ij |i><j| (x) Delta(|i><j|) of Delta = id - E.
/// Row index is 2 i + a for |i>|a>.
struct ChoiMatrix {
    Eigen::Matrix4cd entries = Eigen::Matrix4cd::Zero();
};

/// Closed-form J(Delta) for the pattern E = [[1,0,0,0],[0,x,0,0],[0,0,y,-u],[0,0,u,y]].
/// Throws PatternError unless z == y and v == -u (to 1e-12).
ChoiMatrix choi_of_delta(const ReducedChannel& channel);

/// J(Delta) built from the definition with the channel's action on matrix units.
ChoiMatrix choi_of_delta_from_definition(const TransferMatrix& channel);

/// lambda_{1,2} = (1-x)/2 +- sqrt((1-y)^2 + u^2), lambda_{3,4} = -(1-x)/2.
std::array<double, 4> choi_spectrum_closed_form(const ReducedChannel& channel);

/// Primal and dual values of the diamond-norm SDP at the feasible points
/// W = Pi_+/2, rho = I/2 and Z = lambda_1 |psi_1><psi_1|.
struct FeasiblePointCertificate {
    std::array<double, 4> spectrum{};  // descending
    double lambda1 = 0.0;
    double primal = 0.0;
    double dual = 0.0;
    /// Smallest eigenvalue of Z - J(Delta); dual feasibility needs it >= 0.
    double dual_slack = 0.0;
};

/// Throws PatternError / OutOfRegimeError like diamond_distance.
FeasiblePointCertificate feasible_point_certificate(const ReducedChannel& channel);

/// D = (1-x)/4 + sqrt((1-y)^2 + u^2)/2.
///
/// Certified only on the pattern accepted by choi_of_delta with x <= 1 and
/// sqrt((1-y)^2 + u^2) >= (1-x)/2, where J(Delta) has a single positive
/// eigenvalue; elsewhere throws OutOfRegimeError. Each call recomputes the
/// spectrum numerically and throws ConsistencyError if lambda_1 / 2 disagrees
/// with the closed form, lambda_2 > 1e-12, or Z - J(Delta) has an eigenvalue
/// below -1e-10.
double diamond_distance(const ReducedChannel& channel);

struct MetricReport {
    double infidelity = 0.0;
    double avg_fidelity = 1.0;
    double diamond_distance = 0.0;
    ReducedChannel channel;
};

/// Both measures via avg_infidelity and diamond_distance.
MetricReport evaluate_metrics(const ReducedChannel& channel);

/// Physical channel: r = (1 - (1-2q) cos eps) / 3,
/// D = sqrt(1 + (1-2q)^2 - 2 (1-2q) cos eps) / 2.
MetricReport physical_metrics(const NoiseParams& params);

/// Logical channel after one round of the five-qubit code, from
/// r = (13 - 10y - 10y^2 + 5y^4 + 2y^5) / 24 and
/// D = (5/16)(1 - 2y^2 + y^4) + sqrt((4 - 5y + y^5)^2 + u^10) / 8
/// with y = (1-2q) cos eps, u = (1-2q) sin eps.
MetricReport post_correction_metrics(const NoiseParams& params);

/// post_correction_metrics at eps = 0. Requires 0 <= q <= 1/2.
MetricReport pauli_limit_metrics(double q);

/// Monte Carlo estimate of the state-averaged fidelity <psi|E(|psi><psi|)|psi>
/// over Haar-random pure states (normalized complex Gaussian vectors).
double haar_average_fidelity_mc(const TransferMatrix& channel, std::size_t samples, std::uint64_t seed);

}  // namespace fiveq

#endif
