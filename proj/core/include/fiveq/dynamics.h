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

#ifndef FIVEQ_DYNAMICS_H
#define FIVEQ_DYNAMICS_H

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fiveq/channel.h"

namespace fiveq {

inline constexpr std::size_t kDefaultMaxIters = 60;
inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultCircleSamples = 3600;
/// |coordinate| above this means the iteration escaped.
inline constexpr double kDivergenceBound = 1e6;
/// Radius of the ball around (1, 1) on which sampled ||Df|| stays below 0.995.
inline constexpr double kGuaranteedBasinRadius = 0.072;

enum class Limit { identity_channel, other_fixed_point, diverged, max_iters };

std::string to_string(Limit limit);

/// States visited by repeated application of a map. states[0] is the input.
template <typename State>
struct BasicIterationTrace {
    std::vector<State> states;
    bool converged = false;
    Limit limit = Limit::max_iters;

    /// Number of map applications performed.
    std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
    const State& last() const { return states.back(); }
};

using IterationTrace = BasicIterationTrace<ReducedChannel>;
using PlanarTrace = BasicIterationTrace<Eigen::Vector2d>;

/// Iterates apply_reduced until the sup-norm distance to (1,1,1,0,0) drops below
/// `tol` (identity_channel), a step moves less than `tol` (other_fixed_point), a
/// coordinate is non-finite or exceeds kDivergenceBound (diverged), or
/// `max_iters` applications have been made.
IterationTrace iterate(const ReducedChannel& initial, std::size_t max_iters = kDefaultMaxIters,
                       double tol = kDefaultTolerance);

/// Same classification for the two-variable map, with (1, 1) as the identity.
PlanarTrace iterate_two_var(const Eigen::Vector2d& initial, std::size_t max_iters = kDefaultMaxIters,
                            double tol = kDefaultTolerance);

/// Analytic total derivative of reduced_two_var.
Eigen::Matrix2d jacobian_reduced2(double x, double y);

/// ||Df(x,y)||_2 = (5/8) sqrt(a + 2 sqrt(b)) with a, b polynomials in x, y.
/// Throws ConsistencyError if b < -1e-12.
double norm2_closed_form(double x, double y);

/// sqrt of the largest eigenvalue of A^T A.
double spectral_norm(const Eigen::Matrix2d& a);

struct CircleSample {
    double angle = 0.0;
    double x = 0.0;
    double y = 0.0;
    double norm = 0.0;
};

/// ||Df|| at `samples` equally spaced angles 2 pi k / samples on the circle of
/// `radius` around (1, 1).
std::vector<CircleSample> circle_profile(double radius, std::size_t samples = kDefaultCircleSamples);

struct BasinEstimate {
    double radius = 0.0;
    double max_norm_on_circle = 0.0;
    double min_norm_on_circle = 0.0;
    double argmax_angle = 0.0;
    double argmin_angle = 0.0;
    std::size_t samples = 0;
};

/// Extremes of circle_profile. The extremal points are re-evaluated through
/// spectral_norm(jacobian_reduced2) and must agree with the closed form to 1e-9,
/// else ConsistencyError. Requires samples >= 360.
BasinEstimate scan_circle(double radius, std::size_t samples = kDefaultCircleSamples);

/// Convergence of the rotation + bit-flip channel to the identity over a grid.
struct ThresholdSurface {
    std::vector<double> q_grid;
    std::vector<double> eps_grid;
    std::vector<char> converged;  // row-major, q outer

    bool at(std::size_t qi, std::size_t ei) const { return converged[qi * eps_grid.size() + ei] != 0; }
};

ThresholdSurface threshold_surface(const std::vector<double>& q_grid, const std::vector<double>& eps_grid,
                                   std::size_t max_iters = kDefaultMaxIters, double tol = kDefaultTolerance);

/// 1 - (1-2q) cos(eps) < kGuaranteedBasinRadius: the initial channel sits inside
/// the ball on which ||Df|| < 1 was sampled.
bool in_guaranteed_region(const NoiseParams& params);

/// Central differences, column j = (f(p + h e_j) - f(p - h e_j)) / 2h.
Eigen::MatrixXd finite_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& point, double step = 1e-5);

/// 5x5 Jacobian of apply_reduced in (x, y, z, u, v) coordinates.
Eigen::MatrixXd reduced_map_jacobian_fd(const ReducedChannel& at, double step = 1e-5);

/// 9x9 Jacobian of process_matrix_explicit in row-major block coordinates.
Eigen::MatrixXd process_map_jacobian_fd(const UnitalBlock& at, double step = 1e-5);

}  // namespace fiveq

#endif
