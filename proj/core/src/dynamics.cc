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

#include "fiveq/dynamics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fiveq/coding_map.h"
#include "fiveq/errors.h"
#include "parallel.h"

namespace fiveq {

namespace {

double sup_norm(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return (a - b).cwiseAbs().maxCoeff(); }

bool escaped(const ReducedChannel& s) {
    for (double c : s.coordinates()) {
        if (!std::isfinite(c) || std::abs(c) > kDivergenceBound) {
            return true;
        }
    }
    return false;
}

bool escaped(const Eigen::Vector2d& s) {
    return !s.allFinite() || s.cwiseAbs().maxCoeff() > kDivergenceBound;
}

template <typename State, typename Map, typename Distance>
BasicIterationTrace<State> run(const State& initial, const State& identity, Map map, Distance distance,
                               std::size_t max_iters, double tol) {
    if (max_iters < 1 || !(tol > 0.0)) {
        throw std::invalid_argument("iterate needs max_iters >= 1 and tol > 0");
    }
    BasicIterationTrace<State> trace;
    trace.states.push_back(initial);
    auto classify = [&](const State& s) {
        if (escaped(s)) {
            trace.limit = Limit::diverged;
            return true;
        }
        if (distance(s, identity) < tol) {
            trace.limit = Limit::identity_channel;
            trace.converged = true;
            return true;
        }
        return false;
    };
    if (classify(initial)) {
        return trace;
    }
    for (std::size_t step = 0; step < max_iters; ++step) {
        State next = map(trace.states.back());
        const double moved = distance(next, trace.states.back());
        trace.states.push_back(next);
        if (classify(next)) {
            return trace;
        }
        if (moved < tol) {
            trace.limit = Limit::other_fixed_point;
            trace.converged = true;
            return trace;
        }
    }
    trace.limit = Limit::max_iters;
    return trace;
}

}  // namespace

std::string to_string(Limit limit) {
    switch (limit) {
        case Limit::identity_channel:
            return "identity_channel";
        case Limit::other_fixed_point:
            return "other_fixed_point";
        case Limit::diverged:
            return "diverged";
        case Limit::max_iters:
            return "max_iters";
    }
    return "unknown";
}

IterationTrace iterate(const ReducedChannel& initial, std::size_t max_iters, double tol) {
    return run(initial, ReducedChannel::identity(), apply_reduced, sup_distance, max_iters, tol);
}

PlanarTrace iterate_two_var(const Eigen::Vector2d& initial, std::size_t max_iters, double tol) {
    return run(
        initial, Eigen::Vector2d(1.0, 1.0), [](const Eigen::Vector2d& p) { return reduced_two_var(p.x(), p.y()); },
        sup_norm, max_iters, tol);
}

Eigen::Matrix2d jacobian_reduced2(double x, double y) {
    const double x2 = x * x;
    const double y2 = y * y;
    Eigen::Matrix2d d;
    d(0, 0) = -1.25 * (x2 * x2 + y2 * y2) + 2.5 * y2;
    d(0, 1) = 5.0 * x * y * (1.0 - y2);
    d(1, 0) = 2.5 * x * y * (1.0 - y2);
    d(1, 1) = -1.25 * y2 * (-3.0 + 3.0 * x2 + y2) + 1.25 * x2;
    return d;
}

double norm2_closed_form(double x, double y) {
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x8 = x4 * x4;
    const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y5 = y4 * y, y6 = y4 * y2, y7 = y6 * y;

    const double t1 = x4 + y4 - 2 * y2;
    const double t2 = -3 * y2 + 3 * x2 * y2 + y4 - x2;
    const double t3 = x * y - x * y3;
    const double a = 2 * t1 * t1 + 2 * t2 * t2 + 32 * t3 * t3 + 8 * t3 * t3;

    const double s1 = x8 - x4 - 7 * x4 * y4 - 18 * x2 * y6 + 2 * x4 * y2 + 44 * x2 * y4 + 2 * y6 - 5 * y4 - 18 * x2 * y2;
    const double s2 = 3 * x * y7 - 10 * x * y5 + 2 * x5 * y3 + 3 * x3 * y5 - 2 * x5 * y - 4 * x3 * y3 + x3 * y + 7 * x * y3;
    const double b = s1 * s1 + 16 * s2 * s2;
    if (b < -1e-12) {
        throw ConsistencyError("negative discriminant in the closed-form norm");
    }
    return 0.625 * std::sqrt(std::max(0.0, a + 2.0 * std::sqrt(std::max(0.0, b))));
}

double spectral_norm(const Eigen::Matrix2d& a) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(a.transpose() * a);
    return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

std::vector<CircleSample> circle_profile(double radius, std::size_t samples) {
    std::vector<CircleSample> out(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
        const double x = 1.0 + radius * std::cos(angle);
        const double y = 1.0 + radius * std::sin(angle);
        out[k] = CircleSample{angle, x, y, norm2_closed_form(x, y)};
    }
    return out;
}

BasinEstimate scan_circle(double radius, std::size_t samples) {
    if (samples < 360) {
        throw std::invalid_argument("scan_circle needs at least 360 samples");
    }
    const auto profile = circle_profile(radius, samples);
    const CircleSample* hi = &profile.front();
    const CircleSample* lo = &profile.front();
    for (const auto& s : profile) {
        if (s.norm > hi->norm) {
            hi = &s;
        }
        if (s.norm < lo->norm) {
            lo = &s;
        }
    }
    for (const CircleSample* s : {hi, lo}) {
        const double reference = spectral_norm(jacobian_reduced2(s->x, s->y));
        if (std::abs(reference - s->norm) > 1e-9) {
            throw ConsistencyError("closed-form norm disagrees with eigensolve at extremal circle point");
        }
    }
    return BasinEstimate{radius, hi->norm, lo->norm, hi->angle, lo->angle, samples};
}

ThresholdSurface threshold_surface(const std::vector<double>& q_grid, const std::vector<double>& eps_grid,
                                   std::size_t max_iters, double tol) {
    if (q_grid.empty() || eps_grid.empty()) {
        throw std::invalid_argument("threshold grids must be nonempty");
    }
    ThresholdSurface out{q_grid, eps_grid, std::vector<char>(q_grid.size() * eps_grid.size(), 0)};
    detail::parallel_for(out.converged.size(), [&](std::size_t idx) {
        const NoiseParams p{q_grid[idx / eps_grid.size()], eps_grid[idx % eps_grid.size()]};
        out.converged[idx] = iterate(rotation_bitflip_channel(p), max_iters, tol).limit == Limit::identity_channel;
    });
    return out;
}

bool in_guaranteed_region(const NoiseParams& params) {
    return 1.0 - (1.0 - 2.0 * params.q) * std::cos(params.epsilon) < kGuaranteedBasinRadius;
}

Eigen::MatrixXd finite_difference_jacobian(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                                           const Eigen::VectorXd& point, double step) {
    const Eigen::VectorXd f0 = f(point);
    Eigen::MatrixXd jac(f0.size(), point.size());
    for (Eigen::Index j = 0; j < point.size(); ++j) {
        Eigen::VectorXd plus = point;
        Eigen::VectorXd minus = point;
        plus[j] += step;
        minus[j] -= step;
        jac.col(j) = (f(plus) - f(minus)) / (2.0 * step);
    }
    return jac;
}

Eigen::MatrixXd reduced_map_jacobian_fd(const ReducedChannel& at, double step) {
    auto f = [](const Eigen::VectorXd& p) {
        const auto out = apply_reduced(ReducedChannel{p[0], p[1], p[2], p[3], p[4]}).coordinates();
        return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(out.data(), 5));
    };
    const auto c = at.coordinates();
    return finite_difference_jacobian(f, Eigen::Map<const Eigen::VectorXd>(c.data(), 5), step);
}

Eigen::MatrixXd process_map_jacobian_fd(const UnitalBlock& at, double step) {
    auto f = [](const Eigen::VectorXd& p) {
        std::array<double, 9> in{};
        std::copy(p.data(), p.data() + 9, in.begin());
        const auto out = process_matrix_explicit(UnitalBlock::from_row_major(in)).row_major();
        return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(out.data(), 9));
    };
    const auto c = at.row_major();
    return finite_difference_jacobian(f, Eigen::Map<const Eigen::VectorXd>(c.data(), 9), step);
}

}  // namespace fiveq
