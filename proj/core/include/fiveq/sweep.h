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

#ifndef FIVEQ_SWEEP_H
#define FIVEQ_SWEEP_H

#include <cstddef>
#include <vector>

#include "fiveq/channel.h"
#include "fiveq/dynamics.h"

namespace fiveq {

/// One (q, epsilon) point: measures before and after one round of the code,
/// and whether concatenation drives the channel to the identity.
struct SweepRecord {
    double q = 0.0;
    double epsilon = 0.0;
    double r_physical = 0.0;
    double d_physical = 0.0;
    double r_logical = 0.0;
    double d_logical = 0.0;
    bool converged = false;
};

SweepRecord sweep_point(const NoiseParams& params, std::size_t max_iters = kDefaultMaxIters,
                        double tol = kDefaultTolerance);

/// Row-major over the grids, q outer. Evaluated in parallel; order is fixed.
std::vector<SweepRecord> sweep(const std::vector<double>& q_grid, const std::vector<double>& eps_grid,
                               std::size_t max_iters = kDefaultMaxIters, double tol = kDefaultTolerance);

}  // namespace fiveq

#endif
