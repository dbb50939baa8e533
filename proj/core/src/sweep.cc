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

#include "fiveq/sweep.h"

#include "fiveq/coding_map.h"
#include "fiveq/metrics.h"
#include "parallel.h"

namespace fiveq {

SweepRecord sweep_point(const NoiseParams& params, std::size_t max_iters, double tol) {
    const ReducedChannel physical = rotation_bitflip_channel(params);
    const MetricReport before = evaluate_metrics(physical);
    const MetricReport after = evaluate_metrics(apply_reduced(physical));
    const bool converged = iterate(physical, max_iters, tol).limit == Limit::identity_channel;
    return SweepRecord{params.q,        params.epsilon,          before.infidelity, before.diamond_distance,
                       after.infidelity, after.diamond_distance, converged};
}

std::vector<SweepRecord> sweep(const std::vector<double>& q_grid, const std::vector<double>& eps_grid,
                               std::size_t max_iters, double tol) {
    std::vector<SweepRecord> rows(q_grid.size() * eps_grid.size());
    detail::parallel_for(rows.size(), [&](std::size_t idx) {
        rows[idx] = sweep_point(NoiseParams{q_grid[idx / eps_grid.size()], eps_grid[idx % eps_grid.size()]},
                                max_iters, tol);
    });
    return rows;
}

}  // namespace fiveq
