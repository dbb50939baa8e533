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

#include <random>

#include <benchmark/benchmark.h>

#include "fiveq/code_spec.h"
#include "fiveq/coding_map.h"
#include "fiveq/dense_oracle.h"
#include "fiveq/dynamics.h"
#include "fiveq/metrics.h"
#include "fiveq/sweep.h"

namespace {

using namespace fiveq;

UnitalBlock sample_block() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    UnitalBlock b;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            b(r, c) = u(rng);
        }
    }
    return b;
}

void BM_ExplicitMap(benchmark::State& state) {
    const UnitalBlock b = sample_block();
    for (auto _ : state) {
        benchmark::DoNotOptimize(process_matrix_explicit(b));
    }
}
BENCHMARK(BM_ExplicitMap);

void BM_SymbolicOracle(benchmark::State& state) {
    const AlphaBetaTables tables = derive_alpha_beta(five_qubit_code());
    const UnitalBlock b = sample_block();
    for (auto _ : state) {
        benchmark::DoNotOptimize(process_matrix_oracle(tables, b));
    }
}
BENCHMARK(BM_SymbolicOracle);

void BM_DeriveTables(benchmark::State& state) {
    const CodeSpec code = five_qubit_code();
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_alpha_beta(code));
    }
}
BENCHMARK(BM_DeriveTables);

void BM_DenseLogicalChannel(benchmark::State& state) {
    const DenseCodeModel model(five_qubit_code());
    std::mt19937_64 rng(8);
    const KrausChannel ch = random_unital_channel(rng, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.logical_channel(ch));
    }
}
BENCHMARK(BM_DenseLogicalChannel)->Unit(benchmark::kMillisecond);

void BM_ScanCircle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_circle(0.072, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_ScanCircle)->Arg(360)->Arg(3600)->Unit(benchmark::kMicrosecond);

void BM_Iterate(benchmark::State& state) {
    const ReducedChannel c = rotation_bitflip_channel({0.01, 0.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterate(c));
    }
}
BENCHMARK(BM_Iterate);

void BM_DiamondDistance(benchmark::State& state) {
    const ReducedChannel c = rotation_bitflip_channel({0.01, 0.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_distance(c));
    }
}
BENCHMARK(BM_DiamondDistance);

void BM_Sweep(benchmark::State& state) {
    std::vector<double> qs;
    std::vector<double> es;
    for (int k = 0; k < 50; ++k) {
        qs.push_back(0.001 * k);
        es.push_back(0.009 * k);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(qs, es));
    }
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
