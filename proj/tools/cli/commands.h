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

#ifndef FIVEQ_TOOLS_COMMANDS_H
#define FIVEQ_TOOLS_COMMANDS_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fiveq/channel.h"

namespace fiveq::cli {

enum class Command { logical, iterate, sweep, basin, metrics, verify };
enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Prefix for environment overrides, e.g. FIVEQ_Q, FIVEQ_GRID_EPS.
inline constexpr const char* kEnvPrefix = "FIVEQ_";

/// lo:hi:step, inclusive of hi up to rounding.
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    static GridSpec parse(const std::string& text);
    std::vector<double> values() const;
    std::string str() const;
};

struct RunConfig {
    Command command = Command::logical;
    std::optional<NoiseParams> noise;
    std::optional<ReducedChannel> channel;
    std::optional<GridSpec> grid_q;
    std::optional<GridSpec> grid_eps;
    std::vector<double> radii;
    std::string out;
    Format format = Format::csv;
    double tol = 1e-9;
    std::size_t max_iters = 60;
    std::size_t samples = 3600;
    std::uint64_t seed = 1729;
    bool oracle = false;
    bool quick = false;

    /// Physical channel from either --channel or --q/--epsilon.
    ReducedChannel physical_channel() const;
    /// Space-separated key=value pairs of every setting that affects the output.
    std::string echo() const;
};

std::string to_string(Command command);

/// "x=1,y=.9,..." with missing keys taken from the identity channel.
ReducedChannel parse_channel(const std::string& text);

/// Emits the command's dataset to `out`. Throws on invalid input.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parses args (without argv[0]), applies environment
/// overrides, executes, and maps errors onto the exit-code contract.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fiveq::cli

#endif
