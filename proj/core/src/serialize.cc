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

#include "fiveq/serialize.h"

#include <charconv>
#include <cmath>

#include "fiveq/errors.h"
#include "fiveq/pauli.h"

namespace fiveq {

void to_json(nlohmann::json& j, const NoiseParams& p) { j = {{"q", p.q}, {"epsilon", p.epsilon}}; }

void from_json(const nlohmann::json& j, NoiseParams& p) {
    p.q = j.at("q").get<double>();
    p.epsilon = j.at("epsilon").get<double>();
}

void to_json(nlohmann::json& j, const ReducedChannel& c) {
    j = {{"x", c.x}, {"y", c.y}, {"z", c.z}, {"u", c.u}, {"v", c.v}};
}

void from_json(const nlohmann::json& j, ReducedChannel& c) {
    c.x = j.at("x").get<double>();
    c.y = j.at("y").get<double>();
    c.z = j.at("z").get<double>();
    c.u = j.at("u").get<double>();
    c.v = j.at("v").get<double>();
}

void to_json(nlohmann::json& j, const UnitalBlock& b) {
    j = nlohmann::json::object();
    const auto values = b.row_major();
    for (std::size_t k = 0; k < values.size(); ++k) {
        j[unital_block_labels()[k]] = values[k];
    }
}

void from_json(const nlohmann::json& j, UnitalBlock& b) {
    std::array<double, 9> values{};
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = j.at(unital_block_labels()[k]).get<double>();
    }
    b = UnitalBlock::from_row_major(values);
}

void to_json(nlohmann::json& j, const TransferMatrix& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        rows.push_back({t(r, 0), t(r, 1), t(r, 2), t(r, 3)});
    }
    j = {{"labels", {"I", "X", "Y", "Z"}}, {"entries", rows}};
}

void from_json(const nlohmann::json& j, TransferMatrix& t) {
    const auto& rows = j.at("entries");
    if (rows.size() != 4) {
        throw ParseError("transfer matrix needs 4 rows");
    }
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r) {
        if (rows[r].size() != 4) {
            throw ParseError("transfer matrix rows need 4 entries");
        }
        for (int c = 0; c < 4; ++c) {
            m(r, c) = rows[r][c].get<double>();
        }
    }
    t = TransferMatrix(m);
}

void to_json(nlohmann::json& j, const MetricReport& r) {
    j = {{"infidelity", r.infidelity},
         {"avg_fidelity", r.avg_fidelity},
         {"diamond_distance", r.diamond_distance},
         {"channel", r.channel}};
}

void to_json(nlohmann::json& j, const BasinEstimate& b) {
    j = {{"radius", b.radius},
         {"max_norm", b.max_norm_on_circle},
         {"min_norm", b.min_norm_on_circle},
         {"argmax_angle", b.argmax_angle},
         {"argmin_angle", b.argmin_angle},
         {"samples", b.samples}};
}

void to_json(nlohmann::json& j, const SweepRecord& r) {
    j = {{"q", r.q},
         {"epsilon", r.epsilon},
         {"r_physical", r.r_physical},
         {"d_physical", r.d_physical},
         {"r_logical", r.r_logical},
         {"d_logical", r.d_logical},
         {"converged", r.converged}};
}

void to_json(nlohmann::json& j, const IterationTrace& t) {
    j = {{"converged", t.converged}, {"limit", to_string(t.limit)}, {"steps", t.steps()}, {"states", t.states}};
}

void to_json(nlohmann::json& j, const CircleSample& s) {
    j = {{"angle", s.angle}, {"x", s.x}, {"y", s.y}, {"value", s.norm}};
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k > 0) {
            out << ',';
        }
        out << fields[k];
    }
    out << '\n';
}

namespace csv {

const std::vector<std::string>& block_columns() {
    static const std::vector<std::string> cols(unital_block_labels().begin(), unital_block_labels().end());
    return cols;
}

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols{"q",         "epsilon",   "r_physical", "d_physical",
                                               "r_logical", "d_logical", "converged"};
    return cols;
}

const std::vector<std::string>& basin_columns() {
    static const std::vector<std::string> cols{"radius", "max_norm", "min_norm", "samples"};
    return cols;
}

const std::vector<std::string>& circle_columns() {
    static const std::vector<std::string> cols{"radius", "angle", "value"};
    return cols;
}

const std::vector<std::string>& threshold_columns() {
    static const std::vector<std::string> cols{"q", "epsilon", "converged"};
    return cols;
}

const std::vector<std::string>& trace_columns() {
    static const std::vector<std::string> cols{"step", "x", "y", "z", "u", "v"};
    return cols;
}

void write_block(std::ostream& out, const UnitalBlock& block) {
    write_csv_row(out, block_columns());
    std::vector<std::string> row;
    for (double v : block.row_major()) {
        row.push_back(format_double(v));
    }
    write_csv_row(out, row);
}

void write_sweep(std::ostream& out, std::span<const SweepRecord> rows) {
    write_csv_row(out, sweep_columns());
    for (const auto& r : rows) {
        const std::vector<std::string> f{format_double(r.q),         format_double(r.epsilon),
                                         format_double(r.r_physical), format_double(r.d_physical),
                                         format_double(r.r_logical),  format_double(r.d_logical),
                                         r.converged ? "1" : "0"};
        write_csv_row(out, f);
    }
}

void write_basin(std::ostream& out, std::span<const BasinEstimate> rows) {
    write_csv_row(out, basin_columns());
    for (const auto& b : rows) {
        const std::vector<std::string> f{format_double(b.radius), format_double(b.max_norm_on_circle),
                                         format_double(b.min_norm_on_circle), std::to_string(b.samples)};
        write_csv_row(out, f);
    }
}

void write_circle(std::ostream& out, double radius, std::span<const CircleSample> rows) {
    write_csv_row(out, circle_columns());
    for (const auto& s : rows) {
        const std::vector<std::string> f{format_double(radius), format_double(s.angle), format_double(s.norm)};
        write_csv_row(out, f);
    }
}

void write_threshold(std::ostream& out, const ThresholdSurface& surface) {
    write_csv_row(out, threshold_columns());
    for (std::size_t qi = 0; qi < surface.q_grid.size(); ++qi) {
        for (std::size_t ei = 0; ei < surface.eps_grid.size(); ++ei) {
            const std::vector<std::string> f{format_double(surface.q_grid[qi]), format_double(surface.eps_grid[ei]),
                                             surface.at(qi, ei) ? "1" : "0"};
            write_csv_row(out, f);
        }
    }
}

void write_trace(std::ostream& out, const IterationTrace& trace) {
    write_csv_row(out, trace_columns());
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        std::vector<std::string> f{std::to_string(k)};
        for (double c : trace.states[k].coordinates()) {
            f.push_back(format_double(c));
        }
        write_csv_row(out, f);
    }
}

}  // namespace csv

}  // namespace fiveq
