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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "fiveq/code_spec.h"
#include "fiveq/coding_map.h"
#include "fiveq/dynamics.h"
#include "fiveq/errors.h"
#include "fiveq/metrics.h"
#include "fiveq/reference_data.h"
#include "fiveq/serialize.h"
#include "fiveq/sweep.h"
#include "fiveq/verify.h"

namespace fiveq::cli {

namespace {

using nlohmann::json;

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError("malformed number for " + what + ": '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw ParseError("malformed number for " + what + ": '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::string header(const RunConfig& cfg) {
    return "# schema=fiveq." + to_string(cfg.command) + "/1 " + cfg.echo() + "\n";
}

json envelope(const RunConfig& cfg) {
    return json{{"schema", "fiveq." + to_string(cfg.command) + "/1"}, {"config", cfg.echo()}};
}

void write_metrics_row(std::ostream& out, const std::string& stage, const MetricReport& r) {
    std::vector<std::string> f{stage, format_double(r.infidelity), format_double(r.avg_fidelity),
                               format_double(r.diamond_distance)};
    for (double c : r.channel.coordinates()) {
        f.push_back(format_double(c));
    }
    write_csv_row(out, f);
}

void cmd_logical(const RunConfig& cfg, std::ostream& out) {
    const UnitalBlock physical = cfg.physical_channel().to_block();
    const UnitalBlock logical = process_matrix_explicit(physical);
    std::optional<double> discrepancy;
    if (cfg.oracle) {
        const UnitalBlock oracle = process_matrix_oracle(derive_alpha_beta(five_qubit_code()), physical);
        discrepancy = (logical.m - oracle.m).cwiseAbs().maxCoeff();
    }
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["block"] = logical;
        if (discrepancy) {
            j["oracle_max_discrepancy"] = *discrepancy;
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << header(cfg);
    if (discrepancy) {
        out << "# oracle_max_discrepancy=" << format_double(*discrepancy) << "\n";
    }
    csv::write_block(out, logical);
}

void cmd_iterate(const RunConfig& cfg, std::ostream& out) {
    const IterationTrace trace = iterate(cfg.physical_channel(), cfg.max_iters, cfg.tol);
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["trace"] = trace;
        out << j.dump(2) << "\n";
        return;
    }
    out << header(cfg) << "# limit=" << to_string(trace.limit) << " steps=" << trace.steps() << "\n";
    csv::write_trace(out, trace);
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.grid_q || !cfg.grid_eps) {
        throw std::invalid_argument("sweep requires --grid-q and --grid-eps");
    }
    const auto rows = sweep(cfg.grid_q->values(), cfg.grid_eps->values(), cfg.max_iters, cfg.tol);
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["rows"] = rows;
        out << j.dump(2) << "\n";
        return;
    }
    out << header(cfg);
    csv::write_sweep(out, rows);
}

void cmd_basin(const RunConfig& cfg, std::ostream& out) {
    std::vector<BasinEstimate> rows;
    for (double r : cfg.radii) {
        rows.push_back(scan_circle(r, cfg.samples));
    }
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["rows"] = rows;
        out << j.dump(2) << "\n";
        return;
    }
    out << header(cfg);
    csv::write_basin(out, rows);
}

void cmd_metrics(const RunConfig& cfg, std::ostream& out) {
    MetricReport physical;
    MetricReport logical;
    if (cfg.noise) {
        physical = physical_metrics(*cfg.noise);
        logical = post_correction_metrics(*cfg.noise);
    } else {
        physical = evaluate_metrics(*cfg.channel);
        logical = evaluate_metrics(apply_reduced(*cfg.channel));
    }
    if (cfg.format == Format::json) {
        json j = envelope(cfg);
        j["physical"] = physical;
        j["logical"] = logical;
        out << j.dump(2) << "\n";
        return;
    }
    out << header(cfg);
    const std::vector<std::string> cols{"stage", "infidelity", "avg_fidelity", "diamond_distance", "x", "y", "z",
                                        "u",     "v"};
    write_csv_row(out, cols);
    write_metrics_row(out, "physical", physical);
    write_metrics_row(out, "logical", logical);
}

// Every emitting command, run twice, must produce identical bytes.
CheckOutcome check_cli_determinism(const VerifyOptions& opt) {
    const std::string seed = std::to_string(opt.seed);
    const std::vector<std::vector<std::string>> runs{
        {"logical", "--q", "0.01", "--epsilon", "0.2", "--oracle"},
        {"logical", "--channel", "x=1,y=.9,z=.9,u=.1,v=-.1", "--format", "json"},
        {"iterate", "--q", "0.01", "--epsilon", "0.3"},
        {"iterate", "--q", "0.01", "--epsilon", "0.3", "--format", "json"},
        {"sweep", "--grid-q", "0:0.04:0.02", "--grid-eps", "0:0.4:0.1"},
        {"sweep", "--grid-q", "0:0.04:0.02", "--grid-eps", "0:0.4:0.1", "--format", "json"},
        {"basin", "--radii", opt.quick ? "0.02,0.072" : "0.02,0.04,0.06,0.07,0.072,0.073,0.08"},
        {"basin", "--radii", "0.05", "--samples", "720", "--format", "json"},
        {"metrics", "--q", "0.001", "--epsilon", "0.05", "--seed", seed},
        {"metrics", "--channel", "x=1,y=.9,z=.9,u=.1,v=-.1", "--format", "json"},
    };
    std::size_t mismatches = 0;
    std::size_t errors = 0;
    for (const auto& args : runs) {
        std::ostringstream first;
        std::ostringstream second;
        std::ostringstream err;
        const int a = run_cli(args, first, err);
        const int b = run_cli(args, second, err);
        errors += (a != kExitOk || b != kExitOk) ? 1 : 0;
        mismatches += first.str() != second.str() ? 1 : 0;
    }
    return CheckOutcome{mismatches == 0 && errors == 0,
                        std::to_string(runs.size()) + " invocations run twice, " + std::to_string(mismatches) +
                            " differ, " + std::to_string(errors) + " failed"};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions options;
    options.quick = cfg.quick;
    options.seed = cfg.seed;
    const std::vector<NamedCheck> extra{{"cli-determinism", check_cli_determinism}};
    const auto results = run_verification(options, extra);
    std::size_t passed = 0;
    if (cfg.format == Format::json) {
        json rows = json::array();
        for (const auto& r : results) {
            rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
            passed += r.passed ? 1 : 0;
        }
        json j = envelope(cfg);
        j["checks"] = rows;
        j["passed"] = passed;
        j["total"] = results.size();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.name << std::right << std::fixed
                << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.detail << "\n";
            passed += r.passed ? 1 : 0;
        }
        out << passed << "/" << results.size() << " checks passed\n";
        for (const auto& r : results) {
            if (!r.passed) {
                out << "failed check: " << r.name << "\n";
            }
        }
    }
    return all_passed(results) ? kExitOk : kExitFailure;
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw ParseError("grid must be lo:hi:step, got '" + text + "'");
    }
    GridSpec g{parse_number(parts[0], "grid lo"), parse_number(parts[1], "grid hi"),
               parse_number(parts[2], "grid step")};
    if (g.step <= 0.0) {
        throw ParseError("grid step must be positive in '" + text + "'");
    }
    if (g.hi < g.lo) {
        throw ParseError("grid range is empty in '" + text + "'");
    }
    return g;
}

std::vector<double> GridSpec::values() const {
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = lo + static_cast<double>(k) * step;
    }
    return out;
}

std::string GridSpec::str() const { return format_double(lo) + ":" + format_double(hi) + ":" + format_double(step); }

ReducedChannel RunConfig::physical_channel() const {
    if (channel) {
        return *channel;
    }
    if (noise) {
        return rotation_bitflip_channel(*noise);
    }
    throw std::invalid_argument("a channel is required: give --q and --epsilon, or --channel");
}

std::string RunConfig::echo() const {
    std::ostringstream e;
    if (noise) {
        e << "q=" << format_double(noise->q) << " epsilon=" << format_double(noise->epsilon) << " ";
    }
    if (channel) {
        e << "channel=x=" << format_double(channel->x) << ",y=" << format_double(channel->y)
          << ",z=" << format_double(channel->z) << ",u=" << format_double(channel->u)
          << ",v=" << format_double(channel->v) << " ";
    }
    if (grid_q) {
        e << "grid_q=" << grid_q->str() << " ";
    }
    if (grid_eps) {
        e << "grid_eps=" << grid_eps->str() << " ";
    }
    if (!radii.empty()) {
        e << "radii=";
        for (std::size_t k = 0; k < radii.size(); ++k) {
            e << (k ? "," : "") << format_double(radii[k]);
        }
        e << " samples=" << samples << " ";
    }
    e << "tol=" << format_double(tol) << " max_iters=" << max_iters << " seed=" << seed;
    if (oracle) {
        e << " oracle=1";
    }
    if (quick) {
        e << " quick=1";
    }
    return e.str();
}

std::string to_string(Command command) {
    switch (command) {
        case Command::logical:
            return "logical";
        case Command::iterate:
            return "iterate";
        case Command::sweep:
            return "sweep";
        case Command::basin:
            return "basin";
        case Command::metrics:
            return "metrics";
        case Command::verify:
            return "verify";
    }
    return "unknown";
}

ReducedChannel parse_channel(const std::string& text) {
    ReducedChannel c;
    const std::map<std::string, double ReducedChannel::*> fields{{"x", &ReducedChannel::x},
                                                                 {"y", &ReducedChannel::y},
                                                                 {"z", &ReducedChannel::z},
                                                                 {"u", &ReducedChannel::u},
                                                                 {"v", &ReducedChannel::v}};
    std::set<std::string> seen;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("channel entries must be key=value, got '" + item + "'");
        }
        const std::string key = item.substr(0, eq);
        const auto it = fields.find(key);
        if (it == fields.end()) {
            throw ParseError("unknown channel key '" + key + "' (expected x, y, z, u, v)");
        }
        if (!seen.insert(key).second) {
            throw ParseError("channel key '" + key + "' given twice");
        }
        c.*(it->second) = parse_number(item.substr(eq + 1), "channel " + key);
    }
    return c;
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    int code = kExitOk;
    switch (cfg.command) {
        case Command::logical:
            cmd_logical(cfg, buffer);
            break;
        case Command::iterate:
            cmd_iterate(cfg, buffer);
            break;
        case Command::sweep:
            cmd_sweep(cfg, buffer);
            break;
        case Command::basin:
            cmd_basin(cfg, buffer);
            break;
        case Command::metrics:
            cmd_metrics(cfg, buffer);
            break;
        case Command::verify:
            code = cmd_verify(cfg, buffer);
            break;
    }
    if (cfg.out.empty()) {
        out << buffer.str();
        return code;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "fiveq: cannot open output file " << cfg.out << "\n";
        return kExitFailure;
    }
    file << buffer.str();
    if (!file) {
        err << "fiveq: failed writing " << cfg.out << "\n";
        return kExitFailure;
    }
    return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Concatenated five-qubit code under coherent and bit-flip noise", "fiveq"};
    app.require_subcommand(1);

    struct Raw {
        std::optional<double> q;
        std::optional<double> epsilon;
        std::string channel;
        std::string grid_q;
        std::string grid_eps;
        std::string radii;
        std::string format = "csv";
    } raw;
    RunConfig cfg;

    auto env = [](const std::string& flag) { return std::string(kEnvPrefix) + flag; };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "Write output to PATH instead of stdout")->envname(env("OUT"));
        sub->add_option("--format", raw.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->envname(env("FORMAT"));
        sub->add_option("--tol", cfg.tol, "Convergence tolerance")->check(CLI::PositiveNumber)->envname(env("TOL"));
        sub->add_option("--max-iters", cfg.max_iters, "Iteration cap")
            ->check(CLI::PositiveNumber)
            ->envname(env("MAX_ITERS"));
        sub->add_option("--seed", cfg.seed, "Random seed")->envname(env("SEED"));
    };
    auto add_channel = [&](CLI::App* sub) {
        sub->add_option("--q", raw.q, "Bit-flip probability")->envname(env("Q"));
        sub->add_option("--epsilon", raw.epsilon, "X-rotation angle (radians)")->envname(env("EPSILON"));
        sub->add_option("--channel", raw.channel, "Explicit reduced channel x=..,y=..,z=..,u=..,v=..")
            ->envname(env("CHANNEL"));
    };

    const std::vector<std::pair<Command, std::string>> commands{
        {Command::logical, "Logical process matrix after one round of encoding and decoding"},
        {Command::iterate, "Trace of repeated concatenation"},
        {Command::sweep, "Metrics and convergence over a (q, epsilon) grid"},
        {Command::basin, "Extreme Jacobian norms on circles around the identity"},
        {Command::metrics, "Average infidelity and diamond distance before and after correction"},
        {Command::verify, "Run the built-in verification suite"},
    };
    std::map<CLI::App*, Command> lookup;
    for (const auto& [command, description] : commands) {
        CLI::App* sub = app.add_subcommand(to_string(command), description);
        lookup[sub] = command;
        add_common(sub);
        switch (command) {
            case Command::logical:
                add_channel(sub);
                sub->add_flag("--oracle", cfg.oracle, "Also evaluate the symbolic path and report the discrepancy")
                    ->envname(env("ORACLE"));
                break;
            case Command::iterate:
            case Command::metrics:
                add_channel(sub);
                break;
            case Command::sweep:
                sub->add_option("--grid-q", raw.grid_q, "q grid lo:hi:step")->required()->envname(env("GRID_Q"));
                sub->add_option("--grid-eps", raw.grid_eps, "epsilon grid lo:hi:step")
                    ->required()
                    ->envname(env("GRID_EPS"));
                break;
            case Command::basin:
                sub->add_option("--radii", raw.radii, "Comma-separated circle radii")->envname(env("RADII"));
                sub->add_option("--samples", cfg.samples, "Points per circle")
                    ->check(CLI::Range(std::size_t{360}, std::size_t{10000000}))
                    ->envname(env("SAMPLES"));
                break;
            case Command::verify:
                sub->add_flag("--quick", cfg.quick, "Reduced sample counts")->envname(env("QUICK"));
                break;
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (const auto& [sub, command] : lookup) {
            if (sub->parsed()) {
                cfg.command = command;
            }
        }
        cfg.format = raw.format == "json" ? Format::json : Format::csv;
        const bool has_noise = raw.q.has_value() || raw.epsilon.has_value();
        if (has_noise && !raw.channel.empty()) {
            throw std::invalid_argument("--channel cannot be combined with --q/--epsilon");
        }
        if (has_noise) {
            cfg.noise = NoiseParams{raw.q.value_or(0.0), raw.epsilon.value_or(0.0)};
            if (!cfg.noise->valid()) {
                throw std::invalid_argument("need 0 <= q <= 1 and a finite epsilon");
            }
        }
        if (!raw.channel.empty()) {
            cfg.channel = parse_channel(raw.channel);
        }
        const bool needs_channel =
            cfg.command == Command::logical || cfg.command == Command::iterate || cfg.command == Command::metrics;
        if (needs_channel && !cfg.noise && !cfg.channel) {
            throw std::invalid_argument("give --q and --epsilon, or --channel");
        }
        if (!raw.grid_q.empty()) {
            cfg.grid_q = GridSpec::parse(raw.grid_q);
        }
        if (!raw.grid_eps.empty()) {
            cfg.grid_eps = GridSpec::parse(raw.grid_eps);
        }
        if (cfg.command == Command::basin) {
            if (raw.radii.empty()) {
                cfg.radii.assign(reference::kBasinRadii.begin(), reference::kBasinRadii.end());
            } else {
                for (const auto& item : split(raw.radii, ',')) {
                    const double r = parse_number(item, "radius");
                    if (r < 0.0) {
                        throw std::invalid_argument("radii must be non-negative");
                    }
                    cfg.radii.push_back(r);
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        err << "fiveq: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return execute(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "fiveq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "fiveq: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace fiveq::cli
