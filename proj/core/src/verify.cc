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

#include "fiveq/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "fiveq/code_spec.h"
#include "fiveq/coding_map.h"
#include "fiveq/dense_oracle.h"
#include "fiveq/dynamics.h"
#include "fiveq/metrics.h"
#include "fiveq/reference_data.h"

namespace fiveq {

namespace {

std::string sci(double v) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(2) << v;
    return out.str();
}

CheckOutcome verdict(bool passed, std::string detail) { return CheckOutcome{passed, std::move(detail)}; }

double max_abs_diff(const UnitalBlock& a, const UnitalBlock& b) { return (a.m - b.m).cwiseAbs().maxCoeff(); }

UnitalBlock random_block(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    UnitalBlock b;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            b(r, c) = u(rng);
        }
    }
    return b;
}

ReducedChannel random_reduced(std::mt19937_64& rng, bool rotation_pattern) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ReducedChannel c{u(rng), u(rng), u(rng), u(rng), u(rng)};
    if (rotation_pattern) {
        c.z = c.y;
        c.v = -c.u;
    }
    return c;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    return out;
}

CheckOutcome check_oracle_equivalence(const VerifyOptions& opt) {
    const AlphaBetaTables tables = derive_alpha_beta(five_qubit_code());
    std::mt19937_64 rng(opt.seed);
    const std::size_t count = opt.quick ? 20 : 100;
    double worst_oracle = 0.0;
    double worst_expanded = 0.0;
    double worst_reduced = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const UnitalBlock b = random_block(rng);
        const UnitalBlock mine = opt.explicit_map(b);
        worst_oracle = std::max(worst_oracle, max_abs_diff(mine, process_matrix_oracle(tables, b)));
        worst_expanded = std::max(worst_expanded, max_abs_diff(mine, process_matrix_expanded(b)));
        const ReducedChannel m = random_reduced(rng, false);
        worst_reduced = std::max(
            worst_reduced, max_abs_diff(opt.reduced_map(m).to_block(), process_matrix_oracle(tables, m.to_block())));
    }
    return verdict(worst_oracle < 1e-12 && worst_expanded < 1e-12 && worst_reduced < 1e-12,
                   std::to_string(count) + " blocks, max |explicit - symbolic| = " + sci(worst_oracle) +
                       ", max |explicit - expanded| = " + sci(worst_expanded) +
                       ", max |reduced - symbolic| = " + sci(worst_reduced));
}

CheckOutcome check_dense_equivalence(const VerifyOptions& opt) {
    const DenseCodeModel model(five_qubit_code());
    std::mt19937_64 rng(opt.seed + 1);
    const std::size_t count = opt.quick ? 3 : 10;
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const KrausChannel channel = random_unital_channel(rng, 3);
        const UnitalBlock physical = UnitalBlock::from_transfer(channel.transfer_matrix(), 1e-12);
        const TransferMatrix dense = model.logical_channel(channel);
        const UnitalBlock mine = opt.explicit_map(physical);
        worst = std::max(worst, (dense.matrix() - mine.embed().matrix()).cwiseAbs().maxCoeff());
    }
    return verdict(worst < 1e-10, std::to_string(count) + " channels, max |explicit - dense| = " + sci(worst));
}

CheckOutcome check_decoder_lists(const VerifyOptions&) {
    const AlphaBetaTables tables = derive_alpha_beta(five_qubit_code());
    std::ostringstream detail;
    bool ok = tables.beta[0].size() == 1 && tables.beta[0].begin()->first == PauliString(5) &&
              tables.beta[0].begin()->second == Rational(1);
    if (!ok) {
        detail << "D_I is not IIIII; ";
    }
    for (std::size_t s = 1; s < 4; ++s) {
        std::set<std::string> derived;
        bool coefficients_ok = true;
        for (const auto& [pauli, coeff] : tables.beta[s]) {
            derived.insert(pauli.letters());
            coefficients_ok = coefficients_ok && coeff == Rational(-1, 4);
        }
        const auto& ref = reference::decoder_terms(kPauliLabels[s]);
        const std::set<std::string> expected(ref.begin(), ref.end());
        if (derived != expected || !coefficients_ok) {
            ok = false;
            detail << "D_" << kPauliLabels[s] << " differs; ";
        }
    }
    detail << (ok ? "D_I, D_X, D_Y, D_Z match the reference term lists" : "");
    return verdict(ok, detail.str());
}

CheckOutcome check_weight_one(const VerifyOptions&) {
    const DenseCodeModel model(five_qubit_code());
    double worst = 0.0;
    std::size_t count = 0;
    for (std::size_t q = 0; q < 5; ++q) {
        for (char p : {'X', 'Y', 'Z'}) {
            const TransferMatrix t = model.logical_channel_for_error(PauliString::single(5, q, p));
            worst = std::max(worst, (t.matrix() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff());
            ++count;
        }
    }
    return verdict(worst < 1e-10, std::to_string(count) + " weight-one errors, max |G - I| = " + sci(worst));
}

CheckOutcome check_fixed_point(const VerifyOptions& opt) {
    const ReducedChannel id = ReducedChannel::identity();
    const bool fixed = opt.reduced_map(id) == id;
    const double analytic = jacobian_reduced2(1.0, 1.0).norm();
    const Eigen::MatrixXd fd2 = finite_difference_jacobian(
        [](const Eigen::VectorXd& p) { return Eigen::VectorXd(reduced_two_var(p[0], p[1])); },
        Eigen::Vector2d(1.0, 1.0));
    const Eigen::MatrixXd fd5 = finite_difference_jacobian(
        [&](const Eigen::VectorXd& p) {
            const auto c = opt.reduced_map(ReducedChannel{p[0], p[1], p[2], p[3], p[4]}).coordinates();
            return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(c.data(), 5));
        },
        (Eigen::VectorXd(5) << 1, 1, 1, 0, 0).finished());
    const auto id9 = UnitalBlock::identity().row_major();
    const Eigen::MatrixXd fd9 = finite_difference_jacobian(
        [&](const Eigen::VectorXd& p) {
            std::array<double, 9> in{};
            std::copy(p.data(), p.data() + 9, in.begin());
            const auto out = opt.explicit_map(UnitalBlock::from_row_major(in)).row_major();
            return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(out.data(), 9));
        },
        Eigen::Map<const Eigen::VectorXd>(id9.data(), 9));
    const double worst = std::max({analytic, fd2.norm(), fd5.norm(), fd9.norm()});
    return verdict(fixed && worst < 1e-6, std::string(fixed ? "" : "identity is not fixed; ") +
                                              "||Df(1,1)|| = " + sci(analytic) + ", FD 2-var " + sci(fd2.norm()) +
                                              ", FD 5-var " + sci(fd5.norm()) + ", FD 9-var " + sci(fd9.norm()));
}

CheckOutcome check_reduced_consistency(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 2);
    const std::size_t count = opt.quick ? 20 : 100;
    double worst_block = 0.0;
    double worst_two_var = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const ReducedChannel m = random_reduced(rng, false);
        const UnitalBlock expected = opt.explicit_map(m.to_block());
        worst_block = std::max(worst_block, max_abs_diff(opt.reduced_map(m).to_block(), expected));
        const ReducedChannel planar{m.x, m.y, m.y, 0.0, 0.0};
        const ReducedChannel image = opt.reduced_map(planar);
        const Eigen::Vector2d f = reduced_two_var(m.x, m.y);
        worst_two_var = std::max({worst_two_var, std::abs(image.x - f[0]), std::abs(image.y - f[1])});
    }
    return verdict(worst_block < 1e-12 && worst_two_var < 1e-12,
                   std::to_string(count) + " channels, max |reduced - explicit| = " + sci(worst_block) +
                       ", max |two-var - reduced| = " + sci(worst_two_var));
}

CheckOutcome check_pattern_preservation(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 3);
    const std::size_t count = opt.quick ? 50 : 500;
    std::size_t broken_zeros = 0;
    std::size_t broken_sign = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const ReducedChannel m = random_reduced(rng, k % 2 == 0);
        if (!ReducedChannel::from_block(opt.explicit_map(m.to_block()), 0.0)) {
            ++broken_zeros;
        }
        if (m.v == -m.u) {
            const ReducedChannel out = opt.reduced_map(m);
            if (out.v != -out.u) {
                ++broken_sign;
            }
        }
    }
    return verdict(broken_zeros == 0 && broken_sign == 0,
                   std::to_string(count) + " inputs, structural-zero violations " + std::to_string(broken_zeros) +
                       ", v = -u violations " + std::to_string(broken_sign));
}

CheckOutcome check_jacobian_fd(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 4);
    std::uniform_real_distribution<double> u(0.0, 1.2);
    const std::size_t count = opt.quick ? 20 : 100;
    double worst_fd = 0.0;
    double worst_norm = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double x = u(rng);
        const double y = u(rng);
        const Eigen::MatrixXd fd = finite_difference_jacobian(
            [](const Eigen::VectorXd& p) { return Eigen::VectorXd(reduced_two_var(p[0], p[1])); },
            Eigen::Vector2d(x, y));
        const Eigen::Matrix2d analytic = jacobian_reduced2(x, y);
        worst_fd = std::max(worst_fd, (fd - analytic).cwiseAbs().maxCoeff());
        worst_norm = std::max(worst_norm, std::abs(norm2_closed_form(x, y) - spectral_norm(analytic)));
    }
    return verdict(worst_fd < 1e-6 && worst_norm < 1e-9,
                   std::to_string(count) + " points, max |Df - FD| = " + sci(worst_fd) +
                       ", max |closed-form norm - eigensolve| = " + sci(worst_norm));
}

CheckOutcome check_basin_table(const VerifyOptions&) {
    std::ostringstream detail;
    detail << std::fixed << std::setprecision(4);
    bool ok = true;
    for (std::size_t k = 0; k < reference::kBasinRadii.size(); ++k) {
        const BasinEstimate b = scan_circle(reference::kBasinRadii[k], kDefaultCircleSamples);
        const bool row_ok =
            std::abs(b.max_norm_on_circle - reference::kBasinMaxNorm[k]) <= reference::kBasinTableTolerance &&
            std::abs(b.min_norm_on_circle - reference::kBasinMinNorm[k]) <= reference::kBasinTableTolerance;
        ok = ok && row_ok;
        detail << (k ? "; " : "") << "r=" << reference::kBasinRadii[k] << " max " << b.max_norm_on_circle << "/"
               << reference::kBasinMaxNorm[k] << " min " << b.min_norm_on_circle << "/"
               << reference::kBasinMinNorm[k] << (row_ok ? "" : " MISMATCH");
    }
    return verdict(ok, detail.str());
}

CheckOutcome check_basin_attraction(const VerifyOptions& opt) {
    const BasinEstimate inside = scan_circle(kGuaranteedBasinRadius);
    const BasinEstimate outside = scan_circle(0.073);
    const std::size_t grid = opt.quick ? 15 : 41;
    std::size_t tested = 0;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t j = 0; j < grid; ++j) {
            const double dx = kGuaranteedBasinRadius * (2.0 * static_cast<double>(i) / (grid - 1) - 1.0);
            const double dy = kGuaranteedBasinRadius * (2.0 * static_cast<double>(j) / (grid - 1) - 1.0);
            if (std::hypot(dx, dy) >= kGuaranteedBasinRadius) {
                continue;
            }
            ++tested;
            if (iterate_two_var(Eigen::Vector2d(1.0 + dx, 1.0 + dy)).limit != Limit::identity_channel) {
                ++failed;
            }
        }
    }
    const bool ok = inside.max_norm_on_circle < 0.995 && outside.max_norm_on_circle > 1.0 && failed == 0;
    return verdict(ok, "max ||Df|| on r=0.072 is " + std::to_string(inside.max_norm_on_circle) + ", on r=0.073 is " +
                           std::to_string(outside.max_norm_on_circle) + "; " + std::to_string(tested - failed) +
                           "/" + std::to_string(tested) + " ball points converge to (1,1)");
}

CheckOutcome check_threshold_region(const VerifyOptions& opt) {
    const std::size_t n = opt.quick ? 20 : 50;
    const auto qs = linspace(0.0, 0.05, n);
    const auto es = linspace(0.0, 0.45, n);
    const ThresholdSurface surface = threshold_surface(qs, es);
    std::size_t in_region = 0;
    std::size_t failed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (in_guaranteed_region({qs[i], es[j]})) {
                ++in_region;
                failed += surface.at(i, j) ? 0 : 1;
            }
        }
    }
    const bool edge = iterate(rotation_bitflip_channel({0.0, 0.379})).limit == Limit::identity_channel;
    return verdict(failed == 0 && edge && in_region > 0,
                   std::to_string(in_region - failed) + "/" + std::to_string(in_region) +
                       " guaranteed-region grid points converge; (q=0, eps=0.379) " +
                       (edge ? "converges" : "does not converge"));
}

CheckOutcome check_metric_closed_forms(const VerifyOptions& opt) {
    const std::size_t n = opt.quick ? 10 : 20;
    const auto qs = linspace(0.0, 0.5, n);
    const auto es = linspace(0.0, 3.14159, n);
    double worst_physical = 0.0;
    double worst_logical = 0.0;
    for (double q : qs) {
        for (double e : es) {
            const NoiseParams p{q, e};
            const MetricReport closed_phys = physical_metrics(p);
            const MetricReport composed_phys = evaluate_metrics(rotation_bitflip_channel(p));
            worst_physical = std::max({worst_physical, std::abs(closed_phys.infidelity - composed_phys.infidelity),
                                       std::abs(closed_phys.diamond_distance - composed_phys.diamond_distance)});
            const MetricReport closed_log = post_correction_metrics(p);
            const MetricReport composed_log = evaluate_metrics(opt.reduced_map(rotation_bitflip_channel(p)));
            worst_logical = std::max({worst_logical, std::abs(closed_log.infidelity - composed_log.infidelity),
                                      std::abs(closed_log.diamond_distance - composed_log.diamond_distance)});
        }
    }
    return verdict(worst_physical < 1e-12 && worst_logical < 1e-12,
                   std::to_string(n * n) + " grid points, physical max dev " + sci(worst_physical) +
                       ", logical max dev " + sci(worst_logical));
}

CheckOutcome check_asymptotics(const VerifyOptions&) {
    const double eps = 0.01;
    const MetricReport coherent = post_correction_metrics({0.0, eps});
    const double d_phys = physical_metrics({0.0, eps}).diamond_distance;
    const double r1 = coherent.infidelity / (5.0 / 12.0 * std::pow(eps, 4));
    const double r2 = coherent.diamond_distance / (5.0 / 8.0 * std::pow(eps, 4));
    const double r3 = coherent.diamond_distance / (10.0 * std::pow(d_phys, 4));
    const double q = 1e-3;
    const MetricReport pauli = pauli_limit_metrics(q);
    const double r4 = pauli.infidelity / (20.0 / 3.0 * q * q);
    const double r5 = pauli.diamond_distance / (10.0 * q * q);
    auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
    const bool ok = in(r1, 0.99, 1.01) && in(r2, 0.99, 1.01) && in(r3, 0.99, 1.01) && in(r4, 0.98, 1.02) &&
                    in(r5, 0.98, 1.02);
    std::ostringstream detail;
    detail << std::setprecision(6) << "ratios r/(5e^4/12)=" << r1 << " D/(5e^4/8)=" << r2 << " D/(10 D_phys^4)=" << r3
           << " r/(20q^2/3)=" << r4 << " D/(10q^2)=" << r5;
    return verdict(ok, detail.str());
}

CheckOutcome check_choi_spectrum(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 5);
    const std::size_t wanted = opt.quick ? 10 : 50;
    std::size_t tested = 0;
    double worst_spec = 0.0;
    double worst_sdp = 0.0;
    double worst_def = 0.0;
    double worst_slack = 0.0;
    while (tested < wanted) {
        ReducedChannel c = random_reduced(rng, true);
        c.x = 0.5 * (c.x + 1.0);
        if (0.5 * (1.0 - c.x) - std::hypot(1.0 - c.y, c.u) > 0.0) {
            continue;
        }
        ++tested;
        const FeasiblePointCertificate cert = feasible_point_certificate(c);
        const auto closed = choi_spectrum_closed_form(c);
        std::array<double, 4> sorted = closed;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        for (std::size_t k = 0; k < 4; ++k) {
            worst_spec = std::max(worst_spec, std::abs(sorted[k] - cert.spectrum[k]));
        }
        const double d = diamond_distance(c);
        worst_sdp = std::max({worst_sdp, std::abs(cert.primal - cert.dual), std::abs(cert.primal - d)});
        worst_slack = std::min(worst_slack, cert.dual_slack);
        const ChoiMatrix closed_form = choi_of_delta(c);
        const ChoiMatrix defined = choi_of_delta_from_definition(c.to_block().embed());
        worst_def = std::max(worst_def, (closed_form.entries - defined.entries).cwiseAbs().maxCoeff());
    }
    return verdict(worst_spec < 1e-10 && worst_sdp < 1e-10 && worst_def < 1e-12 && worst_slack >= -1e-10,
                   std::to_string(tested) + " channels, spectrum dev " + sci(worst_spec) + ", primal/dual/closed dev " +
                       sci(worst_sdp) + ", closed form vs definition " + sci(worst_def) + ", min dual slack " +
                       sci(worst_slack));
}

CheckOutcome check_haar_fidelity(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed + 6);
    std::uniform_real_distribution<double> qd(0.0, 0.2);
    std::uniform_real_distribution<double> ed(-0.5, 0.5);
    std::uniform_real_distribution<double> near(0.7, 1.0);
    std::uniform_real_distribution<double> off(-0.2, 0.2);
    const std::size_t count = opt.quick ? 4 : 20;
    double worst = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        ReducedChannel c;
        switch (k % 3) {
            case 0:
                c = rotation_bitflip_channel({qd(rng), ed(rng)});
                break;
            case 1:
                c = opt.reduced_map(rotation_bitflip_channel({qd(rng), ed(rng)}));
                break;
            default:
                c = ReducedChannel{near(rng), near(rng), near(rng), off(rng), off(rng)};
                break;
        }
        const double mc = haar_average_fidelity_mc(c.to_block().embed(), 100000, opt.seed + 100 + k);
        worst = std::max(worst, std::abs((1.0 - mc) - avg_infidelity(c)));
    }
    return verdict(worst < 1e-3, std::to_string(count) + " channels x 1e5 Haar states, max |r - r_MC| = " + sci(worst));
}

}  // namespace

VerifyOptions::VerifyOptions() : explicit_map(process_matrix_explicit), reduced_map(apply_reduced) {}

const std::vector<NamedCheck>& builtin_checks() {
    static const std::vector<NamedCheck> checks{
        {"oracle-equivalence", check_oracle_equivalence},
        {"dense-equivalence", check_dense_equivalence},
        {"decoder-lists", check_decoder_lists},
        {"weight-one-correction", check_weight_one},
        {"fixed-point-derivative", check_fixed_point},
        {"reduced-consistency", check_reduced_consistency},
        {"pattern-preservation", check_pattern_preservation},
        {"jacobian-fd", check_jacobian_fd},
        {"basin-table", check_basin_table},
        {"basin-attraction", check_basin_attraction},
        {"threshold-region", check_threshold_region},
        {"metric-closed-forms", check_metric_closed_forms},
        {"asymptotics", check_asymptotics},
        {"choi-spectrum", check_choi_spectrum},
        {"haar-fidelity", check_haar_fidelity},
    };
    return checks;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options, std::span<const NamedCheck> extra) {
    std::vector<NamedCheck> all = builtin_checks();
    all.insert(all.end(), extra.begin(), extra.end());
    std::vector<CheckResult> results;
    for (const auto& check : all) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r{check.name, false, "", 0.0};
        try {
            const CheckOutcome outcome = check.run(options);
            r.passed = outcome.passed;
            r.detail = outcome.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(std::span<const CheckResult> results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace fiveq
