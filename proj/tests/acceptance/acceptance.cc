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

// Acceptance suite. Each criterion prints one PASS/FAIL line; run a single
// criterion with --criterion N.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "fiveq/code_spec.h"
#include "fiveq/coding_map.h"
#include "fiveq/dense_oracle.h"
#include "fiveq/dynamics.h"
#include "fiveq/metrics.h"
#include "support/oracles.h"

namespace {

using namespace fiveq;
using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

std::string fixed(double v, int digits = 4) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

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

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

Verdict criterion_1() {
    const std::array<double, 7> radii{0.02, 0.04, 0.06, 0.07, 0.072, 0.073, 0.08};
    const std::array<double, 7> max_ref{0.245, 0.520, 0.812, 0.964, 0.995, 1.010, 1.118};
    const std::array<double, 7> min_ref{0.101, 0.202, 0.283, 0.332, 0.346, 0.361, 0.387};
    const auto start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli({"basin", "--radii", "0.02,0.04,0.06,0.07,0.072,0.073,0.08"}, out, err);
    const double elapsed = seconds_since(start);
    if (code != 0) {
        return {false, "basin command failed: " + err.str()};
    }
    const auto lines = split_lines(out.str());
    if (lines.size() != 2 + radii.size()) {
        return {false, "unexpected basin output"};
    }
    bool ok = elapsed < 5.0;
    std::ostringstream detail;
    int misses = 0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        double r = 0, mx = 0, mn = 0;
        std::sscanf(lines[2 + k].c_str(), "%lf,%lf,%lf", &r, &mx, &mn);
        const bool max_ok = std::abs(mx - max_ref[k]) <= 0.005 && std::abs(r - radii[k]) < 1e-15;
        const bool min_ok = std::abs(mn - min_ref[k]) <= 0.005;
        misses += (max_ok ? 0 : 1) + (min_ok ? 0 : 1);
        ok = ok && max_ok && min_ok;
        detail << (k ? "; " : "") << "r=" << radii[k] << " max " << fixed(mx) << (max_ok ? "" : "(!)") << " min "
               << fixed(mn) << (min_ok ? "" : "(!)");
    }
    detail << "; " << misses << " of 14 entries outside +-0.005; " << fixed(elapsed, 2) << " s";
    return {ok, detail.str()};
}

Verdict criterion_2() {
    const auto start = Clock::now();
    const AlphaBetaTables tables = derive_alpha_beta(five_qubit_code());
    std::mt19937_64 rng(2024);
    double worst_sym = 0.0;
    for (int k = 0; k < 100; ++k) {
        const UnitalBlock b = random_block(rng);
        worst_sym = std::max(worst_sym, (process_matrix_explicit(b).m - process_matrix_oracle(tables, b).m)
                                            .cwiseAbs()
                                            .maxCoeff());
    }
    const oracle::DenseFiveQubit dense;
    const DenseCodeModel model(five_qubit_code());
    double worst_dense = 0.0;
    for (int k = 0; k < 10; ++k) {
        const auto kraus = oracle::random_mixed_unitary(rng, 3);
        const Eigen::Matrix4d t = oracle::ptm_of_kraus(kraus);
        const Eigen::Matrix4d mine = process_matrix_explicit(UnitalBlock::from_transfer(TransferMatrix(t))).embed().matrix();
        worst_dense = std::max(worst_dense, (mine - dense.logical_ptm(t)).cwiseAbs().maxCoeff());
        worst_dense = std::max(worst_dense, (mine - model.logical_channel(KrausChannel{kraus}).matrix()).cwiseAbs().maxCoeff());
    }
    const double elapsed = seconds_since(start);
    return {worst_sym < 1e-12 && worst_dense < 1e-10 && elapsed < 60.0,
            "100 blocks |explicit - symbolic| " + sci(worst_sym) + "; 10 CPTP channels |explicit - dense| " +
                sci(worst_dense) + "; " + fixed(elapsed, 2) + " s"};
}

Verdict criterion_3() {
    const std::array<std::vector<std::string>, 3> expected{{
        {"XXXXX", "IYYIX", "XIYYI", "IXIYY", "YIXIY", "IZXZI", "XYZZY", "ZZYXY", "IIZXZ", "YXYZZ", "ZIIZX", "XZIIZ",
         "ZYXYZ", "YZZYX", "ZXZII", "YYIXI"},
        {"YYYYY", "ZXXZY", "YZXXZ", "ZYZXX", "XZYZX", "ZIYIZ", "YXIIX", "IIXYX", "ZZIYI", "XYXII", "IZZIY", "YIZZI",
         "IXYXI", "XIIXY", "IYIZZ", "XXZYZ"},
        {"ZZZZZ", "YIIYZ", "ZYIIY", "YZYII", "IYZYI", "YXZXY", "ZIXXI", "XXIZI", "YYXZX", "IZIXX", "XYYXZ", "ZXYYX",
         "XIZIX", "IXXIZ", "XZXYY", "IIYZY"},
    }};
    const AlphaBetaTables tables = derive_alpha_beta(five_qubit_code());
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t s = 0; s < 3; ++s) {
        std::set<std::pair<std::string, std::string>> derived;
        for (const auto& [p, c] : tables.beta[s + 1]) {
            derived.insert({p.letters(), c.str()});
        }
        std::set<std::pair<std::string, std::string>> want;
        for (const auto& t : expected[s]) {
            want.insert({t, "-1/4"});
        }
        const bool match = derived == want;
        ok = ok && match;
        detail << "D_" << "XYZ"[s] << (match ? " equal" : " differ") << (s < 2 ? ", " : "");
    }
    return {ok, detail.str() + " (16 terms each, coefficient -1/4)"};
}

Verdict criterion_4() {
    const oracle::DenseFiveQubit dense;
    const DenseCodeModel model(five_qubit_code());
    double worst = 0.0;
    for (std::size_t q = 0; q < 5; ++q) {
        for (char c : {'X', 'Y', 'Z'}) {
            const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
            worst = std::max(worst, (model.logical_channel_for_error(PauliString::single(5, q, c)).matrix() - id)
                                        .cwiseAbs()
                                        .maxCoeff());
            worst = std::max(worst, (dense.logical_ptm_for_error(oracle::on_qubit(oracle::pauli(c), q, 5)) - id)
                                        .cwiseAbs()
                                        .maxCoeff());
        }
    }
    return {worst < 1e-10, "15 weight-one errors, max |G - I| = " + sci(worst)};
}

Verdict criterion_5() {
    const bool fixed_point = apply_reduced(ReducedChannel{1, 1, 1, 0, 0}) == ReducedChannel{1, 1, 1, 0, 0};
    const double analytic = jacobian_reduced2(1.0, 1.0).norm();
    const Eigen::MatrixXd fd2 = oracle::central_difference(
        [](const Eigen::VectorXd& p) { return Eigen::VectorXd(reduced_two_var(p[0], p[1])); }, Eigen::Vector2d(1, 1));
    Eigen::VectorXd id9(9);
    id9 << 1, 0, 0, 0, 1, 0, 0, 0, 1;
    const Eigen::MatrixXd fd9 = oracle::central_difference(
        [](const Eigen::VectorXd& p) {
            std::array<double, 9> in{};
            std::copy(p.data(), p.data() + 9, in.begin());
            const auto out = process_matrix_explicit(UnitalBlock::from_row_major(in)).row_major();
            return Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(out.data(), 9));
        },
        id9);
    const double fd2_norm = Eigen::JacobiSVD<Eigen::MatrixXd>(fd2).singularValues()[0];
    const double fd9_norm = Eigen::JacobiSVD<Eigen::MatrixXd>(fd9).singularValues()[0];
    return {fixed_point && analytic < 1e-6 && fd2_norm < 1e-6 && fd9_norm < 1e-6,
            std::string(fixed_point ? "identity fixed exactly" : "identity NOT fixed") + "; ||Df|| analytic " +
                sci(analytic) + ", 2-var FD " + sci(fd2_norm) + ", 9-var FD " + sci(fd9_norm)};
}

Verdict criterion_6() {
    std::size_t inside = 0;
    std::size_t failures = 0;
    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            const double q = 0.05 * i / 49.0;
            const double eps = 0.45 * j / 49.0;
            if (1.0 - (1.0 - 2.0 * q) * std::cos(eps) >= 0.072) {
                continue;
            }
            ++inside;
            const IterationTrace t = iterate(rotation_bitflip_channel({q, eps}), 60, 1e-9);
            failures += (t.limit == Limit::identity_channel && t.steps() <= 60) ? 0 : 1;
        }
    }
    const IterationTrace edge = iterate(rotation_bitflip_channel({0.0, 0.379}), 60, 1e-9);
    const bool edge_ok = edge.limit == Limit::identity_channel;
    return {failures == 0 && edge_ok && inside > 0,
            std::to_string(inside - failures) + "/" + std::to_string(inside) +
                " in-region grid points converge; (0, 0.379) " +
                (edge_ok ? "converges in " + std::to_string(edge.steps()) + " steps" : "does not converge")};
}

Verdict criterion_7() {
    double worst_phys = 0.0;
    double worst_log = 0.0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double q = 0.5 * i / 19.0;
            const double eps = 3.0 * j / 19.0;
            const double a = 1.0 - 2.0 * q;
            const double y = a * std::cos(eps);
            const double u = a * std::sin(eps);
            const ReducedChannel phys = rotation_bitflip_channel({q, eps});
            const double r_phys = (1.0 - y) / 3.0;
            const double d_phys = 0.5 * std::sqrt(1.0 + a * a - 2.0 * y);
            worst_phys = std::max({worst_phys, std::abs(avg_infidelity(phys) - r_phys),
                                   std::abs(diamond_distance(phys) - d_phys)});
            const ReducedChannel logical = apply_reduced(phys);
            const double y2 = y * y;
            const double r_log = (13.0 - 10.0 * y - 10.0 * y2 + 5.0 * y2 * y2 + 2.0 * y2 * y2 * y) / 24.0;
            const double d_log = 5.0 / 16.0 * (1.0 - 2.0 * y2 + y2 * y2) +
                                 std::sqrt(std::pow(4.0 - 5.0 * y + y2 * y2 * y, 2) + std::pow(u, 10)) / 8.0;
            worst_log = std::max({worst_log, std::abs(avg_infidelity(logical) - r_log),
                                  std::abs(diamond_distance(logical) - d_log)});
        }
    }
    return {worst_phys < 1e-12 && worst_log < 1e-12,
            "400 points, physical max dev " + sci(worst_phys) + ", logical max dev " + sci(worst_log)};
}

Verdict criterion_8() {
    const double eps = 0.01;
    const ReducedChannel phys = rotation_bitflip_channel({0.0, eps});
    const ReducedChannel logical = apply_reduced(phys);
    const double r1 = avg_infidelity(logical) / (5.0 / 12.0 * std::pow(eps, 4));
    const double r2 = diamond_distance(logical) / (5.0 / 8.0 * std::pow(eps, 4));
    const double r3 = diamond_distance(logical) / (10.0 * std::pow(diamond_distance(phys), 4));
    const double q = 1e-3;
    const ReducedChannel pauli = apply_reduced(rotation_bitflip_channel({q, 0.0}));
    const double r4 = avg_infidelity(pauli) / (20.0 / 3.0 * q * q);
    const double r5 = diamond_distance(pauli) / (10.0 * q * q);
    auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
    std::ostringstream d;
    d << std::setprecision(6) << "coherent ratios " << r1 << ", " << r2 << ", " << r3 << "; Pauli ratios " << r4
      << ", " << r5;
    return {in(r1, 0.99, 1.01) && in(r2, 0.99, 1.01) && in(r3, 0.99, 1.01) && in(r4, 0.98, 1.02) &&
                in(r5, 0.98, 1.02),
            d.str()};
}

Verdict criterion_9() {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    int tested = 0;
    double worst_eig = 0.0;
    double worst_sdp = 0.0;
    double worst_slack = 0.0;
    while (tested < 50) {
        const double x = unit(rng);
        const double y = sym(rng);
        const double u = sym(rng);
        const double root = std::hypot(1.0 - y, u);
        if (root < (1.0 - x) / 2.0) {
            continue;
        }
        ++tested;
        const ReducedChannel c{x, y, y, u, -u};
        const Eigen::Matrix4cd j = choi_of_delta(c).entries;
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(j);
        std::array<double, 4> closed{(1 - x) / 2 - root, -(1 - x) / 2, -(1 - x) / 2, (1 - x) / 2 + root};
        std::sort(closed.begin(), closed.end());
        for (int k = 0; k < 4; ++k) {
            worst_eig = std::max(worst_eig, std::abs(es.eigenvalues()[k] - closed[k]));
        }
        Eigen::Matrix4cd pi_plus = Eigen::Matrix4cd::Zero();
        for (int k = 0; k < 4; ++k) {
            if (es.eigenvalues()[k] > 1e-12) {
                pi_plus += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
            }
        }
        const double primal = (j * pi_plus).trace().real() / 2.0;
        const Eigen::Vector4cd top = es.eigenvectors().col(3);
        const Eigen::Matrix4cd z = es.eigenvalues()[3] * top * top.adjoint();
        Eigen::Matrix2cd tr2 = Eigen::Matrix2cd::Zero();
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int r = 0; r < 2; ++r) {
                    tr2(a, b) += z(2 * a + r, 2 * b + r);
                }
            }
        }
        const double dual = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(tr2).eigenvalues().cwiseAbs().maxCoeff();
        const double closed_d = (1 - x) / 4 + root / 2;
        const double d = diamond_distance(c);
        worst_sdp = std::max({worst_sdp, std::abs(primal - dual), std::abs(primal - closed_d), std::abs(d - closed_d)});
        worst_slack =
            std::min(worst_slack, Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(z - j).eigenvalues().minCoeff());
    }
    return {worst_eig < 1e-10 && worst_sdp < 1e-10 && worst_slack > -1e-10,
            "50 channels, eigenvalue dev " + sci(worst_eig) + ", primal/dual/closed dev " + sci(worst_sdp) +
                ", min eig(Z - J) " + sci(worst_slack)};
}

Verdict criterion_10() {
    const auto start = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    cli::run_cli({"verify"}, out, err);
    const double elapsed = seconds_since(start);
    const std::string report = out.str();
    bool ok = elapsed < 180.0;
    std::ostringstream detail;
    for (const char* name : {"haar-fidelity", "pattern-preservation", "jacobian-fd", "cli-determinism"}) {
        const bool passed = report.find(std::string("PASS ") + name + " ") != std::string::npos;
        ok = ok && passed;
        detail << name << (passed ? " ok, " : " FAILED, ");
    }
    detail << "verify ran in " << fixed(elapsed, 2) << " s";
    return {ok, detail.str()};
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Verdict()>>> all{
        {"basin table reproduction", criterion_1},
        {"oracle equivalence", criterion_2},
        {"decoder term lists", criterion_3},
        {"weight-one correction", criterion_4},
        {"fixed point and attraction", criterion_5},
        {"convergence threshold", criterion_6},
        {"metric closed forms", criterion_7},
        {"asymptotics", criterion_8},
        {"Choi spectrum and SDP certificate", criterion_9},
        {"property suite via verify", criterion_10},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> selected;
    for (int k = 1; k < argc; ++k) {
        if (std::strcmp(argv[k], "--criterion") == 0 && k + 1 < argc) {
            const long n = std::strtol(argv[++k], nullptr, 10);
            if (n < 1 || n > static_cast<long>(criteria().size())) {
                std::cerr << "criterion must be 1.." << criteria().size() << "\n";
                return 2;
            }
            selected.push_back(static_cast<std::size_t>(n));
        } else {
            std::cerr << "usage: fiveq_acceptance [--criterion N]...\n";
            return 2;
        }
    }
    if (selected.empty()) {
        for (std::size_t n = 1; n <= criteria().size(); ++n) {
            selected.push_back(n);
        }
    }
    int failed = 0;
    for (std::size_t n : selected) {
        const auto& [title, run] = criteria()[n - 1];
        Verdict v{false, ""};
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " AC" << n << " " << title << ": " << v.detail << "\n";
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
