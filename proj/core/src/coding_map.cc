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

#include "fiveq/coding_map.h"

#include <cmath>
#include <string>
#include <vector>

#include "fiveq/errors.h"

namespace fiveq {

namespace {

// Power-of-two scale 2^n / (2|S|) relating E_s to the (mu/2) tensor basis.
Rational encoder_scale(std::size_t num_qubits, std::size_t group_size) {
    return Rational(std::int64_t{1} << num_qubits, 2 * static_cast<std::int64_t>(group_size));
}

struct CompiledTerm {
    std::array<std::uint8_t, kMaxQubits> index{};
    double coefficient = 0.0;
};

std::vector<CompiledTerm> compile(const PauliExpansion& expansion) {
    std::vector<CompiledTerm> terms;
    terms.reserve(expansion.size());
    for (const auto& [pauli, coeff] : expansion) {
        CompiledTerm t;
        for (std::size_t q = 0; q < pauli.num_qubits(); ++q) {
            t.index[q] = static_cast<std::uint8_t>(pauli_index(pauli.label_at(q)));
        }
        t.coefficient = coeff.to_double();
        terms.push_back(t);
    }
    return terms;
}

}  // namespace

AlphaBetaTables derive_alpha_beta(const CodeSpec& spec) {
    spec.validate();
    const std::size_t n = spec.num_qubits();
    const std::vector<PauliString> group = spec.stabilizer_group();
    const auto group_size = static_cast<std::int64_t>(group.size());

    AlphaBetaTables tables;
    tables.num_qubits = n;
    for (std::size_t s = 0; s < 4; ++s) {
        const PauliString& logical = spec.logical_ops[s];
        for (const PauliString& stabilizer : group) {
            const PauliString term = stabilizer * logical;
            if (!term.has_real_phase()) {
                throw ConsistencyError("S_k * logical has imaginary phase: " + term.str());
            }
            const PauliString key = term.with_phase(0);
            tables.alpha[s][key] += encoder_scale(n, group.size()) * Rational(term.sign());

            std::int64_t f = 0;
            for (const PauliString& r : spec.recovery_set) {
                f += commutation_sign(stabilizer, r) * commutation_sign(r, logical);
            }
            if (f != 0) {
                tables.beta[s][key] += Rational(f * term.sign(), group_size);
            }
        }
        std::erase_if(tables.alpha[s], [](const auto& kv) { return kv.second.is_zero(); });
        std::erase_if(tables.beta[s], [](const auto& kv) { return kv.second.is_zero(); });
    }
    return tables;
}

TransferMatrix logical_channel_symbolic(const AlphaBetaTables& tables, const UnitalBlock& physical) {
    const Eigen::Matrix4d n = physical.embed().matrix();
    const std::size_t width = tables.num_qubits;
    Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
    for (std::size_t s = 0; s < 4; ++s) {
        const auto betas = compile(tables.beta[s]);
        for (std::size_t sp = 0; sp < 4; ++sp) {
            const auto alphas = compile(tables.alpha[sp]);
            double total = 0.0;
            for (const auto& b : betas) {
                for (const auto& a : alphas) {
                    double prod = b.coefficient * a.coefficient;
                    for (std::size_t q = 0; q < width; ++q) {
                        prod *= n(b.index[q], a.index[q]);
                    }
                    total += prod;
                }
            }
            g(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(sp)) = total;
        }
    }
    if (g(0, 0) != 1.0 || g(0, 1) != 0.0 || g(0, 2) != 0.0 || g(0, 3) != 0.0 || g(1, 0) != 0.0 ||
        g(2, 0) != 0.0 || g(3, 0) != 0.0) {
        throw ConsistencyError("logical channel lost trace preservation or unitality");
    }
    return TransferMatrix(g);
}

UnitalBlock process_matrix_oracle(const AlphaBetaTables& tables, const UnitalBlock& physical) {
    return UnitalBlock{logical_channel_symbolic(tables, physical).matrix().block<3, 3>(1, 1)};
}

namespace polynomials {

double h_x(const Args& a) {
    const auto [x1, x2, x3, y1, y2, y3, z1, z2, z3] = a;
    return -x1 / 4.0 * (std::pow(x1, 4) + 5 * x2 * x2 * x3 * x3 + 5 * y1 * y1 * z1 * z1 + 5 * y2 * y2 * z3 * z3) -
           2.5 * y3 * z2 * (x2 * y1 * z3 + x3 * y2 * z1) + 5.0 * x1 / 4.0 * (y2 * y2 + z3 * z3);
}

double h_y(const Args& a) {
    const auto [x1, x2, x3, y1, y2, y3, z1, z2, z3] = a;
    return -x2 / 4.0 * (std::pow(x2, 4) + 5 * x1 * x1 * x3 * x3 + 5 * y2 * y2 * z2 * z2 + 5 * y3 * y3 * z1 * z1) -
           2.5 * y1 * z3 * (x1 * y3 * z2 + x3 * y2 * z1) + 5.0 * x2 / 4.0 * (y3 * y3 + z1 * z1);
}

double h_z(const Args& a) {
    const auto [x1, x2, x3, y1, y2, y3, z1, z2, z3] = a;
    return -x3 / 4.0 * (std::pow(x3, 4) + 5 * x1 * x1 * x2 * x2 + 5 * y1 * y1 * z2 * z2 + 5 * y3 * y3 * z3 * z3) -
           2.5 * y2 * z1 * (x1 * y3 * z2 + x2 * y1 * z3) + 5.0 * x3 / 4.0 * (y1 * y1 + z2 * z2);
}

}  // namespace polynomials

UnitalBlock process_matrix_explicit(const UnitalBlock& physical) {
    using polynomials::h_x;
    using polynomials::h_y;
    using polynomials::h_z;
    const double XX = physical(0, 0), XY = physical(0, 1), XZ = physical(0, 2);
    const double YX = physical(1, 0), YY = physical(1, 1), YZ = physical(1, 2);
    const double ZX = physical(2, 0), ZY = physical(2, 1), ZZ = physical(2, 2);

    UnitalBlock out;
    out(0, 0) = h_x({XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ});
    out(0, 1) = h_y({XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ});
    out(0, 2) = h_z({XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ});
    out(1, 0) = h_x({YX, YZ, YY, XX, XZ, XY, ZX, ZZ, ZY});
    out(1, 1) = h_y({YZ, YY, YX, XZ, XY, XX, ZZ, ZY, ZX});
    out(1, 2) = h_z({YY, YX, YZ, XY, XX, XZ, ZY, ZX, ZZ});
    out(2, 0) = h_x({ZX, ZZ, ZY, YX, YZ, YY, XX, XZ, XY});
    out(2, 1) = h_y({ZZ, ZY, ZX, YZ, YY, YX, XZ, XY, XX});
    out(2, 2) = h_z({ZY, ZX, ZZ, YY, YX, YZ, XY, XX, XZ});
    return out;
}

UnitalBlock process_matrix_expanded(const UnitalBlock& physical) {
    const double XX = physical(0, 0), XY = physical(0, 1), XZ = physical(0, 2);
    const double YX = physical(1, 0), YY = physical(1, 1), YZ = physical(1, 2);
    const double ZX = physical(2, 0), ZY = physical(2, 1), ZZ = physical(2, 2);
    auto sq = [](double w) { return w * w; };
    auto p4 = [](double w) { return w * w * w * w; };

    UnitalBlock out;
    out(0, 0) = -XX / 4 * (p4(XX) + 5 * sq(XY) * sq(XZ) - 5 * sq(YY) - 5 * sq(ZZ) + 5 * sq(YX) * sq(ZX) +
                           5 * sq(YY) * sq(ZZ)) -
                2.5 * (XY * YX * YZ * ZY * ZZ + XZ * YY * YZ * ZX * ZY);
    out(0, 1) = -XY / 4 * (p4(XY) + 5 * sq(XX) * sq(XZ) - 5 * sq(YZ) - 5 * sq(ZX) + 5 * sq(YY) * sq(ZY) +
                           5 * sq(YZ) * sq(ZX)) -
                2.5 * (XX * YX * YZ * ZY * ZZ + XZ * YX * YY * ZX * ZZ);
    out(0, 2) = -XZ / 4 * (p4(XZ) + 5 * sq(XX) * sq(XY) - 5 * sq(YX) + 5 * sq(YX) * sq(ZY) + 5 * sq(YZ) * sq(ZZ) -
                           5 * sq(ZY)) -
                2.5 * (XX * YY * YZ * ZX * ZY + XY * YX * YY * ZX * ZZ);
    out(1, 0) = -YX / 4 * (p4(YX) + 5 * sq(XX) * sq(ZX) - 5 * sq(XZ) + 5 * sq(XZ) * sq(ZY) + 5 * sq(YY) * sq(YZ) -
                           5 * sq(ZY)) -
                2.5 * (XX * XY * YZ * ZY * ZZ + XY * XZ * YY * ZX * ZZ);
    out(1, 1) = -YY / 4 * (p4(YY) + 5 * sq(XX) * sq(ZZ) - 5 * sq(XX) + 5 * sq(XY) * sq(ZY) + 5 * sq(YX) * sq(YZ) -
                           5 * sq(ZZ)) -
                2.5 * (XX * XZ * YZ * ZX * ZY + XY * XZ * YX * ZX * ZZ);
    out(1, 2) = -YZ / 4 * (p4(YZ) + 5 * sq(XY) * sq(ZX) - 5 * sq(XY) + 5 * sq(XZ) * sq(ZZ) + 5 * sq(YX) * sq(YY) -
                           5 * sq(ZX)) -
                2.5 * (XX * XZ * YY * ZX * ZY + XX * XY * YX * ZY * ZZ);
    out(2, 0) = -ZX / 4 * (p4(ZX) + 5 * sq(XX) * sq(YX) - 5 * sq(XY) + 5 * sq(XY) * sq(YZ) - 5 * sq(YZ) +
                           5 * sq(ZY) * sq(ZZ)) -
                2.5 * (XX * XZ * YY * YZ * ZY + XY * XZ * YX * YY * ZZ);
    out(2, 1) = -ZY / 4 * (p4(ZY) + 5 * sq(XY) * sq(YY) - 5 * sq(XZ) + 5 * sq(XZ) * sq(YX) - 5 * sq(YX) +
                           5 * sq(ZX) * sq(ZZ)) -
                2.5 * (XX * XY * YX * YZ * ZZ + XX * XZ * YY * YZ * ZX);
    out(2, 2) = -ZZ / 4 * (p4(ZZ) + 5 * sq(XX) * sq(YY) - 5 * sq(XX) + 5 * sq(XZ) * sq(YZ) - 5 * sq(YY) +
                           5 * sq(ZX) * sq(ZY)) -
                2.5 * (XX * XY * YX * YZ * ZY + XY * XZ * YX * YY * ZX);
    return out;
}

double g_component(double x, double y, double z) {
    return -x / 4.0 * (x * x * x * x - 5 * y * y - 5 * z * z + 5 * y * y * z * z);
}

double h_component(double w) { return -(w * w * w * w * w) / 4.0; }

ReducedChannel apply_reduced(const ReducedChannel& m) {
    return ReducedChannel{g_component(m.x, m.y, m.z), g_component(m.y, m.z, m.x), g_component(m.z, m.x, m.y),
                          h_component(m.u), h_component(m.v)};
}

Eigen::Vector2d reduced_two_var(double x, double y) {
    const double f1 = -x / 4.0 * (x * x * x * x + 5 * y * y * y * y - 10 * y * y);
    const double f2 = -y / 4.0 * (y * y * y * y + 5 * x * x * y * y - 5 * x * x - 5 * y * y);
    return {f1, f2};
}

}  // namespace fiveq
