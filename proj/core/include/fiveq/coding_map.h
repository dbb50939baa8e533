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

#ifndef FIVEQ_CODING_MAP_H
#define FIVEQ_CODING_MAP_H

#include <array>
#include <map>

#include <Eigen/Dense>

#include "fiveq/channel.h"
#include "fiveq/code_spec.h"
#include "fiveq/pauli.h"
#include "fiveq/rational.h"

namespace fiveq {

/// Pauli expansion with exact coefficients. Keys are phase-free Hermitian strings.
using PauliExpansion = std::map<PauliString, Rational>;

/// Encoder and decoder operators of a code, expanded over Pauli strings.
///
///   E_s = sum_mu alpha[s][mu] (mu_1/2) (x) ... (x) (mu_n/2)
///   D_s = sum_nu beta[s][nu]  nu_1 (x) ... (x) nu_n
///
/// With this normalization the logical channel is
/// G_{s s'} = sum_nu sum_mu beta[s][nu] alpha[s'][mu] prod_i N_{nu_i mu_i}.
struct AlphaBetaTables {
    std::size_t num_qubits = 0;
    std::array<PauliExpansion, 4> alpha;
    std::array<PauliExpansion, 4> beta;
};

/// Expands E_s = (1/2|S|) sum_k S_k s_bar and D_s = (1/|S|) sum_{j,k} R_j^dagger S_k s_bar R_j.
/// The conjugation by R_j is folded into commutation signs,
/// R_j^dagger S_k s_bar R_j = eta(S_k, R_j) eta(R_j, s_bar) S_k s_bar.
/// Throws InvalidCodeError when `spec` fails validation.
AlphaBetaTables derive_alpha_beta(const CodeSpec& spec);

/// Full 4x4 logical transfer matrix from the alpha/beta double sum, with no
/// simplification. Throws ConsistencyError if the I row and column do not come
/// out as (1, 0, 0, 0).
TransferMatrix logical_channel_symbolic(const AlphaBetaTables& tables, const UnitalBlock& physical);

/// Lower-right block of logical_channel_symbolic.
UnitalBlock process_matrix_oracle(const AlphaBetaTables& tables, const UnitalBlock& physical);

/// Closed-form five-qubit logical block assembled from h_x, h_y, h_z with the
/// argument orderings of each entry.
UnitalBlock process_matrix_explicit(const UnitalBlock& physical);

/// The same nine entries written out as fully expanded polynomials in N_ij.
UnitalBlock process_matrix_expanded(const UnitalBlock& physical);

namespace polynomials {

/// Arguments are (x1, x2, x3, y1, y2, y3, z1, z2, z3).
using Args = std::array<double, 9>;

double h_x(const Args& a);
double h_y(const Args& a);
double h_z(const Args& a);

}  // namespace polynomials

/// g(x, y, z) = -x/4 (x^4 - 5y^2 - 5z^2 + 5y^2 z^2)
double g_component(double x, double y, double z);
/// h(w) = -w^5/4
double h_component(double w);

/// (x, y, z, u, v) -> (g(x,y,z), g(y,z,x), g(z,x,y), h(u), h(v)).
ReducedChannel apply_reduced(const ReducedChannel& m);

/// The map restricted to y = z: (x, y) -> (g(x,y,y), g(y,y,x)).
Eigen::Vector2d reduced_two_var(double x, double y);

}  // namespace fiveq

#endif
