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

#ifndef FIVEQ_PAULI_H
#define FIVEQ_PAULI_H

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace fiveq {

inline constexpr std::size_t kMaxQubits = 10;

/// Single-qubit Pauli labels in Pauli-Liouville index order.
inline constexpr std::array<char, 4> kPauliLabels{'I', 'X', 'Y', 'Z'};

/// Index of 'I', 'X', 'Y', 'Z' in kPauliLabels. Throws ParseError otherwise.
std::size_t pauli_index(char label);

/// A signed n-qubit Pauli operator i^phase * P_1 (x) ... (x) P_n in symplectic form.
///
/// Each qubit carries one bit of X part and one bit of Z part, with (1,1) meaning
/// the Hermitian Y (not XZ). The global phase is an exponent of i kept mod 4, so
/// products never touch floating point.
class PauliString {
   public:
    PauliString() = default;

    /// Identity on `num_qubits` qubits.
    explicit PauliString(std::size_t num_qubits);
    PauliString(std::size_t num_qubits, std::uint16_t x_bits, std::uint16_t z_bits, std::uint8_t phase = 0);

    /// Parses strings like "XZZXI" or "-iY": an optional prefix in {+, -, +i, -i}
    /// followed by one letter from {I, X, Y, Z} per qubit. Qubit 0 is leftmost.
    static PauliString parse(std::string_view text);

    /// `pauli` on `qubit`, identity elsewhere.
    static PauliString single(std::size_t num_qubits, std::size_t qubit, char pauli);

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint16_t x_bits() const { return x_bits_; }
    std::uint16_t z_bits() const { return z_bits_; }
    std::uint8_t phase() const { return phase_; }

    char label_at(std::size_t qubit) const;
    std::size_t weight() const;
    bool is_identity_up_to_phase() const { return (x_bits_ | z_bits_) == 0; }

    /// True when the phase is +1 or -1, i.e. the operator is Hermitian.
    bool has_real_phase() const { return phase_ % 2 == 0; }
    /// +1 or -1 for a Hermitian string; throws std::logic_error otherwise.
    int sign() const;

    PauliString with_phase(std::uint8_t phase) const;
    PauliString dagger() const;

    /// Letters only, e.g. "XZZXI".
    std::string letters() const;
    /// Prefix plus letters; the +1 phase prints without a prefix.
    std::string str() const;

    friend auto operator<=>(const PauliString&, const PauliString&) = default;

   private:
    std::uint8_t num_qubits_ = 0;
    std::uint8_t phase_ = 0;
    std::uint16_t x_bits_ = 0;
    std::uint16_t z_bits_ = 0;
};

PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

bool commutes(const PauliString& p, const PauliString& q);

/// +1 if p and q commute, -1 if they anticommute.
int commutation_sign(const PauliString& p, const PauliString& q);

/// Dense 2^n x 2^n matrix; qubit 0 is the most significant tensor factor.
Eigen::MatrixXcd to_dense(const PauliString& p);

}  // namespace fiveq

#endif
