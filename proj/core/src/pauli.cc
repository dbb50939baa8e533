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

#include "fiveq/pauli.h"

#include <bit>
#include <complex>

#include "fiveq/errors.h"

namespace fiveq {

namespace {

void check_qubit_count(std::size_t n) {
    if (n > kMaxQubits) {
        throw CapacityError("PauliString supports at most " + std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

// Exponent of i picked up by P(x1,z1) * P(x2,z2) on one qubit, with Y = (1,1).
int product_phase(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

}  // namespace

std::size_t pauli_index(char label) {
    switch (label) {
        case 'I':
            return 0;
        case 'X':
            return 1;
        case 'Y':
            return 2;
        case 'Z':
            return 3;
        default:
            throw ParseError(std::string("not a Pauli label: '") + label + "'");
    }
}

PauliString::PauliString(std::size_t num_qubits) : PauliString(num_qubits, 0, 0, 0) {}

PauliString::PauliString(std::size_t num_qubits, std::uint16_t x_bits, std::uint16_t z_bits, std::uint8_t phase)
    : num_qubits_(static_cast<std::uint8_t>(num_qubits)), phase_(phase & 3), x_bits_(x_bits), z_bits_(z_bits) {
    check_qubit_count(num_qubits);
    const auto mask = static_cast<std::uint16_t>((1u << num_qubits) - 1u);
    if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
        throw DimensionError("bit vectors have bits set beyond qubit count");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::uint8_t phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        ++pos;
        if (pos < text.size() && text[pos] == 'i') {
            phase += 1;
            ++pos;
        }
    }
    std::string_view letters = text.substr(pos);
    if (letters.empty()) {
        throw ParseError("empty Pauli string: '" + std::string(text) + "'");
    }
    check_qubit_count(letters.size());
    std::uint16_t xs = 0;
    std::uint16_t zs = 0;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        const std::size_t idx = pauli_index(letters[q]);
        if (idx == 1 || idx == 2) {
            xs |= static_cast<std::uint16_t>(1u << q);
        }
        if (idx == 2 || idx == 3) {
            zs |= static_cast<std::uint16_t>(1u << q);
        }
    }
    return PauliString(letters.size(), xs, zs, phase);
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, char pauli) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit index out of range");
    }
    std::string letters(num_qubits, 'I');
    letters[qubit] = pauli;
    return parse(letters);
}

char PauliString::label_at(std::size_t qubit) const {
    const int x = (x_bits_ >> qubit) & 1;
    const int z = (z_bits_ >> qubit) & 1;
    static constexpr std::array<char, 4> kBySymplectic{'I', 'X', 'Z', 'Y'};
    return kBySymplectic[x | (z << 1)];
}

std::size_t PauliString::weight() const { return static_cast<std::size_t>(std::popcount(static_cast<unsigned>(x_bits_ | z_bits_))); }

int PauliString::sign() const {
    if (!has_real_phase()) {
        throw std::logic_error("PauliString " + str() + " has imaginary phase");
    }
    return phase_ == 0 ? 1 : -1;
}

PauliString PauliString::with_phase(std::uint8_t phase) const { return PauliString(num_qubits_, x_bits_, z_bits_, phase); }

PauliString PauliString::dagger() const {
    return with_phase(static_cast<std::uint8_t>((4 - phase_) & 3));
}

std::string PauliString::letters() const {
    std::string out(num_qubits_, 'I');
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        out[q] = label_at(q);
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr std::array<const char*, 4> kPrefix{"", "+i", "-", "-i"};
    return kPrefix[phase_] + letters();
}

PauliString multiply(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("cannot multiply Pauli strings on " + std::to_string(p.num_qubits()) + " and " +
                             std::to_string(q.num_qubits()) + " qubits");
    }
    int phase = p.phase() + q.phase();
    for (std::size_t k = 0; k < p.num_qubits(); ++k) {
        phase += product_phase((p.x_bits() >> k) & 1, (p.z_bits() >> k) & 1, (q.x_bits() >> k) & 1,
                               (q.z_bits() >> k) & 1);
    }
    return PauliString(p.num_qubits(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(),
                       static_cast<std::uint8_t>(((phase % 4) + 4) % 4));
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("cannot compare Pauli strings of different lengths");
    }
    const unsigned overlap = static_cast<unsigned>((p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits()));
    return std::popcount(overlap) % 2 == 0;
}

int commutation_sign(const PauliString& p, const PauliString& q) { return commutes(p, q) ? 1 : -1; }

Eigen::MatrixXcd to_dense(const PauliString& p) {
    check_qubit_count(p.num_qubits());
    using C = std::complex<double>;
    const std::array<Eigen::Matrix2cd, 4> single = [] {
        std::array<Eigen::Matrix2cd, 4> m;
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, C(0, -1), C(0, 1), 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    static constexpr std::array<C, 4> kPhase{C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Constant(1, 1, kPhase[p.phase()]);
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        const Eigen::Matrix2cd& f = single[pauli_index(p.label_at(q))];
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = out(r, c) * f;
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace fiveq
