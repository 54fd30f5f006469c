// Copyright 2026 The ghzlhv Authors
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

#include "ghzlhv/pauli.h"

#include "ghzlhv/errors.h"

namespace ghzlhv {

char letter_char(Letter letter) {
    switch (letter) {
        case Letter::I:
            return 'I';
        case Letter::X:
            return 'X';
        case Letter::Y:
            return 'Y';
        case Letter::Z:
            return 'Z';
    }
    return '?';
}

bool letter_from_char(char c, Letter &out) {
    switch (c) {
        case 'I':
        case 'i':
            out = Letter::I;
            return true;
        case 'X':
        case 'x':
            out = Letter::X;
            return true;
        case 'Y':
        case 'y':
            out = Letter::Y;
            return true;
        case 'Z':
        case 'z':
            out = Letter::Z;
            return true;
        default:
            return false;
    }
}

PauliProduct::PauliProduct(size_t num_qubits, uint64_t x_mask, uint64_t z_mask, uint8_t phase_exp)
    : n_(num_qubits), x_(x_mask), z_(z_mask), phase_(phase_exp & 3) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
    uint64_t outside = ~low_bits(num_qubits);
    if ((x_mask | z_mask) & outside) {
        throw DimensionError("Pauli mask has bits beyond qubit " + std::to_string(num_qubits));
    }
}

PauliProduct PauliProduct::identity(size_t num_qubits) {
    return PauliProduct(num_qubits, 0, 0, 0);
}

PauliProduct PauliProduct::single(size_t num_qubits, size_t qubit, Letter letter) {
    if (qubit >= num_qubits) {
        throw DimensionError("qubit " + std::to_string(qubit + 1) + " out of range");
    }
    auto bits = static_cast<uint8_t>(letter);
    uint64_t x = (bits & 1) ? uint64_t{1} << qubit : 0;
    uint64_t z = (bits & 2) ? uint64_t{1} << qubit : 0;
    return PauliProduct(num_qubits, x, z, 0);
}

PauliProduct PauliProduct::from_letters(const std::vector<Letter> &letters, uint8_t phase_exp) {
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < letters.size() && q < kMaxQubits; q++) {
        auto bits = static_cast<uint8_t>(letters[q]);
        x |= uint64_t{bits & 1u} << q;
        z |= uint64_t{(bits >> 1) & 1u} << q;
    }
    return PauliProduct(letters.size(), x, z, phase_exp);
}

Letter PauliProduct::letter(size_t qubit) const {
    auto x = (x_ >> qubit) & 1;
    auto z = (z_ >> qubit) & 1;
    return static_cast<Letter>(x | (z << 1));
}

PauliProduct PauliProduct::times_i_pow(int k) const {
    return PauliProduct(n_, x_, z_, static_cast<uint8_t>((phase_ + (k % 4) + 4) & 3));
}

int PauliProduct::count(Letter letter) const {
    uint64_t all = low_bits(n_);
    switch (letter) {
        case Letter::I:
            return popcount(~(x_ | z_) & all);
        case Letter::X:
            return popcount(x_ & ~z_);
        case Letter::Y:
            return popcount(x_ & z_);
        case Letter::Z:
            return popcount(z_ & ~x_);
    }
    return 0;
}

std::string PauliProduct::str() const {
    if (!is_hermitian()) {
        throw NonHermitianError("cannot format non-Hermitian product (phase i^" + std::to_string(phase_) + ")");
    }
    std::string out;
    out.reserve(n_ + 1);
    if (phase_ == 2) {
        out.push_back('-');
    }
    for (size_t q = 0; q < n_; q++) {
        out.push_back(letter_char(letter(q)));
    }
    return out;
}

PauliProduct parse_pauli(std::string_view text, size_t num_qubits) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        pos = 1;
    } else if (!text.empty() && (text[0] == 'i' || text[0] == 'j') && text.size() == num_qubits + 1) {
        throw ParseError("imaginary prefix not allowed on an observable", 0);
    }
    if (text.size() - pos != num_qubits) {
        throw ParseError(
            "expected " + std::to_string(num_qubits) + " Pauli letters, got " + std::to_string(text.size() - pos),
            text.size());
    }
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw DimensionError("qubit count must be in 1.." + std::to_string(kMaxQubits));
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        Letter letter;
        if (!letter_from_char(text[pos + q], letter)) {
            throw ParseError(std::string("bad Pauli letter '") + text[pos + q] + "'", pos + q);
        }
        auto bits = static_cast<uint8_t>(letter);
        x |= uint64_t{bits & 1u} << q;
        z |= uint64_t{(bits >> 1) & 1u} << q;
    }
    return PauliProduct(num_qubits, x, z, phase);
}

PauliProduct parse_pauli(std::string_view text) {
    size_t letters = text.size();
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        letters--;
    }
    return parse_pauli(text, letters);
}

PauliProduct multiply(const PauliProduct &p, const PauliProduct &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError(
            "cannot multiply " + std::to_string(p.num_qubits()) + "-qubit and " + std::to_string(q.num_qubits()) +
            "-qubit products");
    }
    // Y = i X Z, so a product with masks (x, z) equals i^(#Y) X^x Z^z. Moving
    // Z^z1 past X^x2 costs (-1)^|z1 & x2|.
    uint64_t x = p.x_mask() ^ q.x_mask();
    uint64_t z = p.z_mask() ^ q.z_mask();
    int phase = p.phase_exp() + q.phase_exp();
    phase += popcount(p.x_mask() & p.z_mask());
    phase += popcount(q.x_mask() & q.z_mask());
    phase += 2 * popcount(p.z_mask() & q.x_mask());
    phase -= popcount(x & z);
    return PauliProduct(p.num_qubits(), x, z, static_cast<uint8_t>(((phase % 4) + 4) % 4));
}

bool commutes(const PauliProduct &p, const PauliProduct &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("commutation check on products of different size");
    }
    return !parity((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask()));
}

std::vector<size_t> support(const PauliProduct &p) {
    std::vector<size_t> out;
    uint64_t m = support_mask(p);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if ((m >> q) & 1) {
            out.push_back(q);
        }
    }
    return out;
}

}  // namespace ghzlhv
