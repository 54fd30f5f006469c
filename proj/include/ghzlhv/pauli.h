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

#ifndef GHZLHV_PAULI_H
#define GHZLHV_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ghzlhv {

/// Largest supported register. Masks are single 64-bit words.
inline constexpr size_t kMaxQubits = 64;

/// Mask with the low `n` bits set.
constexpr uint64_t low_bits(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

inline int popcount(uint64_t v) {
    return __builtin_popcountll(v);
}

inline bool parity(uint64_t v) {
    return __builtin_parityll(v);
}

/// Single-qubit Pauli letter. The numeric value packs (x bit, z bit) as x | z << 1.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter letter);

/// Parses one of IXYZ (case-insensitive). Returns false on any other character.
bool letter_from_char(char c, Letter &out);

/// An n-qubit Pauli product i^phase_exp * P_1 P_2 ... P_n in symplectic form.
///
/// Qubit q (0-based internally, 1-based in every textual form) is bit q of
/// both masks, so the leftmost character of "XYZ" is qubit 0 / the lowest bit.
/// Letters are Hermitian (Y is the usual Pauli Y, not XZ), so a product with
/// even phase_exp is an observable with sign (-1)^(phase_exp/2).
class PauliProduct {
   public:
    PauliProduct() = default;
    PauliProduct(size_t num_qubits, uint64_t x_mask, uint64_t z_mask, uint8_t phase_exp = 0);

    static PauliProduct identity(size_t num_qubits);
    /// Product with `letter` on `qubit` and identity elsewhere.
    static PauliProduct single(size_t num_qubits, size_t qubit, Letter letter);
    /// Builds a product from per-qubit letters, qubit 0 first.
    static PauliProduct from_letters(const std::vector<Letter> &letters, uint8_t phase_exp = 0);

    size_t num_qubits() const {
        return n_;
    }
    uint64_t x_mask() const {
        return x_;
    }
    uint64_t z_mask() const {
        return z_;
    }
    uint8_t phase_exp() const {
        return phase_;
    }

    Letter letter(size_t qubit) const;
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool is_identity_letters() const {
        return (x_ | z_) == 0;
    }
    /// +1 or -1; only meaningful when Hermitian.
    int sign() const {
        return phase_ == 2 ? -1 : 1;
    }
    /// Same letters, phase multiplied by i^k.
    PauliProduct times_i_pow(int k) const;
    PauliProduct operator-() const {
        return times_i_pow(2);
    }
    /// Same letters with phase 0.
    PauliProduct unsigned_letters() const {
        return PauliProduct(n_, x_, z_, 0);
    }
    bool same_letters(const PauliProduct &other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
    }

    int count(Letter letter) const;

    bool operator==(const PauliProduct &other) const = default;

    /// Canonical text: "-" prefix for sign -1, none for +1. Throws NonHermitianError for i/-i phases.
    std::string str() const;

   private:
    size_t n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    uint8_t phase_ = 0;
};

/// Parses `sign? [IXYZixyz]{n}`. Throws ParseError naming the offending position.
PauliProduct parse_pauli(std::string_view text, size_t num_qubits);

/// Parses with the qubit count taken from the string length.
PauliProduct parse_pauli(std::string_view text);

/// Exact operator product p * q. Throws DimensionError on mismatched sizes.
PauliProduct multiply(const PauliProduct &p, const PauliProduct &q);

inline PauliProduct operator*(const PauliProduct &p, const PauliProduct &q) {
    return multiply(p, q);
}

bool commutes(const PauliProduct &p, const PauliProduct &q);

/// 0-based indices of the non-identity positions.
std::vector<size_t> support(const PauliProduct &p);

inline uint64_t support_mask(const PauliProduct &p) {
    return p.x_mask() | p.z_mask();
}

inline std::string format_pauli(const PauliProduct &p) {
    return p.str();
}

}  // namespace ghzlhv

#endif
