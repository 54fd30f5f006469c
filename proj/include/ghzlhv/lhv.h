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

#ifndef GHZLHV_LHV_H
#define GHZLHV_LHV_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ghzlhv/circuit.h"
#include "ghzlhv/pauli.h"
#include "ghzlhv/stabilizer.h"

namespace ghzlhv {

/// A draw of the hidden variables R_1..R_n, each +1 or -1.
///
/// Stored as a mask: bit j set means R_{j+1} = -1.
class HiddenSample {
   public:
    HiddenSample() = default;
    HiddenSample(size_t num_vars, uint64_t minus_mask);
    static HiddenSample from_values(const std::vector<int> &values);

    size_t size() const {
        return n_;
    }
    uint64_t minus_mask() const {
        return minus_;
    }
    int value(size_t j) const {
        return (minus_ >> j) & 1 ? -1 : 1;
    }
    bool operator==(const HiddenSample &) const = default;

   private:
    size_t n_ = 0;
    uint64_t minus_ = 0;
};

/// Value of an entry at a sample: sign * (imaginary ? i : 1).
struct LhvValue {
    int sign = 1;
    bool imaginary = false;
    bool operator==(const LhvValue &) const = default;
};

/// Strips one factor of i: +i -> +1, -i -> -1, reals unchanged.
inline int discard_i(LhvValue v) {
    return v.sign;
}

/// One table cell: i^phase_exp times the product of R_j over r_mask.
struct LhvEntry {
    uint8_t phase_exp = 0;
    uint64_t r_mask = 0;

    static LhvEntry one() {
        return {};
    }
    static LhvEntry var(size_t j, uint8_t phase = 0) {
        return {static_cast<uint8_t>(phase & 3), uint64_t{1} << j};
    }

    bool is_real() const {
        return (phase_exp & 1) == 0;
    }
    LhvValue eval(const HiddenSample &s) const;

    /// Text form: "1", "-R2R3", "iR1R2", "-iR1".
    std::string str() const;

    bool operator==(const LhvEntry &) const = default;
};

/// Products of entries multiply phases and cancel repeated variables (R_j^2 = 1).
inline LhvEntry entry_mul(LhvEntry a, LhvEntry b) {
    return {static_cast<uint8_t>((a.phase_exp + b.phase_exp) & 3), a.r_mask ^ b.r_mask};
}

inline LhvEntry operator*(LhvEntry a, LhvEntry b) {
    return entry_mul(a, b);
}

inline LhvValue entry_eval(const LhvEntry &e, const HiddenSample &s) {
    return e.eval(s);
}

enum class Basis : uint8_t { X = 0, Y = 1, Z = 2 };

/// Maps X/Y/Z letters to their column. Letter::I has no column.
Basis basis_of(Letter l);

/// Prediction of a joint measurement, with the random part exposed.
///
/// Random outcomes are sign * prod_{j in r_mask} R_j; definite ones have an
/// empty mask and kind DefinitePlus/DefiniteMinus.
struct LhvPrediction {
    Prediction kind = Prediction::DefinitePlus;
    int sign = 1;
    uint64_t r_mask = 0;
    bool operator==(const LhvPrediction &) const = default;
};

/// n rows (qubits) x 3 columns (X, Y, Z) of entries.
class LhvTable {
   public:
    using Row = std::array<LhvEntry, 3>;

    LhvTable() = default;
    explicit LhvTable(std::vector<Row> rows);

    size_t num_qubits() const {
        return rows_.size();
    }
    const Row &row(size_t q) const {
        return rows_.at(q);
    }
    const LhvEntry &at(size_t q, Basis b) const {
        return rows_.at(q)[static_cast<size_t>(b)];
    }
    const std::vector<Row> &rows() const {
        return rows_;
    }

    /// X and Z real, Y imaginary, and X*Y*Z = +-i with no leftover variables.
    bool row_phase_condition(size_t q) const;
    /// +1 if X*Y*Z = i, -1 if -i, 0 if the row breaks the phase condition.
    int row_xyz_phase(size_t q) const;
    bool phase_condition() const;

    LhvTable apply_hadamard(size_t q) const;
    /// Throws CnotConsistencyError unless both rows satisfy the phase
    /// condition with the same XYZ phase.
    LhvTable apply_cnot(size_t control, size_t target) const;
    LhvTable apply(const Gate &gate) const;

    bool operator==(const LhvTable &) const = default;

   private:
    std::vector<Row> rows_;
};

/// Table for |0...0>: X column R_j, Y column iR_j (-iR_1 for qubit 1), Z column 1.
LhvTable initial_table(size_t num_qubits);

/// Evolves initial_table(n) through the circuit. `on_step` (if set) sees the
/// table after every gate, with the gate index.
LhvTable evolve(
    size_t num_qubits,
    const Circuit &circuit,
    const std::function<void(size_t, const Gate &, const LhvTable &)> &on_step = {});

/// initial_table(n) through H(1), CNOT(1,2), ..., CNOT(1,n).
LhvTable ghz_table(size_t num_qubits);

/// Multiplies the entries picked out by p's letters, folds in p's sign and
/// discards a leftover factor of i. Throws NonHermitianError / DimensionError.
LhvPrediction predict_joint(const LhvTable &t, const PauliProduct &p);

/// Product of the selected entries times p's sign, before discarding i.
LhvEntry joint_entry(const LhvTable &t, const PauliProduct &p);

/// Raw local outcome of measuring `basis` on qubit q.
int local_outcome(const LhvTable &t, size_t q, Basis basis, const HiddenSample &s);

}  // namespace ghzlhv

#endif
