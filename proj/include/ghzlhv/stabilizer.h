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

#ifndef GHZLHV_STABILIZER_H
#define GHZLHV_STABILIZER_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ghzlhv/circuit.h"
#include "ghzlhv/pauli.h"

namespace ghzlhv {

/// Outcome class of measuring a Hermitian Pauli product on a stabilizer state.
enum class Prediction : uint8_t { DefinitePlus, DefiniteMinus, Random };

const char *prediction_name(Prediction p);

/// +1, -1 or 0.
int expectation(Prediction p);

/// n independent, pairwise commuting Hermitian generators of a pure stabilizer state.
///
/// Membership queries go through a reduced row-echelon basis of the generator
/// letter masks over GF(2), built once at construction. Signs are recovered
/// afterwards by multiplying the selected generators with exact phases.
class StabilizerTableau {
   public:
    /// Throws std::invalid_argument if generators are non-Hermitian, fail to
    /// commute, are dependent, or are not exactly num_qubits in number.
    explicit StabilizerTableau(std::vector<PauliProduct> generators);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliProduct> &generators() const {
        return generators_;
    }

    Prediction classify(const PauliProduct &p) const;

    /// The generator subset (bit k = generator k) whose letters XOR to p's
    /// letters, or nothing if p's letters are not in the group.
    bool decompose(const PauliProduct &p, uint64_t &combo) const;

   private:
    struct Row {
        uint64_t x;
        uint64_t z;
        uint64_t combo;
        int pivot;  // 0..63 in x, 64..127 in z
    };

    size_t n_;
    std::vector<PauliProduct> generators_;
    std::vector<Row> basis_;
};

/// Closed-form membership test for the n-qubit GHZ stabilizer group: pure I/Z
/// products with an even number of Z, and all-X/Y products with an even number
/// of Y carrying sign (-1)^(#Y/2).
Prediction ghz_classify(const PauliProduct &p);

/// Conjugates p through one gate: p -> G p G^dagger.
PauliProduct conjugate(const PauliProduct &p, const Gate &gate);

/// Runs |0...0> (generators Z_1..Z_n) through the circuit.
StabilizerTableau tableau_from_circuit(size_t num_qubits, const Circuit &circuit);

/// The textbook GHZ generators X^n, Z_1 Z_2, Z_1 Z_3, ..., Z_1 Z_n.
StabilizerTableau ghz_tableau(size_t num_qubits);

inline Prediction tableau_classify(const StabilizerTableau &t, const PauliProduct &p) {
    return t.classify(p);
}

/// Exact quantum joint distribution of commuting products on disjoint supports.
///
/// Outcome vectors are encoded as bitmasks: bit k set means product k returned
/// -1. The distribution is uniform over `allowed`.
struct JointDistribution {
    size_t num_products = 0;
    std::vector<uint32_t> allowed;  // sorted

    double probability(uint32_t outcome) const;
    bool operator==(const JointDistribution &) const = default;
};

/// Throws DimensionError on size mismatch or overlapping supports, and
/// NonHermitianError for imaginary-phase inputs. At most 20 products.
JointDistribution joint_distribution(const StabilizerTableau &t, const std::vector<PauliProduct> &products);

}  // namespace ghzlhv

#endif
