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

#include "ghzlhv/stabilizer.h"

#include <algorithm>
#include <stdexcept>

#include "ghzlhv/errors.h"

namespace ghzlhv {

const char *prediction_name(Prediction p) {
    switch (p) {
        case Prediction::DefinitePlus:
            return "DefinitePlus";
        case Prediction::DefiniteMinus:
            return "DefiniteMinus";
        case Prediction::Random:
            return "Random";
    }
    return "?";
}

int expectation(Prediction p) {
    switch (p) {
        case Prediction::DefinitePlus:
            return 1;
        case Prediction::DefiniteMinus:
            return -1;
        case Prediction::Random:
            return 0;
    }
    return 0;
}

namespace {

int lowest_bit(uint64_t x, uint64_t z) {
    if (x) {
        return __builtin_ctzll(x);
    }
    if (z) {
        return 64 + __builtin_ctzll(z);
    }
    return -1;
}

bool has_bit(uint64_t x, uint64_t z, int col) {
    return col < 64 ? (x >> col) & 1 : (z >> (col - 64)) & 1;
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::vector<PauliProduct> generators)
    : n_(generators.empty() ? 0 : generators.front().num_qubits()), generators_(std::move(generators)) {
    if (n_ == 0 || generators_.size() != n_) {
        throw std::invalid_argument("a stabilizer tableau needs exactly n generators on n qubits");
    }
    for (size_t i = 0; i < generators_.size(); i++) {
        const auto &g = generators_[i];
        if (g.num_qubits() != n_) {
            throw DimensionError("generator " + std::to_string(i + 1) + " has the wrong qubit count");
        }
        if (!g.is_hermitian()) {
            throw NonHermitianError("generator " + std::to_string(i + 1) + " is not Hermitian");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(g, generators_[j])) {
                throw std::invalid_argument(
                    "generators " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " anticommute");
            }
        }
        Row row{g.x_mask(), g.z_mask(), uint64_t{1} << i, -1};
        for (const auto &b : basis_) {
            if (has_bit(row.x, row.z, b.pivot)) {
                row.x ^= b.x;
                row.z ^= b.z;
                row.combo ^= b.combo;
            }
        }
        row.pivot = lowest_bit(row.x, row.z);
        if (row.pivot < 0) {
            throw std::invalid_argument("generator " + std::to_string(i + 1) + " is dependent on earlier generators");
        }
        basis_.push_back(row);
    }
}

bool StabilizerTableau::decompose(const PauliProduct &p, uint64_t &combo) const {
    if (p.num_qubits() != n_) {
        throw DimensionError("product size does not match tableau");
    }
    uint64_t x = p.x_mask();
    uint64_t z = p.z_mask();
    combo = 0;
    for (const auto &b : basis_) {
        if (has_bit(x, z, b.pivot)) {
            x ^= b.x;
            z ^= b.z;
            combo ^= b.combo;
        }
    }
    return x == 0 && z == 0;
}

Prediction StabilizerTableau::classify(const PauliProduct &p) const {
    if (!p.is_hermitian()) {
        throw NonHermitianError("cannot classify a non-Hermitian product");
    }
    uint64_t combo;
    if (!decompose(p, combo)) {
        return Prediction::Random;
    }
    PauliProduct acc = PauliProduct::identity(n_);
    for (size_t k = 0; k < n_; k++) {
        if ((combo >> k) & 1) {
            acc = acc * generators_[k];
        }
    }
    if (!acc.same_letters(p)) {
        throw std::logic_error("stabilizer decomposition produced the wrong letters");
    }
    return acc.phase_exp() == p.phase_exp() ? Prediction::DefinitePlus : Prediction::DefiniteMinus;
}

Prediction ghz_classify(const PauliProduct &p) {
    if (!p.is_hermitian()) {
        throw NonHermitianError("cannot classify a non-Hermitian product");
    }
    uint64_t all = low_bits(p.num_qubits());
    int intrinsic;
    if (p.x_mask() == 0) {
        if (popcount(p.z_mask()) % 2 != 0) {
            return Prediction::Random;
        }
        intrinsic = 1;
    } else if (p.x_mask() == all) {
        int ys = popcount(p.z_mask());
        if (ys % 2 != 0) {
            return Prediction::Random;
        }
        intrinsic = ys % 4 == 0 ? 1 : -1;
    } else {
        return Prediction::Random;
    }
    return p.sign() == intrinsic ? Prediction::DefinitePlus : Prediction::DefiniteMinus;
}

PauliProduct conjugate(const PauliProduct &p, const Gate &gate) {
    size_t n = p.num_qubits();
    if (gate.kind == Gate::Kind::H) {
        size_t q = gate.target;
        if (q >= n) {
            throw DimensionError("H target out of range");
        }
        uint64_t bit = uint64_t{1} << q;
        uint64_t x = p.x_mask();
        uint64_t z = p.z_mask();
        bool xb = x & bit;
        bool zb = z & bit;
        // X <-> Z, Y -> -Y
        x = (x & ~bit) | (zb ? bit : 0);
        z = (z & ~bit) | (xb ? bit : 0);
        return PauliProduct(n, x, z, static_cast<uint8_t>(p.phase_exp() + (xb && zb ? 2 : 0)));
    }
    size_t c = gate.control;
    size_t t = gate.target;
    if (c >= n || t >= n || c == t) {
        throw DimensionError("bad CNOT indices");
    }
    auto single = [&](size_t q, Letter l) { return PauliProduct::single(n, q, l); };
    // Images of the single-qubit letters on control and target.
    auto control_image = [&](Letter l) -> PauliProduct {
        switch (l) {
            case Letter::X:
                return single(c, Letter::X) * single(t, Letter::X);
            case Letter::Y:
                return single(c, Letter::Y) * single(t, Letter::X);
            default:
                return single(c, l);
        }
    };
    auto target_image = [&](Letter l) -> PauliProduct {
        switch (l) {
            case Letter::Y:
                return single(c, Letter::Z) * single(t, Letter::Y);
            case Letter::Z:
                return single(c, Letter::Z) * single(t, Letter::Z);
            default:
                return single(t, l);
        }
    };
    uint64_t keep = ~((uint64_t{1} << c) | (uint64_t{1} << t));
    PauliProduct rest(n, p.x_mask() & keep, p.z_mask() & keep, p.phase_exp());
    return rest * control_image(p.letter(c)) * target_image(p.letter(t));
}

StabilizerTableau tableau_from_circuit(size_t num_qubits, const Circuit &circuit) {
    validate_circuit(circuit, num_qubits);
    std::vector<PauliProduct> rows;
    rows.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        rows.push_back(PauliProduct::single(num_qubits, q, Letter::Z));
    }
    for (const auto &gate : circuit) {
        for (auto &row : rows) {
            row = conjugate(row, gate);
        }
    }
    return StabilizerTableau(std::move(rows));
}

StabilizerTableau ghz_tableau(size_t num_qubits) {
    std::vector<PauliProduct> rows;
    rows.push_back(PauliProduct(num_qubits, low_bits(num_qubits), 0, 0));
    for (size_t j = 1; j < num_qubits; j++) {
        rows.push_back(PauliProduct(num_qubits, 0, 1 | (uint64_t{1} << j), 0));
    }
    return StabilizerTableau(std::move(rows));
}

double JointDistribution::probability(uint32_t outcome) const {
    if (allowed.empty()) {
        return 0;
    }
    bool hit = std::binary_search(allowed.begin(), allowed.end(), outcome);
    return hit ? 1.0 / static_cast<double>(allowed.size()) : 0.0;
}

JointDistribution joint_distribution(const StabilizerTableau &t, const std::vector<PauliProduct> &products) {
    size_t l = products.size();
    if (l > 20) {
        throw std::invalid_argument("joint_distribution supports at most 20 products");
    }
    uint64_t seen = 0;
    for (size_t k = 0; k < l; k++) {
        const auto &p = products[k];
        if (p.num_qubits() != t.num_qubits()) {
            throw DimensionError("product " + std::to_string(k + 1) + " has the wrong qubit count");
        }
        if (!p.is_hermitian()) {
            throw NonHermitianError("product " + std::to_string(k + 1) + " is not Hermitian");
        }
        if (support_mask(p) & seen) {
            throw DimensionError("product " + std::to_string(k + 1) + " overlaps an earlier product's support");
        }
        seen |= support_mask(p);
    }

    // Parity constraints: subset S -> required parity of the -1 outcomes in S.
    std::vector<std::pair<uint32_t, bool>> constraints;
    uint32_t subsets = uint32_t{1} << l;
    for (uint32_t s = 1; s < subsets; s++) {
        PauliProduct acc = PauliProduct::identity(t.num_qubits());
        for (size_t k = 0; k < l; k++) {
            if ((s >> k) & 1) {
                acc = acc * products[k];
            }
        }
        Prediction pred = t.classify(acc);
        if (pred != Prediction::Random) {
            constraints.emplace_back(s, pred == Prediction::DefiniteMinus);
        }
    }

    JointDistribution out;
    out.num_products = l;
    for (uint32_t v = 0; v < subsets; v++) {
        bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const auto &c) {
            return parity(v & c.first) == c.second;
        });
        if (ok) {
            out.allowed.push_back(v);
        }
    }
    return out;
}

}  // namespace ghzlhv
