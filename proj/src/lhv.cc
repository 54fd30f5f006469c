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

#include "ghzlhv/lhv.h"

#include "ghzlhv/errors.h"

namespace ghzlhv {

HiddenSample::HiddenSample(size_t num_vars, uint64_t minus_mask) : n_(num_vars), minus_(minus_mask) {
    if (num_vars > kMaxQubits) {
        throw DimensionError("too many hidden variables");
    }
    if (minus_mask & ~low_bits(num_vars)) {
        throw DimensionError("hidden sample mask has bits beyond its size");
    }
}

HiddenSample HiddenSample::from_values(const std::vector<int> &values) {
    uint64_t m = 0;
    for (size_t j = 0; j < values.size(); j++) {
        if (values[j] == -1) {
            m |= uint64_t{1} << j;
        } else if (values[j] != 1) {
            throw std::invalid_argument("hidden variable values must be +1 or -1");
        }
    }
    return HiddenSample(values.size(), m);
}

LhvValue LhvEntry::eval(const HiddenSample &s) const {
    int sign = (phase_exp & 2) ? -1 : 1;
    if (parity(r_mask & s.minus_mask())) {
        sign = -sign;
    }
    return {sign, (phase_exp & 1) != 0};
}

std::string LhvEntry::str() const {
    std::string out;
    if (phase_exp & 2) {
        out += "-";
    }
    if (phase_exp & 1) {
        out += "i";
    }
    if (r_mask == 0) {
        out += (phase_exp & 1) ? "" : "1";
        return out;
    }
    for (size_t j = 0; j < 64; j++) {
        if ((r_mask >> j) & 1) {
            out += "R" + std::to_string(j + 1);
        }
    }
    return out;
}

Basis basis_of(Letter l) {
    switch (l) {
        case Letter::X:
            return Basis::X;
        case Letter::Y:
            return Basis::Y;
        case Letter::Z:
            return Basis::Z;
        case Letter::I:
            break;
    }
    throw std::invalid_argument("identity has no measurement basis");
}

LhvTable::LhvTable(std::vector<Row> rows) : rows_(std::move(rows)) {
    if (rows_.size() > kMaxQubits) {
        throw DimensionError("too many qubits");
    }
    for (const auto &r : rows_) {
        for (const auto &e : r) {
            if (e.r_mask & ~low_bits(rows_.size())) {
                throw DimensionError("table entry refers to a variable beyond R_n");
            }
        }
    }
}

int LhvTable::row_xyz_phase(size_t q) const {
    const Row &r = row(q);
    const LhvEntry &x = r[0];
    const LhvEntry &y = r[1];
    const LhvEntry &z = r[2];
    if (!x.is_real() || y.is_real() || !z.is_real()) {
        return 0;
    }
    LhvEntry prod = x * y * z;
    if (prod.r_mask != 0) {
        return 0;
    }
    return prod.phase_exp == 1 ? 1 : -1;
}

bool LhvTable::row_phase_condition(size_t q) const {
    return row_xyz_phase(q) != 0;
}

bool LhvTable::phase_condition() const {
    for (size_t q = 0; q < rows_.size(); q++) {
        if (!row_phase_condition(q)) {
            return false;
        }
    }
    return true;
}

LhvTable LhvTable::apply_hadamard(size_t q) const {
    if (q >= rows_.size()) {
        throw DimensionError("Hadamard target " + std::to_string(q + 1) + " out of range");
    }
    LhvTable out = *this;
    const Row &in = rows_[q];
    Row &r = out.rows_[q];
    r[0] = in[2];
    r[1] = LhvEntry{static_cast<uint8_t>((in[1].phase_exp + 2) & 3), in[1].r_mask};
    r[2] = in[0];
    return out;
}

LhvTable LhvTable::apply_cnot(size_t c, size_t t) const {
    if (c >= rows_.size() || t >= rows_.size()) {
        throw DimensionError("C-NOT qubit out of range");
    }
    if (c == t) {
        throw DimensionError("C-NOT control equals target");
    }
    int pc = row_xyz_phase(c);
    int pt = row_xyz_phase(t);
    if (pc == 0) {
        throw CnotConsistencyError(c, t, "control row is not of the form XYZ = +-i");
    }
    if (pt == 0) {
        throw CnotConsistencyError(c, t, "target row is not of the form XYZ = +-i");
    }
    if (pc != pt) {
        throw CnotConsistencyError(
            c, t,
            std::string("control has XYZ = ") + (pc > 0 ? "i" : "-i") + " but target has XYZ = " +
                (pt > 0 ? "i" : "-i"));
    }
    LhvTable out = *this;
    const Row &ci = rows_[c];
    const Row &ti = rows_[t];
    Row &cf = out.rows_[c];
    Row &tf = out.rows_[t];
    cf[0] = ci[0] * ti[0];
    cf[1] = ci[1] * ti[0];
    cf[2] = ci[2];
    tf[0] = ti[0];
    tf[1] = ci[2] * ti[1];
    tf[2] = ci[2] * ti[2];
    if (!out.row_phase_condition(c) || !out.row_phase_condition(t)) {
        throw std::logic_error("C-NOT update broke the XYZ phase condition");
    }
    return out;
}

LhvTable LhvTable::apply(const Gate &gate) const {
    return gate.kind == Gate::Kind::H ? apply_hadamard(gate.target) : apply_cnot(gate.control, gate.target);
}

LhvTable initial_table(size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw DimensionError("initial table needs 1.." + std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<LhvTable::Row> rows;
    rows.reserve(num_qubits);
    for (size_t j = 0; j < num_qubits; j++) {
        uint8_t y_phase = j == 0 ? 3 : 1;
        rows.push_back({LhvEntry::var(j), LhvEntry::var(j, y_phase), LhvEntry::one()});
    }
    return LhvTable(std::move(rows));
}

LhvTable evolve(
    size_t num_qubits,
    const Circuit &circuit,
    const std::function<void(size_t, const Gate &, const LhvTable &)> &on_step) {
    validate_circuit(circuit, num_qubits);
    LhvTable t = initial_table(num_qubits);
    for (size_t k = 0; k < circuit.size(); k++) {
        t = t.apply(circuit[k]);
        if (on_step) {
            on_step(k, circuit[k], t);
        }
    }
    return t;
}

LhvTable ghz_table(size_t num_qubits) {
    if (num_qubits < 2) {
        throw DimensionError("GHZ table needs at least 2 qubits");
    }
    return evolve(num_qubits, ghz_circuit(num_qubits));
}

LhvEntry joint_entry(const LhvTable &t, const PauliProduct &p) {
    if (p.num_qubits() != t.num_qubits()) {
        throw DimensionError("product size does not match table");
    }
    LhvEntry acc{p.phase_exp(), 0};
    for (size_t q = 0; q < p.num_qubits(); q++) {
        Letter l = p.letter(q);
        if (l != Letter::I) {
            acc = acc * t.at(q, basis_of(l));
        }
    }
    return acc;
}

LhvPrediction predict_joint(const LhvTable &t, const PauliProduct &p) {
    if (!p.is_hermitian()) {
        throw NonHermitianError("cannot predict a non-Hermitian product");
    }
    LhvEntry e = joint_entry(t, p);
    // Dividing by i turns i -> 1 and -i -> -1.
    uint8_t real_phase = (e.phase_exp & 1) ? static_cast<uint8_t>((e.phase_exp + 3) & 3) : e.phase_exp;
    int sign = real_phase == 2 ? -1 : 1;
    LhvPrediction out;
    out.sign = sign;
    out.r_mask = e.r_mask;
    if (e.r_mask != 0) {
        out.kind = Prediction::Random;
    } else {
        out.kind = sign > 0 ? Prediction::DefinitePlus : Prediction::DefiniteMinus;
    }
    return out;
}

int local_outcome(const LhvTable &t, size_t q, Basis basis, const HiddenSample &s) {
    if (q >= t.num_qubits()) {
        throw DimensionError("qubit " + std::to_string(q + 1) + " out of range");
    }
    return discard_i(t.at(q, basis).eval(s));
}

}  // namespace ghzlhv
