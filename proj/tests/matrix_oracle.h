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

// Dense-matrix reference for tests: Pauli products as 2^n x 2^n complex
// matrices and small state vectors. Qubit 0 is the leftmost Kronecker factor.

#ifndef GHZLHV_TESTS_MATRIX_ORACLE_H
#define GHZLHV_TESTS_MATRIX_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <unsupported/Eigen/KroneckerProduct>

#include "ghzlhv/circuit.h"
#include "ghzlhv/pauli.h"

namespace ghzlhv::testing {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Mat letter_matrix(Letter l) {
    Mat m(2, 2);
    switch (l) {
        case Letter::I:
            m << 1, 0, 0, 1;
            break;
        case Letter::X:
            m << 0, 1, 1, 0;
            break;
        case Letter::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case Letter::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

inline cd i_pow(int k) {
    static const cd table[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return table[((k % 4) + 4) % 4];
}

inline Mat pauli_matrix(const PauliProduct &p) {
    Mat acc = Mat::Identity(1, 1);
    for (size_t q = 0; q < p.num_qubits(); q++) {
        Mat next = Eigen::kroneckerProduct(acc, letter_matrix(p.letter(q))).eval();
        acc = next;
    }
    return acc * i_pow(p.phase_exp());
}

inline bool approx_equal(const Mat &a, const Mat &b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() < 1e-9;
}

/// Basis index bit for qubit q (qubit 0 is the most significant bit).
inline size_t qubit_bit(size_t n, size_t q) {
    return size_t{1} << (n - 1 - q);
}

inline Vec apply_gate(const Vec &psi, size_t n, const Gate &g) {
    Vec out = Vec::Zero(psi.size());
    if (g.kind == Gate::Kind::H) {
        size_t b = qubit_bit(n, g.target);
        double s = 1.0 / std::sqrt(2.0);
        for (Eigen::Index i = 0; i < psi.size(); i++) {
            size_t idx = static_cast<size_t>(i);
            if (idx & b) {
                continue;
            }
            cd a0 = psi(static_cast<Eigen::Index>(idx));
            cd a1 = psi(static_cast<Eigen::Index>(idx | b));
            out(static_cast<Eigen::Index>(idx)) = s * (a0 + a1);
            out(static_cast<Eigen::Index>(idx | b)) = s * (a0 - a1);
        }
        return out;
    }
    size_t cb = qubit_bit(n, g.control);
    size_t tb = qubit_bit(n, g.target);
    for (Eigen::Index i = 0; i < psi.size(); i++) {
        size_t idx = static_cast<size_t>(i);
        size_t dst = (idx & cb) ? idx ^ tb : idx;
        out(static_cast<Eigen::Index>(dst)) = psi(i);
    }
    return out;
}

inline Vec run_circuit(size_t n, const Circuit &c) {
    Vec psi = Vec::Zero(static_cast<Eigen::Index>(size_t{1} << n));
    psi(0) = 1;
    for (const auto &g : c) {
        psi = apply_gate(psi, n, g);
    }
    return psi;
}

/// <psi|P|psi>, real for Hermitian P.
inline double expectation_value(const Vec &psi, const PauliProduct &p) {
    return (psi.adjoint() * pauli_matrix(p) * psi)(0, 0).real();
}

}  // namespace ghzlhv::testing

#endif
