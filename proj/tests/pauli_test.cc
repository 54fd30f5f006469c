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

#include <gtest/gtest.h>

#include <random>

#include "ghzlhv/errors.h"
#include "matrix_oracle.h"

using namespace ghzlhv;
using ghzlhv::testing::approx_equal;
using ghzlhv::testing::pauli_matrix;

namespace {

/// Every product on n qubits with every phase exponent.
std::vector<PauliProduct> all_products(size_t n, bool all_phases) {
    std::vector<PauliProduct> out;
    uint64_t m = uint64_t{1} << n;
    for (uint64_t x = 0; x < m; x++) {
        for (uint64_t z = 0; z < m; z++) {
            for (uint8_t ph = 0; ph < 4; ph += all_phases ? 1 : 2) {
                out.emplace_back(n, x, z, ph);
            }
        }
    }
    return out;
}

}  // namespace

TEST(pauli, parse_signed_product) {
    auto p = parse_pauli("-XYY", 3);
    EXPECT_EQ(p.x_mask(), 0b111u);
    EXPECT_EQ(p.z_mask(), 0b110u);
    EXPECT_EQ(p.phase_exp(), 2);
    EXPECT_EQ(p.letter(0), Letter::X);
    EXPECT_EQ(p.letter(2), Letter::Y);
}

TEST(pauli, parse_identity_and_zz) {
    auto id = parse_pauli("III", 3);
    EXPECT_TRUE(id.is_identity_letters());
    EXPECT_EQ(id.phase_exp(), 0);

    auto zz = parse_pauli("ZZI", 3);
    EXPECT_EQ(zz.x_mask(), 0u);
    EXPECT_EQ(zz.z_mask(), 0b011u);
    EXPECT_EQ(zz.phase_exp(), 0);

    EXPECT_EQ(parse_pauli("+xyz"), parse_pauli("XYZ", 3));
}

TEST(pauli, parse_errors_name_position) {
    try {
        parse_pauli("XQZ", 3);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 1u);
    }
    try {
        parse_pauli("-XQ", 2);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_pauli("XX", 3), ParseError);
    EXPECT_THROW(parse_pauli("XXXX", 3), ParseError);
    EXPECT_THROW(parse_pauli("iXX", 2), ParseError);
}

TEST(pauli, single_qubit_table_matches_matrices) {
    // X*Y = iZ
    auto xy = parse_pauli("X") * parse_pauli("Y");
    EXPECT_EQ(xy.letter(0), Letter::Z);
    EXPECT_EQ(xy.phase_exp(), 1);
    for (const auto &p : all_products(1, true)) {
        for (const auto &q : all_products(1, true)) {
            EXPECT_TRUE(approx_equal(pauli_matrix(p * q), pauli_matrix(p) * pauli_matrix(q)));
        }
    }
}

TEST(pauli, two_qubit_products_match_matrices_exhaustively) {
    auto all = all_products(2, true);
    for (const auto &p : all) {
        for (const auto &q : all) {
            ASSERT_TRUE(approx_equal(pauli_matrix(p * q), pauli_matrix(p) * pauli_matrix(q)));
        }
    }
}

TEST(pauli, mermin_generators_multiply_to_plus_xxx) {
    auto g1 = parse_pauli("-XYY");
    auto g2 = parse_pauli("-YXY");
    auto g3 = parse_pauli("-YYX");
    auto g12 = g1 * g2;
    EXPECT_EQ(g12.unsigned_letters(), parse_pauli("ZZI").unsigned_letters());
    EXPECT_EQ(g12 * g3, parse_pauli("+XXX"));
    EXPECT_EQ(g1 * PauliProduct::identity(3), g1);
}

TEST(pauli, multiplication_is_associative) {
    auto all = all_products(2, true);
    for (const auto &p : all) {
        for (const auto &q : all) {
            for (const auto &r : all) {
                ASSERT_EQ((p * q) * r, p * (q * r));
            }
        }
    }
}

TEST(pauli, square_is_scalar) {
    for (size_t n = 1; n <= 3; n++) {
        for (const auto &p : all_products(n, true)) {
            auto sq = p * p;
            EXPECT_TRUE(sq.is_identity_letters());
            EXPECT_EQ(sq.phase_exp() % 2, 0);
            if (p.is_hermitian()) {
                EXPECT_EQ(sq.phase_exp(), 0);
            }
        }
    }
}

TEST(pauli, commutes_matches_matrix_commutator) {
    auto all = all_products(2, false);
    for (const auto &p : all) {
        for (const auto &q : all) {
            auto a = pauli_matrix(p);
            auto b = pauli_matrix(q);
            bool matrix_commute = approx_equal(a * b, b * a);
            ASSERT_EQ(commutes(p, q), matrix_commute) << p.str() << " " << q.str();
            ASSERT_EQ(commutes(p, q), p * q == q * p);
        }
    }
    EXPECT_TRUE(commutes(parse_pauli("-XYY"), parse_pauli("-YXY")));
    EXPECT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
}

TEST(pauli, dimension_errors) {
    EXPECT_THROW(multiply(parse_pauli("XX"), parse_pauli("XXX")), DimensionError);
    EXPECT_THROW(commutes(parse_pauli("XX"), parse_pauli("X")), DimensionError);
    EXPECT_THROW(PauliProduct(2, 0b100, 0, 0), DimensionError);
}

TEST(pauli, support) {
    EXPECT_EQ(support(parse_pauli("IYZ")), (std::vector<size_t>{1, 2}));
    EXPECT_TRUE(support(parse_pauli("III")).empty());
    EXPECT_EQ(support(parse_pauli("XIX")), (std::vector<size_t>{0, 2}));
}

TEST(pauli, format) {
    EXPECT_EQ(format_pauli(parse_pauli("-YYX")), "-YYX");
    EXPECT_EQ(format_pauli(parse_pauli("+XXX")), "XXX");
    auto iz = parse_pauli("X") * parse_pauli("Y");
    EXPECT_THROW(format_pauli(iz), NonHermitianError);
}

TEST(pauli, format_parse_round_trip) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 64;
        uint64_t m = low_bits(n);
        PauliProduct p(n, rng() & m, rng() & m, (rng() & 1) * 2);
        ASSERT_EQ(parse_pauli(p.str(), n), p);
    }
}

TEST(pauli, wide_register_edges) {
    auto p = PauliProduct(64, ~uint64_t{0}, 0, 0);
    EXPECT_EQ(p.count(Letter::X), 64);
    EXPECT_EQ((p * p).phase_exp(), 0);
    EXPECT_THROW(PauliProduct(65, 0, 0, 0), DimensionError);
}
