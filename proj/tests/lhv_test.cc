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

#include <gtest/gtest.h>

#include <cctype>
#include <random>
#include <string>

#include "ghzlhv/errors.h"
#include "ghzlhv/stabilizer.h"

using namespace ghzlhv;

namespace {

// Parses the rendered form "1", "-R2R3", "iR1R2", "-iR1" back into an entry.
LhvEntry entry(const std::string &text) {
    LhvEntry e;
    size_t i = 0;
    if (i < text.size() && text[i] == '-') {
        e.phase_exp = 2;
        i++;
    }
    if (i < text.size() && text[i] == 'i') {
        e.phase_exp = (e.phase_exp + 1) & 3;
        i++;
    }
    if (text.substr(i) == "1") {
        return e;
    }
    while (i < text.size()) {
        EXPECT_EQ(text[i], 'R') << text;
        i++;
        size_t j = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            j = j * 10 + static_cast<size_t>(text[i] - '0');
            i++;
        }
        e.r_mask ^= uint64_t{1} << (j - 1);
    }
    return e;
}

LhvTable table(const std::vector<std::array<const char *, 3>> &rows) {
    std::vector<LhvTable::Row> out;
    for (const auto &r : rows) {
        out.push_back({entry(r[0]), entry(r[1]), entry(r[2])});
    }
    return LhvTable(out);
}

std::string dump(const LhvTable &t) {
    std::string s;
    for (const auto &row : t.rows()) {
        s += row[0].str() + " " + row[1].str() + " " + row[2].str() + "\n";
    }
    return s;
}

// The pattern for an n-qubit GHZ table, built directly from masks.
LhvTable ghz_pattern(size_t n) {
    uint64_t rest = low_bits(n) & ~uint64_t{1};
    std::vector<LhvTable::Row> rows;
    rows.push_back({LhvEntry{0, rest}, LhvEntry{1, rest | 1}, LhvEntry{0, 1}});
    for (size_t j = 1; j < n; j++) {
        uint64_t rj = uint64_t{1} << j;
        rows.push_back({LhvEntry{0, rj}, LhvEntry{1, rj | 1}, LhvEntry{0, 1}});
    }
    return LhvTable(rows);
}

Circuit random_circuit(std::mt19937_64 &rng, size_t n, size_t len) {
    Circuit c;
    for (size_t k = 0; k < len; k++) {
        if (n == 1 || rng() % 2 == 0) {
            c.push_back(Gate::h(rng() % n));
        } else {
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            c.push_back(Gate::cnot(a, b));
        }
    }
    return c;
}

}  // namespace

TEST(lhv, entry_text_round_trip) {
    for (const char *s : {"1", "-1", "i", "-i", "R1", "-R2R3", "iR1R2", "-iR1", "iR1R2R3"}) {
        EXPECT_EQ(entry(s).str(), s);
    }
}

TEST(lhv, entry_products_from_table_caption) {
    // (iR1R2)(iR1R3) = -R2R3
    EXPECT_EQ(entry("iR1R2") * entry("iR1R3"), entry("-R2R3"));
    // (iR1R2)(R1) = iR2
    EXPECT_EQ(entry("iR1R2") * entry("R1"), entry("iR2"));
    // (R2R3)(iR1R2)(iR1R3) = -1
    EXPECT_EQ(entry("R2R3") * entry("iR1R2") * entry("iR1R3"), entry("-1"));
}

TEST(lhv, entry_eval_and_discard_i) {
    HiddenSample s = HiddenSample::from_values({-1, 1, -1});
    EXPECT_EQ(s.value(0), -1);
    EXPECT_EQ(s.value(1), 1);
    EXPECT_EQ((LhvValue{-1, false}), entry("R1R2").eval(s));
    EXPECT_EQ((LhvValue{1, true}), entry("iR1R3").eval(s));
    EXPECT_EQ((LhvValue{-1, true}), entry("-iR1R3R2").eval(HiddenSample(3, 0)));
    EXPECT_EQ(discard_i({1, true}), 1);
    EXPECT_EQ(discard_i({-1, true}), -1);
    EXPECT_EQ(discard_i({-1, false}), -1);
    EXPECT_EQ(entry_eval(entry("1"), s), (LhvValue{1, false}));
}

TEST(lhv, initial_table_n3) {
    EXPECT_EQ(initial_table(3), table({{"R1", "-iR1", "1"}, {"R2", "iR2", "1"}, {"R3", "iR3", "1"}}));
    EXPECT_TRUE(initial_table(3).phase_condition());
    EXPECT_EQ(initial_table(3).row_xyz_phase(0), -1);
    EXPECT_EQ(initial_table(3).row_xyz_phase(1), 1);
}

TEST(lhv, ghz_circuit_steps_reproduce_reference_tables) {
    std::vector<LhvTable> expected = {
        table({{"R1", "-iR1", "1"}, {"R2", "iR2", "1"}, {"R3", "iR3", "1"}}),
        table({{"1", "iR1", "R1"}, {"R2", "iR2", "1"}, {"R3", "iR3", "1"}}),
        table({{"R2", "iR1R2", "R1"}, {"R2", "iR1R2", "R1"}, {"R3", "iR3", "1"}}),
        table({{"R2R3", "iR1R2R3", "R1"}, {"R2", "iR1R2", "R1"}, {"R3", "iR1R3", "R1"}}),
    };
    std::vector<LhvTable> got = {initial_table(3)};
    evolve(3, ghz_circuit(3), [&](size_t, const Gate &, const LhvTable &t) { got.push_back(t); });
    ASSERT_EQ(got.size(), expected.size());
    for (size_t k = 0; k < got.size(); k++) {
        EXPECT_EQ(got[k], expected[k]) << "step " << k << "\n" << dump(got[k]);
    }
}

TEST(lhv, individual_gate_rules) {
    auto t0 = initial_table(3);
    auto t1 = t0.apply_hadamard(0);
    EXPECT_EQ(t1, table({{"1", "iR1", "R1"}, {"R2", "iR2", "1"}, {"R3", "iR3", "1"}}));
    auto t2 = t1.apply_cnot(0, 1);
    EXPECT_EQ(t2, table({{"R2", "iR1R2", "R1"}, {"R2", "iR1R2", "R1"}, {"R3", "iR3", "1"}}));
    EXPECT_EQ(t2.apply_cnot(0, 2), ghz_table(3));
}

TEST(lhv, ghz_table_n2) {
    EXPECT_EQ(ghz_table(2), table({{"R2", "iR1R2", "R1"}, {"R2", "iR1R2", "R1"}}));
}

TEST(lhv, ghz_table_matches_pattern) {
    for (size_t n = 2; n <= 16; n++) {
        EXPECT_EQ(ghz_table(n), ghz_pattern(n)) << "n=" << n;
    }
}

TEST(lhv, ghz_table_row_text) {
    auto t = ghz_table(5);
    EXPECT_EQ(t.at(0, Basis::X).str(), "R2R3R4R5");
    EXPECT_EQ(t.at(0, Basis::Y).str(), "iR1R2R3R4R5");
    EXPECT_EQ(t.at(3, Basis::Y).str(), "iR1R4");
    EXPECT_EQ(t.at(4, Basis::Z).str(), "R1");
}

TEST(lhv, exchange_symmetry_of_first_two_rows) {
    // Substituting R2' = R2...Rn swaps the roles of qubits 1 and 2.
    for (size_t n = 2; n <= 10; n++) {
        auto t = ghz_table(n);
        uint64_t others = low_bits(n) & ~uint64_t{3};
        auto subst = [&](LhvEntry e) {
            if (e.r_mask & 2) {
                e.r_mask ^= others;
            }
            return e;
        };
        for (size_t b = 0; b < 3; b++) {
            EXPECT_EQ(subst(t.row(0)[b]), t.row(1)[b]) << "n=" << n;
            EXPECT_EQ(subst(t.row(1)[b]), t.row(0)[b]) << "n=" << n;
        }
    }
}

TEST(lhv, predictions_from_table_caption) {
    auto t = ghz_table(3);
    auto xyy = predict_joint(t, parse_pauli("XYY", 3));
    EXPECT_EQ(xyy.kind, Prediction::DefiniteMinus);
    EXPECT_EQ(xyy.sign, -1);
    EXPECT_EQ(xyy.r_mask, 0u);

    auto iyz = predict_joint(t, parse_pauli("IYZ", 3));
    EXPECT_EQ(iyz.kind, Prediction::Random);
    EXPECT_EQ(iyz.r_mask, 0b010u);
    EXPECT_EQ(joint_entry(t, parse_pauli("IYZ", 3)), entry("iR2"));

    EXPECT_EQ(predict_joint(t, parse_pauli("-XYY", 3)).kind, Prediction::DefinitePlus);
    EXPECT_EQ(predict_joint(t, parse_pauli("III", 3)).kind, Prediction::DefinitePlus);
    for (size_t n = 2; n <= 8; n++) {
        PauliProduct xs(n, low_bits(n), 0, 0);
        EXPECT_EQ(predict_joint(ghz_table(n), xs).kind, Prediction::DefinitePlus) << n;
    }
}

TEST(lhv, predict_joint_dimension_mismatch) {
    EXPECT_THROW(predict_joint(ghz_table(3), parse_pauli("XX", 2)), DimensionError);
}

TEST(lhv, local_outcomes) {
    auto t = ghz_table(3);
    HiddenSample plus(3, 0);
    EXPECT_EQ(local_outcome(t, 0, Basis::X, plus), 1);
    EXPECT_EQ(local_outcome(t, 1, Basis::Y, plus), 1);
    EXPECT_EQ(local_outcome(t, 2, Basis::Z, HiddenSample(3, 0b001)), -1);
    EXPECT_EQ(local_outcome(t, 0, Basis::X, HiddenSample(3, 0b010)), -1);
    EXPECT_THROW(local_outcome(t, 3, Basis::X, plus), DimensionError);
}

TEST(lhv, completeness_against_closed_form) {
    for (size_t n = 2; n <= 8; n++) {
        auto t = ghz_table(n);
        uint64_t m = uint64_t{1} << n;
        for (uint64_t x = 0; x < m; x++) {
            for (uint64_t z = 0; z < m; z++) {
                for (uint8_t ph : {0, 2}) {
                    PauliProduct p(n, x, z, ph);
                    auto got = predict_joint(t, p);
                    ASSERT_EQ(got.kind, ghz_classify(p)) << p.str();
                    if (got.kind != Prediction::Random) {
                        ASSERT_EQ(got.r_mask, 0u);
                        ASSERT_EQ(got.sign, expectation(got.kind));
                    }
                }
            }
        }
    }
}

TEST(lhv, random_predictions_are_exactly_balanced) {
    for (size_t n = 2; n <= 6; n++) {
        auto t = ghz_table(n);
        uint64_t m = uint64_t{1} << n;
        for (uint64_t x = 0; x < m; x++) {
            for (uint64_t z = 0; z < m; z++) {
                PauliProduct p(n, x, z, 0);
                auto e = joint_entry(t, p);
                if (e.r_mask == 0) {
                    continue;
                }
                uint64_t plus = 0;
                for (uint64_t s = 0; s < m; s++) {
                    plus += discard_i(e.eval(HiddenSample(n, s))) > 0;
                }
                ASSERT_EQ(plus, m / 2) << p.str();
            }
        }
    }
}

TEST(lhv, imaginary_products_are_random) {
    for (size_t n = 2; n <= 7; n++) {
        auto t = ghz_table(n);
        uint64_t m = uint64_t{1} << n;
        for (uint64_t x = 0; x < m; x++) {
            for (uint64_t z = 0; z < m; z++) {
                auto e = joint_entry(t, PauliProduct(n, x, z, 0));
                if (!e.is_real()) {
                    ASSERT_NE(e.r_mask, 0u);
                }
            }
        }
    }
}

TEST(lhv, gates_are_involutions_and_local) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 2 + rng() % 6;
        LhvTable t = initial_table(n);
        for (const auto &g : random_circuit(rng, n, rng() % 12)) {
            try {
                t = t.apply(g);
            } catch (const CnotConsistencyError &) {
            }
        }
        size_t q = rng() % n;
        auto h = t.apply_hadamard(q);
        EXPECT_EQ(h.apply_hadamard(q), t);
        for (size_t r = 0; r < n; r++) {
            if (r != q) {
                EXPECT_EQ(h.row(r), t.row(r));
            }
        }
        size_t c = rng() % n;
        size_t tg = (c + 1 + rng() % (n - 1)) % n;
        if (t.row_xyz_phase(c) != 0 && t.row_xyz_phase(c) == t.row_xyz_phase(tg)) {
            auto cx = t.apply_cnot(c, tg);
            EXPECT_EQ(cx.apply_cnot(c, tg), t);
            for (size_t r = 0; r < n; r++) {
                if (r != c && r != tg) {
                    EXPECT_EQ(cx.row(r), t.row(r));
                }
            }
        }
    }
}

TEST(lhv, cnot_precondition_failure) {
    // Qubit 1 starts at XYZ = -i, qubit 2 at +i.
    EXPECT_THROW(initial_table(3).apply_cnot(0, 1), CnotConsistencyError);
    EXPECT_NO_THROW(initial_table(3).apply_cnot(1, 2));
    try {
        initial_table(2).apply_cnot(0, 1);
        FAIL();
    } catch (const CnotConsistencyError &e) {
        EXPECT_EQ(e.control(), 0u);
        EXPECT_EQ(e.target(), 1u);
    }
    EXPECT_THROW(initial_table(2).apply_cnot(0, 0), std::exception);
    EXPECT_THROW(initial_table(2).apply_hadamard(2), std::exception);
}

TEST(lhv, phase_condition_survives_random_circuits) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 8;
        LhvTable t = initial_table(n);
        for (const auto &g : random_circuit(rng, n, rng() % 50)) {
            try {
                t = t.apply(g);
            } catch (const CnotConsistencyError &) {
                continue;
            }
            ASSERT_TRUE(t.phase_condition());
        }
    }
}

TEST(lhv, accepted_circuits_agree_with_tableau) {
    // Whenever every C-NOT is accepted, the evolved table predicts like the
    // tableau of the same circuit.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; trial++) {
        size_t n = 1 + rng() % 5;
        LhvTable t = initial_table(n);
        Circuit kept;
        for (const auto &g : random_circuit(rng, n, rng() % 20)) {
            try {
                t = t.apply(g);
                kept.push_back(g);
            } catch (const CnotConsistencyError &) {
            }
        }
        auto st = tableau_from_circuit(n, kept);
        uint64_t m = uint64_t{1} << n;
        for (uint64_t x = 0; x < m; x++) {
            for (uint64_t z = 0; z < m; z++) {
                PauliProduct p(n, x, z, 0);
                ASSERT_EQ(predict_joint(t, p).kind, st.classify(p)) << p.str();
            }
        }
    }
}
