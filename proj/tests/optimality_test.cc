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


#include "ghzlhv/optimality.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ghzlhv/errors.h"
#include "matrix_oracle.h"

using namespace ghzlhv;

TEST(optimality, three_qubit_operators) {
    auto ops = build_subset_operators(1, 1, 1);
    EXPECT_EQ(ops.a.str(), "XII");
    EXPECT_EQ(ops.b.str(), "YII");
    EXPECT_EQ(ops.c.str(), "IXI");
    EXPECT_EQ(ops.d.str(), "IYI");
    EXPECT_EQ(ops.e.str(), "IIX");
    EXPECT_EQ(ops.f.str(), "IIY");
    auto terms = ops.mermin_terms();
    EXPECT_EQ(terms[0].str(), "XXX");
    EXPECT_EQ(terms[1].str(), "-XYY");
    EXPECT_EQ(terms[2].str(), "-YXY");
    EXPECT_EQ(terms[3].str(), "-YYX");
}

TEST(optimality, four_qubit_operators) {
    auto ops = build_subset_operators(2, 1, 1);
    EXPECT_EQ(ops.num_qubits(), 4u);
    EXPECT_EQ(ops.a.str(), "XXII");
    EXPECT_EQ(ops.b.str(), "XYII");
    EXPECT_EQ(ops.c.str(), "IIXI");
    EXPECT_EQ(ops.f.str(), "IIIY");
    EXPECT_THROW(build_subset_operators(0, 1, 1), std::invalid_argument);
}

TEST(optimality, block_operators_need_a_partition) {
    EXPECT_THROW(build_block_operators(3, {{{0}, {1}, {}}}), std::invalid_argument);
    EXPECT_THROW(build_block_operators(3, {{{0}, {1}, {1, 2}}}), std::invalid_argument);
    EXPECT_THROW(build_block_operators(4, {{{0}, {1}, {2}}}), std::invalid_argument);
    auto ops = build_block_operators(5, {{{0, 3}, {1, 4}, {2}}});
    EXPECT_EQ(ops.a.str(), "XIIXI");
    EXPECT_EQ(ops.b.str(), "XIIYI");
    EXPECT_EQ(ops.d.str(), "IXIIY");
}

TEST(optimality, mermin_terms_are_plus_stabilizers) {
    for (size_t n = 3; n <= 8; n++) {
        for (size_t k = 1; k + 2 <= n; k++) {
            for (size_t l = 1; k + l + 1 <= n; l++) {
                auto ops = build_subset_operators(k, l, n - k - l);
                for (const auto &p : ops.mermin_terms()) {
                    EXPECT_EQ(ghz_classify(p), Prediction::DefinitePlus) << p.str();
                }
            }
        }
    }
}

TEST(optimality, mermin_lhv_values) {
    EXPECT_EQ(mermin_lhv_values(), (std::set<int>{-2, 2}));
    EXPECT_EQ(mermin_value(1, 1, 1, 1, 1, 1), -2);
}

TEST(optimality, mermin_quantum_value_is_four) {
    EXPECT_EQ(mermin_quantum_value(build_subset_operators(1, 1, 1)), 4);
    EXPECT_EQ(mermin_quantum_value(build_subset_operators(2, 2, 1)), 4);
    for (size_t n = 3; n <= 10; n++) {
        auto oracle = tableau_from_circuit(n, ghz_circuit(n));
        for (size_t k = 1; k + 2 <= n; k++) {
            for (size_t l = 1; k + l + 1 <= n; l++) {
                EXPECT_EQ(mermin_quantum_value(build_subset_operators(k, l, n - k - l), oracle), 4);
            }
        }
    }
}

TEST(optimality, mermin_quantum_value_matches_state_vector) {
    using namespace ghzlhv::testing;
    for (auto [k, l, m] : {std::array<size_t, 3>{1, 1, 1}, {2, 1, 1}, {1, 2, 2}, {3, 1, 1}}) {
        size_t n = k + l + m;
        auto psi = run_circuit(n, ghz_circuit(n));
        auto ops = build_subset_operators(k, l, m);
        auto t = ops.mermin_terms();
        double v = expectation_value(psi, t[0]) + expectation_value(psi, t[1]) + expectation_value(psi, t[2]) +
                   expectation_value(psi, t[3]);
        EXPECT_NEAR(v, 4.0, 1e-9);
    }
}

TEST(optimality, graph_parse) {
    auto g = CommGraph::parse(5, "1-2,4-3");
    EXPECT_EQ(g.edges().size(), 2u);
    EXPECT_EQ(g.str(), "1-2,3-4");
    EXPECT_TRUE(CommGraph::parse(5, "").edges().empty());
    EXPECT_THROW(CommGraph::parse(5, "1-1"), std::invalid_argument);
    EXPECT_THROW(CommGraph::parse(5, "1-2,2-1"), std::invalid_argument);
    EXPECT_THROW(CommGraph::parse(5, "1-6"), ParseError);
    EXPECT_THROW(CommGraph::parse(5, "1+2"), ParseError);
    EXPECT_THROW(CommGraph(3, {{0, 3}}), DimensionError);
}

TEST(optimality, component_counts) {
    EXPECT_EQ(component_count(CommGraph::parse(5, "1-2,3-4")), 3u);
    EXPECT_EQ(component_count(CommGraph(7, {})), 7u);
    EXPECT_EQ(component_count(CommGraph::parse(4, "1-2,2-3,3-1")), 2u);
    auto comps = connected_components(CommGraph::parse(5, "2-4,4-5"));
    EXPECT_EQ(comps, (std::vector<std::vector<size_t>>{{0}, {1, 3, 4}, {2}}));
}

TEST(optimality, sparse_graphs_have_three_components) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; trial++) {
        size_t n = 3 + rng() % 10;
        size_t want = rng() % (n - 2);
        std::vector<CommGraph::Edge> edges;
        std::set<std::pair<size_t, size_t>> used;
        while (edges.size() < want) {
            size_t u = rng() % n, v = rng() % n;
            if (u == v) {
                continue;
            }
            auto e = std::minmax(u, v);
            if (used.insert(e).second) {
                edges.emplace_back(e.first, e.second);
            }
        }
        CommGraph g(n, edges);
        EXPECT_GE(component_count(g), 3u);
        auto w = insufficiency_witness(g);
        EXPECT_TRUE(w.contradiction) << n << " " << g.str();
    }
}

TEST(optimality, witness_three_qubits_no_edges) {
    auto w = insufficiency_witness(CommGraph(3, {}));
    EXPECT_TRUE(w.contradiction);
    EXPECT_EQ(w.block_sizes, (std::array<size_t, 3>{1, 1, 1}));
    EXPECT_EQ(w.terms[0].product.str(), "XXX");
    EXPECT_EQ(w.terms[1].label, "-ADF");
    EXPECT_EQ(w.lhv_ace, -1);
    EXPECT_EQ(w.quantum_ace, 1);
    EXPECT_EQ(w.epr_assignments, 8u);
    EXPECT_EQ(w.epr_assignments_with_ace_minus, 8u);
    EXPECT_EQ(w.lhv_mermin_values, (std::set<int>{-2, 2}));
    EXPECT_EQ(w.lhv_mermin_bound, 2);
    EXPECT_EQ(w.quantum_mermin, 4);
}

TEST(optimality, witness_five_qubits) {
    auto w = insufficiency_witness(CommGraph::parse(5, "1-2,3-4"));
    EXPECT_TRUE(w.contradiction);
    EXPECT_EQ(w.blocks[0], (std::vector<size_t>{0, 1}));
    EXPECT_EQ(w.blocks[1], (std::vector<size_t>{2, 3}));
    EXPECT_EQ(w.blocks[2], (std::vector<size_t>{4}));
    EXPECT_EQ(w.relabeling, (std::vector<size_t>{0, 1, 2, 3, 4}));
    for (const auto &t : w.terms) {
        EXPECT_EQ(t.ghz_verdict, Prediction::DefinitePlus);
        EXPECT_EQ(t.tableau_verdict, Prediction::DefinitePlus);
    }
}

TEST(optimality, witness_merges_smallest_components) {
    // Components {1,3}, {2}, {4}, {5}, {6}: the singletons merge first.
    auto w = insufficiency_witness(CommGraph::parse(6, "1-3"));
    EXPECT_TRUE(w.contradiction);
    EXPECT_EQ(w.block_sizes[0] + w.block_sizes[1] + w.block_sizes[2], 6u);
    EXPECT_EQ(w.blocks[0], (std::vector<size_t>{0, 2}));
    for (size_t q = 0; q < 6; q++) {
        EXPECT_LT(w.relabeling[q], 6u);
    }
}

TEST(optimality, witness_preconditions) {
    EXPECT_THROW(insufficiency_witness(CommGraph::parse(4, "1-2,2-3")), std::invalid_argument);
    EXPECT_THROW(insufficiency_witness(CommGraph(2, {})), std::invalid_argument);
}
