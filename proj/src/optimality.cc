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

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "ghzlhv/errors.h"

namespace ghzlhv {

std::array<PauliProduct, 4> SubsetOperators::mermin_terms() const {
    return {a * c * e, -(a * d * f), -(b * c * f), -(b * d * e)};
}

SubsetOperators build_block_operators(size_t num_qubits, const std::array<std::vector<size_t>, 3> &blocks) {
    uint64_t seen = 0;
    for (const auto &blk : blocks) {
        if (blk.empty()) {
            throw std::invalid_argument("every block needs at least one qubit");
        }
        for (size_t q : blk) {
            if (q >= num_qubits) {
                throw DimensionError("block qubit out of range");
            }
            if ((seen >> q) & 1) {
                throw std::invalid_argument("blocks overlap");
            }
            seen |= uint64_t{1} << q;
        }
    }
    if (seen != low_bits(num_qubits)) {
        throw std::invalid_argument("blocks do not cover every qubit");
    }
    auto all_x = [&](const std::vector<size_t> &blk) {
        uint64_t m = 0;
        for (size_t q : blk) {
            m |= uint64_t{1} << q;
        }
        return PauliProduct(num_qubits, m, 0, 0);
    };
    auto last_y = [&](const std::vector<size_t> &blk) {
        uint64_t m = 0;
        for (size_t q : blk) {
            m |= uint64_t{1} << q;
        }
        size_t last = *std::max_element(blk.begin(), blk.end());
        return PauliProduct(num_qubits, m, uint64_t{1} << last, 0);
    };
    SubsetOperators ops;
    ops.blocks = blocks;
    ops.a = all_x(blocks[0]);
    ops.b = last_y(blocks[0]);
    ops.c = all_x(blocks[1]);
    ops.d = last_y(blocks[1]);
    ops.e = all_x(blocks[2]);
    ops.f = last_y(blocks[2]);
    return ops;
}

SubsetOperators build_subset_operators(size_t k, size_t l, size_t m) {
    if (k == 0 || l == 0 || m == 0) {
        throw std::invalid_argument("block sizes must be positive");
    }
    size_t n = k + l + m;
    if (n > kMaxQubits) {
        throw DimensionError("too many qubits");
    }
    std::array<std::vector<size_t>, 3> blocks;
    std::array<size_t, 3> sizes{k, l, m};
    size_t next = 0;
    for (size_t b = 0; b < 3; b++) {
        for (size_t i = 0; i < sizes[b]; i++) {
            blocks[b].push_back(next++);
        }
    }
    return build_block_operators(n, blocks);
}

int mermin_value(int a, int b, int c, int d, int e, int f) {
    return a * c * e - a * d * f - b * c * f - b * d * e;
}

std::set<int> mermin_lhv_values() {
    std::set<int> out;
    for (unsigned bits = 0; bits < 64; bits++) {
        auto v = [&](int k) { return (bits >> k) & 1 ? -1 : 1; };
        out.insert(mermin_value(v(0), v(1), v(2), v(3), v(4), v(5)));
    }
    return out;
}

int mermin_quantum_value(const SubsetOperators &ops, const StabilizerTableau &oracle) {
    auto ev = [&](const PauliProduct &p) { return expectation(oracle.classify(p)); };
    return ev(ops.a * ops.c * ops.e) - ev(ops.a * ops.d * ops.f) - ev(ops.b * ops.c * ops.f) -
           ev(ops.b * ops.d * ops.e);
}

int mermin_quantum_value(const SubsetOperators &ops) {
    size_t n = ops.num_qubits();
    return mermin_quantum_value(ops, tableau_from_circuit(n, ghz_circuit(n)));
}

CommGraph::CommGraph(size_t num_nodes, std::vector<Edge> edges) : n_(num_nodes), edges_(std::move(edges)) {
    for (auto &[u, v] : edges_) {
        if (u >= n_ || v >= n_) {
            throw DimensionError("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u + 1));
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("duplicate edge");
    }
}

CommGraph CommGraph::parse(size_t num_nodes, std::string_view text) {
    std::vector<Edge> edges;
    size_t pos = 0;
    auto read_node = [&](size_t &at) -> size_t {
        size_t start = at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
            at++;
        }
        if (at == start) {
            throw ParseError("expected a node number", start);
        }
        size_t v = std::stoul(std::string(text.substr(start, at - start)));
        if (v == 0 || v > num_nodes) {
            throw ParseError("node " + std::to_string(v) + " out of range 1.." + std::to_string(num_nodes), start);
        }
        return v - 1;
    };
    while (pos < text.size()) {
        size_t u = read_node(pos);
        if (pos >= text.size() || text[pos] != '-') {
            throw ParseError("expected '-' between edge endpoints", pos);
        }
        pos++;
        size_t v = read_node(pos);
        edges.emplace_back(u, v);
        if (pos < text.size()) {
            if (text[pos] != ',') {
                throw ParseError("expected ',' between edges", pos);
            }
            pos++;
        }
    }
    return CommGraph(num_nodes, std::move(edges));
}

std::string CommGraph::str() const {
    std::string out;
    for (size_t i = 0; i < edges_.size(); i++) {
        if (i) {
            out += ",";
        }
        out += std::to_string(edges_[i].first + 1) + "-" + std::to_string(edges_[i].second + 1);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), size_t{0});
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

}  // namespace

std::vector<std::vector<size_t>> connected_components(const CommGraph &g) {
    UnionFind uf(g.num_nodes());
    for (const auto &[u, v] : g.edges()) {
        uf.unite(u, v);
    }
    std::vector<std::vector<size_t>> by_root(g.num_nodes());
    for (size_t q = 0; q < g.num_nodes(); q++) {
        by_root[uf.find(q)].push_back(q);
    }
    std::vector<std::vector<size_t>> out;
    for (auto &c : by_root) {
        if (!c.empty()) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

size_t component_count(const CommGraph &g) {
    return connected_components(g).size();
}

WitnessReport insufficiency_witness(const CommGraph &g) {
    size_t n = g.num_nodes();
    if (n < 3) {
        throw std::invalid_argument("the three-block argument needs at least 3 qubits");
    }
    if (g.edges().size() > n - 3) {
        throw std::invalid_argument(
            "graph has " + std::to_string(g.edges().size()) + " edges; no witness is claimed above n - 3 = " +
            std::to_string(n - 3));
    }
    WitnessReport r;
    r.num_qubits = n;
    r.graph = g;
    r.components = connected_components(g);
    if (r.components.size() < 3) {
        throw std::logic_error("fewer than three components despite at most n - 3 edges");
    }

    // Merge the two smallest groups until three remain. Ties go to the group
    // with the smaller first qubit so the result is deterministic.
    auto groups = r.components;
    auto smaller = [](const std::vector<size_t> &x, const std::vector<size_t> &y) {
        return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
    };
    while (groups.size() > 3) {
        std::sort(groups.begin(), groups.end(), smaller);
        groups[1].insert(groups[1].end(), groups[0].begin(), groups[0].end());
        std::sort(groups[1].begin(), groups[1].end());
        groups.erase(groups.begin());
    }
    std::sort(groups.begin(), groups.end(), [](const auto &x, const auto &y) { return x.front() < y.front(); });
    for (size_t b = 0; b < 3; b++) {
        r.blocks[b] = groups[b];
        r.block_sizes[b] = groups[b].size();
    }

    r.relabeling.assign(n, 0);
    size_t next = 0;
    for (const auto &blk : r.blocks) {
        for (size_t q : blk) {
            r.relabeling[q] = next++;
        }
    }

    r.operators = build_block_operators(n, r.blocks);
    r.contiguous_operators = build_subset_operators(r.block_sizes[0], r.block_sizes[1], r.block_sizes[2]);

    StabilizerTableau oracle = tableau_from_circuit(n, ghz_circuit(n));
    static constexpr std::array<const char *, 4> kLabels{"ACE", "-ADF", "-BCF", "-BDE"};
    auto products = r.operators.mermin_terms();
    for (size_t k = 0; k < 4; k++) {
        r.terms[k] = WitnessTerm{kLabels[k], products[k], ghz_classify(products[k]), oracle.classify(products[k])};
    }

    // Elements of reality consistent with the three EPR constraints.
    for (unsigned bits = 0; bits < 64; bits++) {
        auto v = [&](int k) { return (bits >> k) & 1 ? -1 : 1; };
        int a = v(0), b = v(1), c = v(2), d = v(3), e = v(4), f = v(5);
        if (a * d * f == -1 && b * c * f == -1 && b * d * e == -1) {
            r.epr_assignments++;
            r.epr_assignments_with_ace_minus += a * c * e == -1;
        }
    }
    r.lhv_ace = r.epr_assignments > 0 && r.epr_assignments == r.epr_assignments_with_ace_minus ? -1 : 0;
    r.quantum_ace = expectation(r.terms[0].tableau_verdict);

    r.lhv_mermin_values = mermin_lhv_values();
    r.lhv_mermin_bound = 0;
    for (int v : r.lhv_mermin_values) {
        r.lhv_mermin_bound = std::max(r.lhv_mermin_bound, std::abs(v));
    }
    r.quantum_mermin = mermin_quantum_value(r.operators, oracle);

    bool all_plus = std::all_of(r.terms.begin(), r.terms.end(), [](const WitnessTerm &t) {
        return t.ghz_verdict == Prediction::DefinitePlus && t.tableau_verdict == Prediction::DefinitePlus;
    });
    r.contradiction = all_plus && r.lhv_ace == -1 && r.quantum_ace == 1 && r.quantum_mermin > r.lhv_mermin_bound;
    return r;
}

}  // namespace ghzlhv
