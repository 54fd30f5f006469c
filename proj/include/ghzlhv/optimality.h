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

#ifndef GHZLHV_OPTIMALITY_H
#define GHZLHV_OPTIMALITY_H

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzlhv/pauli.h"
#include "ghzlhv/stabilizer.h"

namespace ghzlhv {

/// The six block observables of the three-block Mermin argument.
///
/// On each block, A/C/E measure X on every qubit and B/D/F swap the last
/// qubit of the block to Y. All six are embedded on the full register.
struct SubsetOperators {
    std::array<std::vector<size_t>, 3> blocks;  // 0-based qubits per block
    PauliProduct a, b, c, d, e, f;

    size_t num_qubits() const {
        return a.num_qubits();
    }

    /// ACE, -ADF, -BCF, -BDE, each expected to be a +1 stabilizer element.
    std::array<PauliProduct, 4> mermin_terms() const;
};

/// Contiguous blocks of sizes k, l, m. Throws std::invalid_argument on a zero size.
SubsetOperators build_subset_operators(size_t k, size_t l, size_t m);

/// Blocks given explicitly (disjoint, nonempty, covering 0..n-1).
SubsetOperators build_block_operators(size_t num_qubits, const std::array<std::vector<size_t>, 3> &blocks);

/// ace - adf - bcf - bde for one deterministic assignment.
int mermin_value(int a, int b, int c, int d, int e, int f);

/// Every value the Mermin combination takes over the 64 assignments in {+1,-1}^6.
std::set<int> mermin_lhv_values();

/// <ACE> - <ADF> - <BCF> - <BDE> on the GHZ state, each term classified by `oracle`.
int mermin_quantum_value(const SubsetOperators &ops, const StabilizerTableau &oracle);

/// Same, using the GHZ circuit tableau as the oracle.
int mermin_quantum_value(const SubsetOperators &ops);

/// Undirected simple graph on qubits; an edge means at least one bit is exchanged.
class CommGraph {
   public:
    using Edge = std::pair<size_t, size_t>;

    CommGraph() = default;
    /// 0-based endpoints. Throws on self-loops, duplicates, or out-of-range nodes.
    CommGraph(size_t num_nodes, std::vector<Edge> edges);

    /// "1-2,3-4" with 1-based nodes; empty text means no edges.
    static CommGraph parse(size_t num_nodes, std::string_view text);

    size_t num_nodes() const {
        return n_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<size_t>> connected_components(const CommGraph &g);

size_t component_count(const CommGraph &g);

/// One Mermin term and what each oracle says about it.
struct WitnessTerm {
    std::string label;  // "ACE", "-ADF", ...
    PauliProduct product;
    Prediction ghz_verdict;
    Prediction tableau_verdict;
};

/// Constructive form of the three-block contradiction.
struct WitnessReport {
    size_t num_qubits = 0;
    CommGraph graph;
    std::vector<std::vector<size_t>> components;
    std::array<std::vector<size_t>, 3> blocks;
    std::vector<size_t> relabeling;  // relabeling[q] = position of qubit q after making blocks contiguous
    std::array<size_t, 3> block_sizes{};
    SubsetOperators operators;          // on the original qubit labels
    SubsetOperators contiguous_operators;  // on the relabeled, contiguous blocks
    std::array<WitnessTerm, 4> terms;
    /// Assignments (a..f) satisfying adf = bcf = bde = -1, and how many of them have ace = -1.
    size_t epr_assignments = 0;
    size_t epr_assignments_with_ace_minus = 0;
    int lhv_ace = 0;      // forced by the EPR constraints
    int quantum_ace = 0;  // oracle expectation of ACE
    std::set<int> lhv_mermin_values;
    int lhv_mermin_bound = 0;
    int quantum_mermin = 0;
    bool contradiction = false;
};

/// Throws std::invalid_argument when n < 3 or the graph has more than n - 3 edges.
WitnessReport insufficiency_witness(const CommGraph &g);

}  // namespace ghzlhv

#endif
