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

#ifndef GHZLHV_CIRCUIT_H
#define GHZLHV_CIRCUIT_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ghzlhv {

/// H(target) or CNOT(control, target). Indices are 0-based.
struct Gate {
    enum class Kind { H, CNOT };
    Kind kind;
    size_t control = 0;  // unused for H
    size_t target = 0;

    static Gate h(size_t q) {
        return Gate{Kind::H, 0, q};
    }
    static Gate cnot(size_t c, size_t t) {
        return Gate{Kind::CNOT, c, t};
    }
    bool operator==(const Gate &) const = default;

    /// "H 1" / "CNOT 1 2" (1-based, same as the file format).
    std::string str() const;
};

using Circuit = std::vector<Gate>;

/// Reads one gate per line: `H <q>` or `CNOT <c> <t>`, 1-based indices,
/// `#` starts a comment, blank lines ignored. Keywords are case-insensitive.
/// ParseError positions are 1-based line numbers.
Circuit parse_circuit(std::string_view text);
Circuit load_circuit_file(const std::string &path);

/// Throws DimensionError if a gate touches a qubit >= num_qubits or control == target.
void validate_circuit(const Circuit &circuit, size_t num_qubits);

/// Smallest register that contains every gate.
size_t circuit_width(const Circuit &circuit);

/// H on qubit 0, then CNOT(0, j) for j = 1..n-1.
Circuit ghz_circuit(size_t num_qubits);

}  // namespace ghzlhv

#endif
