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

#include "ghzlhv/circuit.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ghzlhv/errors.h"

namespace ghzlhv {

std::string Gate::str() const {
    if (kind == Kind::H) {
        return "H " + std::to_string(target + 1);
    }
    return "CNOT " + std::to_string(control + 1) + " " + std::to_string(target + 1);
}

namespace {

size_t parse_index(const std::string &token, size_t line) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("bad qubit index '" + token + "'", line);
    }
    size_t v = std::stoul(token);
    if (v == 0) {
        throw ParseError("qubit indices are 1-based", line);
    }
    return v - 1;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit out;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
            tokens.push_back(w);
        }
        if (tokens.empty()) {
            continue;
        }
        std::string op = tokens[0];
        std::transform(op.begin(), op.end(), op.begin(), [](unsigned char c) { return std::toupper(c); });
        if (op == "H") {
            if (tokens.size() != 2) {
                throw ParseError("H takes exactly one qubit", line_no);
            }
            out.push_back(Gate::h(parse_index(tokens[1], line_no)));
        } else if (op == "CNOT" || op == "CX") {
            if (tokens.size() != 3) {
                throw ParseError("CNOT takes a control and a target", line_no);
            }
            size_t c = parse_index(tokens[1], line_no);
            size_t t = parse_index(tokens[2], line_no);
            if (c == t) {
                throw ParseError("CNOT control equals target", line_no);
            }
            out.push_back(Gate::cnot(c, t));
        } else {
            throw ParseError("unknown gate '" + tokens[0] + "'", line_no);
        }
    }
    return out;
}

Circuit load_circuit_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_circuit(buf.str());
}

void validate_circuit(const Circuit &circuit, size_t num_qubits) {
    for (size_t k = 0; k < circuit.size(); k++) {
        const Gate &g = circuit[k];
        bool bad = g.target >= num_qubits || (g.kind == Gate::Kind::CNOT && g.control >= num_qubits);
        if (bad) {
            throw DimensionError(
                "gate " + std::to_string(k + 1) + " (" + g.str() + ") exceeds " + std::to_string(num_qubits) +
                " qubits");
        }
        if (g.kind == Gate::Kind::CNOT && g.control == g.target) {
            throw DimensionError("gate " + std::to_string(k + 1) + ": CNOT control equals target");
        }
    }
}

size_t circuit_width(const Circuit &circuit) {
    size_t n = 0;
    for (const auto &g : circuit) {
        n = std::max(n, g.target + 1);
        if (g.kind == Gate::Kind::CNOT) {
            n = std::max(n, g.control + 1);
        }
    }
    return n;
}

Circuit ghz_circuit(size_t num_qubits) {
    Circuit c;
    if (num_qubits == 0) {
        return c;
    }
    c.push_back(Gate::h(0));
    for (size_t j = 1; j < num_qubits; j++) {
        c.push_back(Gate::cnot(0, j));
    }
    return c;
}

}  // namespace ghzlhv
