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

#ifndef GHZLHV_PROTOCOL_H
#define GHZLHV_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghzlhv/lhv.h"
#include "ghzlhv/pauli.h"

namespace ghzlhv {

/// Per-qubit measurement choice; Letter::I means the qubit is not measured.
class MeasurementSettings {
   public:
    MeasurementSettings() = default;
    explicit MeasurementSettings(std::vector<Letter> letters);

    /// n characters from IXYZ (case-insensitive).
    static MeasurementSettings parse(std::string_view text);

    size_t size() const {
        return letters_.size();
    }
    Letter operator[](size_t q) const {
        return letters_[q];
    }
    const std::vector<Letter> &letters() const {
        return letters_;
    }
    uint64_t measured_mask() const;

    /// The product induced on the qubits of `subset` (bits), identity elsewhere.
    PauliProduct induced_product(uint64_t subset) const;

    std::string str() const;
    bool operator==(const MeasurementSettings &) const = default;

   private:
    std::vector<Letter> letters_;
};

/// One communicated flag: party `sender` (0-based qubit or set index) tells
/// Alice whether its result carries an i.
struct BitMessage {
    size_t sender;
    bool bit;
    bool operator==(const BitMessage &) const = default;
};

/// Outcome vectors are length n; unmeasured qubits hold +1 (the identity's value).
struct TrialRecord {
    MeasurementSettings settings;
    HiddenSample sample;
    std::vector<int> raw_local;
    bool flip_applied = false;
    std::vector<int> corrected_local;
    size_t bits_communicated = 0;
    std::vector<BitMessage> trace;

    /// Product of corrected outcomes over the qubits in `subset`.
    int corrected_product(uint64_t subset) const;
    /// Bit q set iff corrected_local[q] == -1.
    uint64_t corrected_minus_mask() const;
};

/// max(parties - 2, 0): every party except Alice and the last one reports one bit.
inline size_t bits_for_parties(size_t parties) {
    return parties >= 2 ? parties - 2 : 0;
}

/// Alice (qubit 1) flips iff she measures X or Y and r_1 q_1 ... q_{n-1} is i or -1,
/// i.e. the number of Y settings among qubits 1..n-1 is 1 or 2 mod 4.
bool flip_decision(const MeasurementSettings &settings);

/// Throws DimensionError when the table and settings disagree on n.
TrialRecord run_protocol(
    const LhvTable &t, const MeasurementSettings &settings, const HiddenSample &s, bool trace = false);

/// A partition of the qubits into l disjoint nonempty sets, each with a
/// product measured jointly on it. Set 0 belongs to Alice; set l-1 never
/// reports its flag.
class SubsetSettings {
   public:
    SubsetSettings() = default;
    /// `sets` hold 0-based qubit indices; products are n-qubit with support inside their set.
    SubsetSettings(size_t num_qubits, std::vector<std::vector<size_t>> sets, std::vector<PauliProduct> products);

    /// `partition` like "1,2|3|4" (1-based), `products` like "XY|X|-Y": one
    /// group of letters per set, in the listed qubit order, optional sign.
    static SubsetSettings parse(size_t num_qubits, std::string_view partition, std::string_view products);

    /// One set per qubit measuring the given letter.
    static SubsetSettings singletons(const MeasurementSettings &settings);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_sets() const {
        return sets_.size();
    }
    const std::vector<std::vector<size_t>> &sets() const {
        return sets_;
    }
    const std::vector<PauliProduct> &products() const {
        return products_;
    }

    std::string partition_str() const;
    std::string products_str() const;

   private:
    size_t n_ = 0;
    std::vector<std::vector<size_t>> sets_;
    std::vector<PauliProduct> products_;
};

/// r_1 for a set: 1 iff Alice's product has some X or Y and no Z. An
/// identity-only set counts as no measurement.
bool subset_alice_active(const PauliProduct &alice_product);

/// q_flags[k] is true when set k's raw table product is imaginary. The flag of
/// the last set is ignored.
bool subset_flip_decision(const SubsetSettings &ss, const std::vector<bool> &q_flags);

struct SubsetTrialRecord {
    HiddenSample sample;
    std::vector<bool> q_flags;
    std::vector<int> raw;
    bool flip_applied = false;
    std::vector<int> corrected;
    size_t bits_communicated = 0;

    /// Bit k set iff corrected[k] == -1.
    uint32_t corrected_outcome() const;
};

SubsetTrialRecord run_subset_protocol(const LhvTable &t, const SubsetSettings &ss, const HiddenSample &s);

}  // namespace ghzlhv

#endif
