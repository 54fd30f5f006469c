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

#include "ghzlhv/protocol.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ghzlhv/errors.h"

namespace ghzlhv {

MeasurementSettings::MeasurementSettings(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty() || letters_.size() > kMaxQubits) {
        throw DimensionError("settings need 1.." + std::to_string(kMaxQubits) + " qubits");
    }
}

MeasurementSettings MeasurementSettings::parse(std::string_view text) {
    std::vector<Letter> letters;
    for (size_t k = 0; k < text.size(); k++) {
        Letter l;
        if (!letter_from_char(text[k], l)) {
            throw ParseError(std::string("bad setting '") + text[k] + "'", k);
        }
        letters.push_back(l);
    }
    if (letters.empty()) {
        throw ParseError("empty settings string", 0);
    }
    return MeasurementSettings(std::move(letters));
}

uint64_t MeasurementSettings::measured_mask() const {
    uint64_t m = 0;
    for (size_t q = 0; q < letters_.size(); q++) {
        if (letters_[q] != Letter::I) {
            m |= uint64_t{1} << q;
        }
    }
    return m;
}

PauliProduct MeasurementSettings::induced_product(uint64_t subset) const {
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < letters_.size(); q++) {
        if (!((subset >> q) & 1)) {
            continue;
        }
        auto bits = static_cast<uint8_t>(letters_[q]);
        x |= uint64_t{bits & 1u} << q;
        z |= uint64_t{(bits >> 1) & 1u} << q;
    }
    return PauliProduct(letters_.size(), x, z, 0);
}

std::string MeasurementSettings::str() const {
    std::string out;
    for (auto l : letters_) {
        out.push_back(letter_char(l));
    }
    return out;
}

int TrialRecord::corrected_product(uint64_t subset) const {
    return parity(corrected_minus_mask() & subset) ? -1 : 1;
}

uint64_t TrialRecord::corrected_minus_mask() const {
    uint64_t m = 0;
    for (size_t q = 0; q < corrected_local.size(); q++) {
        if (corrected_local[q] < 0) {
            m |= uint64_t{1} << q;
        }
    }
    return m;
}

bool flip_decision(const MeasurementSettings &settings) {
    size_t n = settings.size();
    if (n == 0) {
        return false;
    }
    Letter alice = settings[0];
    if (alice != Letter::X && alice != Letter::Y) {
        return false;
    }
    // p_{n-1} = r_1 q_1 ... q_{n-1}; qubit n's flag never reaches Alice.
    size_t ys = 0;
    for (size_t q = 0; q + 1 < n; q++) {
        ys += settings[q] == Letter::Y;
    }
    // n = 1: Alice is also the last party; p_0 = r_1 = 1.
    size_t phase = ys % 4;
    return phase == 1 || phase == 2;
}

TrialRecord run_protocol(const LhvTable &t, const MeasurementSettings &settings, const HiddenSample &s, bool trace) {
    size_t n = t.num_qubits();
    if (settings.size() != n || s.size() != n) {
        throw DimensionError("table, settings and sample must have the same qubit count");
    }
    TrialRecord rec;
    rec.settings = settings;
    rec.sample = s;
    rec.raw_local.assign(n, 1);
    for (size_t q = 0; q < n; q++) {
        if (settings[q] != Letter::I) {
            rec.raw_local[q] = local_outcome(t, q, basis_of(settings[q]), s);
        }
    }
    rec.corrected_local = rec.raw_local;
    rec.flip_applied = flip_decision(settings);
    if (rec.flip_applied) {
        rec.corrected_local[0] = -rec.corrected_local[0];
    }
    rec.bits_communicated = bits_for_parties(n);
    if (trace) {
        for (size_t q = 1; q + 1 < n; q++) {
            rec.trace.push_back({q, settings[q] == Letter::Y});
        }
    }
    return rec;
}

SubsetSettings::SubsetSettings(
    size_t num_qubits, std::vector<std::vector<size_t>> sets, std::vector<PauliProduct> products)
    : n_(num_qubits), sets_(std::move(sets)), products_(std::move(products)) {
    if (n_ == 0 || n_ > kMaxQubits) {
        throw DimensionError("bad qubit count");
    }
    if (sets_.empty()) {
        throw std::invalid_argument("partition needs at least one set");
    }
    if (sets_.size() != products_.size()) {
        throw std::invalid_argument("partition and products disagree on the number of sets");
    }
    if (sets_.size() > 20) {
        throw std::invalid_argument("at most 20 sets are supported");
    }
    uint64_t seen = 0;
    for (size_t k = 0; k < sets_.size(); k++) {
        if (sets_[k].empty()) {
            throw std::invalid_argument("set " + std::to_string(k + 1) + " is empty");
        }
        uint64_t mask = 0;
        for (size_t q : sets_[k]) {
            if (q >= n_) {
                throw DimensionError("qubit " + std::to_string(q + 1) + " out of range");
            }
            uint64_t bit = uint64_t{1} << q;
            if ((seen | mask) & bit) {
                throw std::invalid_argument("qubit " + std::to_string(q + 1) + " appears in more than one set");
            }
            mask |= bit;
        }
        seen |= mask;
        const auto &p = products_[k];
        if (p.num_qubits() != n_) {
            throw DimensionError("product " + std::to_string(k + 1) + " has the wrong qubit count");
        }
        if (!p.is_hermitian()) {
            throw NonHermitianError("product " + std::to_string(k + 1) + " is not Hermitian");
        }
        if (support_mask(p) & ~mask) {
            throw std::invalid_argument("product " + std::to_string(k + 1) + " acts outside its set");
        }
    }
    if (seen != low_bits(n_)) {
        throw std::invalid_argument("partition does not cover every qubit");
    }
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace

SubsetSettings SubsetSettings::parse(size_t num_qubits, std::string_view partition, std::string_view products) {
    auto set_texts = split(partition, '|');
    auto product_texts = split(products, '|');
    if (set_texts.size() != product_texts.size()) {
        throw ParseError("partition has " + std::to_string(set_texts.size()) + " sets but products has " +
                             std::to_string(product_texts.size()),
                         0);
    }
    std::vector<std::vector<size_t>> sets;
    std::vector<PauliProduct> prods;
    size_t offset = 0;
    for (size_t k = 0; k < set_texts.size(); k++) {
        std::vector<size_t> set;
        for (auto tok : split(set_texts[k], ',')) {
            std::string s(tok);
            s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
                throw ParseError("bad qubit index '" + s + "' in partition", offset);
            }
            size_t v = std::stoul(s);
            if (v == 0 || v > num_qubits) {
                throw ParseError("qubit index " + s + " out of range 1.." + std::to_string(num_qubits), offset);
            }
            set.push_back(v - 1);
        }
        offset += set_texts[k].size() + 1;

        std::string_view pt = product_texts[k];
        uint8_t phase = 0;
        if (!pt.empty() && (pt[0] == '+' || pt[0] == '-')) {
            phase = pt[0] == '-' ? 2 : 0;
            pt.remove_prefix(1);
        }
        if (pt.size() != set.size()) {
            throw ParseError(
                "set " + std::to_string(k + 1) + " has " + std::to_string(set.size()) + " qubits but product has " +
                    std::to_string(pt.size()) + " letters",
                k);
        }
        std::vector<Letter> letters(num_qubits, Letter::I);
        for (size_t i = 0; i < pt.size(); i++) {
            Letter l;
            if (!letter_from_char(pt[i], l)) {
                throw ParseError(std::string("bad Pauli letter '") + pt[i] + "' in product " + std::to_string(k + 1), i);
            }
            letters[set[i]] = l;
        }
        prods.push_back(PauliProduct::from_letters(letters, phase));
        sets.push_back(std::move(set));
    }
    return SubsetSettings(num_qubits, std::move(sets), std::move(prods));
}

SubsetSettings SubsetSettings::singletons(const MeasurementSettings &settings) {
    size_t n = settings.size();
    std::vector<std::vector<size_t>> sets;
    std::vector<PauliProduct> prods;
    for (size_t q = 0; q < n; q++) {
        sets.push_back({q});
        prods.push_back(PauliProduct::single(n, q, settings[q]));
    }
    return SubsetSettings(n, std::move(sets), std::move(prods));
}

std::string SubsetSettings::partition_str() const {
    std::string out;
    for (size_t k = 0; k < sets_.size(); k++) {
        if (k) {
            out += "|";
        }
        for (size_t i = 0; i < sets_[k].size(); i++) {
            if (i) {
                out += ",";
            }
            out += std::to_string(sets_[k][i] + 1);
        }
    }
    return out;
}

std::string SubsetSettings::products_str() const {
    std::string out;
    for (size_t k = 0; k < sets_.size(); k++) {
        if (k) {
            out += "|";
        }
        if (products_[k].sign() < 0) {
            out += "-";
        }
        for (size_t q : sets_[k]) {
            out.push_back(letter_char(products_[k].letter(q)));
        }
    }
    return out;
}

bool subset_alice_active(const PauliProduct &alice_product) {
    bool has_xy = alice_product.x_mask() != 0;
    bool has_z = (alice_product.z_mask() & ~alice_product.x_mask()) != 0;
    return has_xy && !has_z;
}

bool subset_flip_decision(const SubsetSettings &ss, const std::vector<bool> &q_flags) {
    size_t l = ss.num_sets();
    if (q_flags.size() != l) {
        throw DimensionError("one flag per set is required");
    }
    if (!subset_alice_active(ss.products()[0])) {
        return false;
    }
    size_t is = 0;
    for (size_t k = 0; k + 1 < l; k++) {
        is += q_flags[k];
    }
    size_t phase = is % 4;
    return phase == 1 || phase == 2;
}

uint32_t SubsetTrialRecord::corrected_outcome() const {
    uint32_t v = 0;
    for (size_t k = 0; k < corrected.size(); k++) {
        if (corrected[k] < 0) {
            v |= uint32_t{1} << k;
        }
    }
    return v;
}

SubsetTrialRecord run_subset_protocol(const LhvTable &t, const SubsetSettings &ss, const HiddenSample &s) {
    if (ss.num_qubits() != t.num_qubits() || s.size() != t.num_qubits()) {
        throw DimensionError("table, partition and sample must have the same qubit count");
    }
    SubsetTrialRecord rec;
    rec.sample = s;
    size_t l = ss.num_sets();
    for (size_t k = 0; k < l; k++) {
        LhvValue v = joint_entry(t, ss.products()[k]).eval(s);
        rec.q_flags.push_back(v.imaginary);
        rec.raw.push_back(discard_i(v));
    }
    rec.corrected = rec.raw;
    rec.flip_applied = subset_flip_decision(ss, rec.q_flags);
    if (rec.flip_applied) {
        rec.corrected[0] = -rec.corrected[0];
    }
    rec.bits_communicated = bits_for_parties(l);
    return rec;
}

}  // namespace ghzlhv
