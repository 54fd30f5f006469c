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

#include "ghzlhv/verifier.h"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "ghzlhv/errors.h"
#include "ghzlhv/lhv.h"

namespace ghzlhv {

void VerificationReport::add_mismatch(Counterexample c) {
    mismatches++;
    if (counterexamples.size() < kMaxCounterexamples) {
        counterexamples.push_back(std::move(c));
    }
}

void VerificationReport::merge(const VerificationReport &other) {
    cases_checked += other.cases_checked;
    mismatches += other.mismatches;
    for (const auto &c : other.counterexamples) {
        if (counterexamples.size() >= kMaxCounterexamples) {
            break;
        }
        counterexamples.push_back(c);
    }
    for (const auto &[k, v] : other.tallies) {
        tallies[k] += v;
    }
}

std::string sample_str(const HiddenSample &s) {
    std::string out;
    for (size_t j = 0; j < s.size(); j++) {
        out.push_back(s.value(j) > 0 ? '+' : '-');
    }
    return out;
}

std::string qubit_set_str(uint64_t mask, size_t n) {
    std::string out = "{";
    bool first = true;
    for (size_t q = 0; q < n; q++) {
        if ((mask >> q) & 1) {
            if (!first) {
                out += ",";
            }
            out += std::to_string(q + 1);
            first = false;
        }
    }
    return out + "}";
}

namespace {

using Clock = std::chrono::steady_clock;

size_t resolve_workers(size_t requested, uint64_t total) {
    size_t w = requested ? requested : std::max<size_t>(1, std::thread::hardware_concurrency());
    return static_cast<size_t>(std::max<uint64_t>(1, std::min<uint64_t>(w, total)));
}

/// Splits [0, total) into contiguous ranges, one per worker, and merges the
/// partial reports in range order so the result does not depend on `workers`.
VerificationReport run_partitioned(
    uint64_t total, size_t workers, const std::function<void(uint64_t, uint64_t, VerificationReport &)> &body) {
    workers = resolve_workers(workers, total);
    std::vector<VerificationReport> parts(workers);
    std::vector<std::thread> threads;
    uint64_t step = (total + workers - 1) / workers;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; w++) {
        uint64_t begin = std::min(total, w * step);
        uint64_t end = std::min(total, begin + step);
        auto job = [&, w, begin, end] {
            try {
                body(begin, end, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (workers == 1) {
            job();
        } else {
            threads.emplace_back(job);
        }
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    VerificationReport out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

void check_range(size_t n, size_t cap, const char *mode) {
    if (n < 2 || n > cap) {
        throw std::out_of_range(
            std::string(mode) + " sweep needs 2 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
}

std::string verdicts(Prediction a, Prediction b, Prediction c) {
    return std::string("ghz=") + prediction_name(a) + " tableau=" + prediction_name(b) + " lhv=" + prediction_name(c);
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

VerificationReport verify_products(size_t n, const SweepOptions &opt) {
    size_t cap = opt.cap ? opt.cap : kDefaultProductsCap;
    check_range(n, cap, "products");
    auto start = Clock::now();
    LhvTable table = ghz_table(n);
    StabilizerTableau tableau = tableau_from_circuit(n, ghz_circuit(n));
    uint64_t masks = uint64_t{1} << n;
    uint64_t half = masks / 2;

    auto body = [&](uint64_t begin, uint64_t end, VerificationReport &rep) {
        for (uint64_t x = begin; x < end; x++) {
            for (uint64_t z = 0; z < masks; z++) {
                for (uint8_t phase : {uint8_t{0}, uint8_t{2}}) {
                    PauliProduct p(n, x, z, phase);
                    rep.cases_checked++;
                    Prediction g = ghz_classify(p);
                    Prediction t = tableau.classify(p);
                    LhvPrediction m = predict_joint(table, p);
                    rep.tallies[prediction_name(g)]++;
                    if (g != t || g != m.kind) {
                        rep.add_mismatch({"", "", p.str(), prediction_name(g), verdicts(g, t, m.kind)});
                        continue;
                    }
                    LhvEntry e = joint_entry(table, p);
                    if (!e.is_real() && e.r_mask == 0) {
                        rep.add_mismatch({"", "", p.str(), "imaginary product must carry a random part", e.str()});
                    }
                    if (m.kind != Prediction::Random) {
                        continue;
                    }
                    uint64_t plus = 0;
                    for (uint64_t s = 0; s < masks; s++) {
                        plus += discard_i(e.eval(HiddenSample(n, s))) > 0;
                    }
                    rep.tallies["random_balanced_checks"]++;
                    if (plus != half) {
                        rep.add_mismatch(
                            {"", "all", p.str(), std::to_string(half) + " of " + std::to_string(masks) + " +1",
                             std::to_string(plus)});
                    }
                }
            }
        }
    };
    VerificationReport rep = run_partitioned(masks, opt.workers, body);
    rep.mode = "products";
    rep.num_qubits = n;
    rep.scope = {{"products", std::to_string(2 * masks * masks)}, {"samples_per_random_product", std::to_string(masks)},
                 {"cap", std::to_string(cap)}};
    rep.wall_seconds = seconds_since(start);
    return rep;
}

VerificationReport verify_correlations(size_t n, const SweepOptions &opt) {
    size_t cap = opt.cap ? opt.cap : kDefaultCorrelationsCap;
    check_range(n, cap, "correlations");
    auto start = Clock::now();
    LhvTable table = ghz_table(n);
    uint64_t masks = uint64_t{1} << n;
    uint64_t half = masks / 2;
    uint64_t num_settings = uint64_t{1} << (2 * n);
    size_t expected_bits = bits_for_parties(n);

    auto body = [&](uint64_t begin, uint64_t end, VerificationReport &rep) {
        std::vector<Prediction> oracle(masks);
        std::vector<uint64_t> plus(masks);
        for (uint64_t code = begin; code < end; code++) {
            std::vector<Letter> letters(n);
            for (size_t q = 0; q < n; q++) {
                letters[q] = static_cast<Letter>((code >> (2 * q)) & 3);
            }
            MeasurementSettings settings(letters);
            std::string settings_text = settings.str();
            for (uint64_t t = 0; t < masks; t++) {
                PauliProduct induced = settings.induced_product(t);
                oracle[t] = ghz_classify(induced);
                // Overlap with the product sweep: the joint table prediction agrees too.
                if (predict_joint(table, induced).kind != oracle[t]) {
                    rep.add_mismatch({settings_text, "", qubit_set_str(t, n), prediction_name(oracle[t]),
                                      std::string("joint lhv=") + prediction_name(predict_joint(table, induced).kind)});
                }
            }
            std::fill(plus.begin(), plus.end(), 0);
            bool flip = flip_decision(settings);
            size_t total_ys = static_cast<size_t>(std::count(letters.begin(), letters.end(), Letter::Y));
            if (flip && total_ys % 2 == 1) {
                // Flip with p_n = +-i: every subset containing Alice must be random.
                for (uint64_t t = 1; t < masks; t += 2) {
                    if (oracle[t] != Prediction::Random) {
                        rep.add_mismatch({settings_text, "", qubit_set_str(t, n), "Random (flip unobservable)",
                                          prediction_name(oracle[t])});
                    }
                }
                rep.tallies["harmless_flips"]++;
            }
            for (uint64_t s = 0; s < masks; s++) {
                HiddenSample hs(n, s);
                TrialRecord rec = run_protocol(table, settings, hs);
                if (rec.bits_communicated != expected_bits) {
                    rep.add_mismatch({settings_text, sample_str(hs), "bits", std::to_string(expected_bits),
                                      std::to_string(rec.bits_communicated)});
                }
                uint64_t minus = rec.corrected_minus_mask();
                for (uint64_t t = 0; t < masks; t++) {
                    rep.cases_checked++;
                    bool negative = parity(minus & t);
                    switch (oracle[t]) {
                        case Prediction::DefinitePlus:
                        case Prediction::DefiniteMinus: {
                            bool want_negative = oracle[t] == Prediction::DefiniteMinus;
                            if (negative != want_negative) {
                                rep.add_mismatch({settings_text, sample_str(hs), qubit_set_str(t, n),
                                                  want_negative ? "-1" : "+1", negative ? "-1" : "+1"});
                            }
                            break;
                        }
                        case Prediction::Random:
                            plus[t] += !negative;
                            break;
                    }
                }
            }
            for (uint64_t t = 0; t < masks; t++) {
                if (oracle[t] == Prediction::Random) {
                    rep.tallies["random_subsets"]++;
                    if (plus[t] != half) {
                        rep.add_mismatch({settings_text, "all", qubit_set_str(t, n),
                                          std::to_string(half) + " of " + std::to_string(masks) + " +1",
                                          std::to_string(plus[t])});
                    }
                } else {
                    rep.tallies["definite_subsets"]++;
                }
            }
            rep.tallies["flips"] += flip ? masks : 0;
            rep.tallies["trials"] += masks;
        }
    };
    VerificationReport rep = run_partitioned(num_settings, opt.workers, body);
    rep.mode = "correlations";
    rep.num_qubits = n;
    rep.scope = {{"settings", std::to_string(num_settings)}, {"samples", std::to_string(masks)},
                 {"subsets", std::to_string(masks)}, {"bits_per_trial", std::to_string(expected_bits)},
                 {"cap", std::to_string(cap)}};
    rep.wall_seconds = seconds_since(start);
    return rep;
}

SubsetDistributionCheck check_subset_distribution(const SubsetSettings &ss) {
    size_t n = ss.num_qubits();
    if (n > 24) {
        throw std::out_of_range("exhaustive subset check is limited to 24 qubits");
    }
    LhvTable table = n >= 2 ? ghz_table(n) : evolve(1, ghz_circuit(1));
    StabilizerTableau tableau = tableau_from_circuit(n, ghz_circuit(n));
    SubsetDistributionCheck out;
    size_t l = ss.num_sets();
    out.model_counts.assign(size_t{1} << l, 0);
    out.oracle = joint_distribution(tableau, ss.products());
    out.bits_communicated = bits_for_parties(l);
    uint64_t masks = uint64_t{1} << n;
    for (uint64_t s = 0; s < masks; s++) {
        SubsetTrialRecord rec = run_subset_protocol(table, ss, HiddenSample(n, s));
        out.model_counts[rec.corrected_outcome()]++;
        if (rec.bits_communicated != out.bits_communicated) {
            out.matches = false;
            return out;
        }
    }
    // count * |allowed| == 2^n for allowed vectors, 0 otherwise.
    uint64_t allowed = out.oracle.allowed.size();
    out.matches = true;
    for (uint32_t v = 0; v < out.model_counts.size(); v++) {
        bool in = std::binary_search(out.oracle.allowed.begin(), out.oracle.allowed.end(), v);
        uint64_t want = in ? masks : 0;
        if (out.model_counts[v] * allowed != want) {
            out.matches = false;
        }
    }
    return out;
}

namespace {

/// Restricted growth strings: block[q] <= 1 + max(block[0..q-1]).
void enumerate_partitions(
    size_t n, size_t max_blocks, const std::function<void(const std::vector<std::vector<size_t>> &)> &visit) {
    std::vector<size_t> label(n, 0);
    std::function<void(size_t, size_t)> rec = [&](size_t q, size_t used) {
        if (q == n) {
            std::vector<std::vector<size_t>> blocks(used);
            for (size_t i = 0; i < n; i++) {
                blocks[label[i]].push_back(i);
            }
            visit(blocks);
            return;
        }
        for (size_t b = 0; b <= used && b < max_blocks; b++) {
            label[q] = b;
            rec(q + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

}  // namespace

VerificationReport verify_subsets(size_t n, const SubsetSweepOptions &opt) {
    size_t cap = opt.cap ? opt.cap : kDefaultSubsetsCap;
    if (n < 1 || n > cap) {
        throw std::out_of_range("subsets sweep needs 1 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
    }
    size_t max_sets = opt.max_sets ? std::min(opt.max_sets, n) : n;
    std::vector<Letter> alphabet;
    for (char c : opt.alphabet) {
        Letter l;
        if (!letter_from_char(c, l)) {
            throw ParseError(std::string("bad alphabet letter '") + c + "'", alphabet.size());
        }
        if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end()) {
            alphabet.push_back(l);
        }
    }
    if (alphabet.empty()) {
        throw std::invalid_argument("empty alphabet");
    }
    auto start = Clock::now();

    std::vector<std::vector<std::vector<size_t>>> partitions;
    enumerate_partitions(n, max_sets, [&](const auto &blocks) {
        if (!opt.all_orders) {
            partitions.push_back(blocks);
            return;
        }
        std::vector<size_t> order(blocks.size());
        std::iota(order.begin(), order.end(), size_t{0});
        do {
            std::vector<std::vector<size_t>> reordered;
            for (size_t k : order) {
                reordered.push_back(blocks[k]);
            }
            partitions.push_back(std::move(reordered));
        } while (std::next_permutation(order.begin(), order.end()));
    });

    uint64_t letter_choices = 1;
    for (size_t q = 0; q < n; q++) {
        letter_choices *= alphabet.size();
    }

    auto body = [&](uint64_t begin, uint64_t end, VerificationReport &rep) {
        for (uint64_t pi = begin; pi < end; pi++) {
            const auto &blocks = partitions[pi];
            size_t l = blocks.size();
            uint32_t sign_choices = opt.signs ? uint32_t{1} << l : 1;
            for (uint64_t code = 0; code < letter_choices; code++) {
                std::vector<Letter> letters(n);
                uint64_t rest = code;
                for (size_t q = 0; q < n; q++) {
                    letters[q] = alphabet[rest % alphabet.size()];
                    rest /= alphabet.size();
                }
                for (uint32_t signs = 0; signs < sign_choices; signs++) {
                    std::vector<PauliProduct> prods;
                    for (size_t k = 0; k < l; k++) {
                        std::vector<Letter> on_set(n, Letter::I);
                        for (size_t q : blocks[k]) {
                            on_set[q] = letters[q];
                        }
                        prods.push_back(PauliProduct::from_letters(on_set, (signs >> k) & 1 ? 2 : 0));
                    }
                    SubsetSettings ss(n, blocks, std::move(prods));
                    SubsetDistributionCheck check = check_subset_distribution(ss);
                    rep.cases_checked++;
                    rep.tallies["l=" + std::to_string(l)]++;
                    if (check.bits_communicated != bits_for_parties(l)) {
                        rep.add_mismatch({ss.products_str(), "", ss.partition_str(),
                                          std::to_string(bits_for_parties(l)) + " bits",
                                          std::to_string(check.bits_communicated)});
                    }
                    if (!check.matches) {
                        std::string got;
                        for (size_t v = 0; v < check.model_counts.size(); v++) {
                            got += (v ? " " : "") + std::to_string(check.model_counts[v]);
                        }
                        std::string want = "uniform over " + std::to_string(check.oracle.allowed.size()) + " vectors";
                        rep.add_mismatch({ss.products_str(), "all", ss.partition_str(), want, got});
                    }
                }
            }
        }
    };
    VerificationReport rep = run_partitioned(partitions.size(), opt.workers, body);
    rep.mode = "subsets";
    rep.num_qubits = n;
    rep.scope = {{"max_sets", std::to_string(max_sets)}, {"partitions", std::to_string(partitions.size())},
                 {"alphabet", opt.alphabet}, {"signs", opt.signs ? "true" : "false"},
                 {"all_orders", opt.all_orders ? "true" : "false"}, {"cap", std::to_string(cap)}};
    rep.wall_seconds = seconds_since(start);
    return rep;
}

void clopper_pearson(uint64_t successes, uint64_t trials, double alpha, double &low, double &high) {
    if (trials == 0) {
        low = 0;
        high = 1;
        return;
    }
    double k = static_cast<double>(successes);
    double nn = static_cast<double>(trials);
    low = successes == 0 ? 0.0 : boost::math::ibeta_inv(k, nn - k + 1, alpha / 2);
    high = successes == trials ? 1.0 : boost::math::ibeta_inv(k + 1, nn - k, 1 - alpha / 2);
}

bool TrialStatistics::consistent() const {
    return std::all_of(subsets.begin(), subsets.end(), [](const SubsetStat &s) { return s.consistent; });
}

namespace {

std::vector<uint64_t> reported_subsets(const MeasurementSettings &settings) {
    uint64_t measured = settings.measured_mask();
    std::vector<uint64_t> out;
    if (popcount(measured) <= 8) {
        // Every nonempty sub-mask of the measured qubits, in increasing order.
        for (uint64_t t = measured; t; t = (t - 1) & measured) {
            out.push_back(t);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
    for (size_t q = 0; q < settings.size(); q++) {
        if ((measured >> q) & 1) {
            out.push_back(uint64_t{1} << q);
        }
    }
    out.push_back(measured);
    return out;
}

TrialStatistics run_trials(
    size_t n,
    const MeasurementSettings &settings,
    uint64_t trials,
    const std::function<uint64_t(uint64_t)> &draw,
    size_t trace_limit) {
    if (settings.size() != n) {
        throw DimensionError("settings length does not match n");
    }
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    LhvTable table = n >= 2 ? ghz_table(n) : evolve(1, ghz_circuit(1));
    TrialStatistics st;
    st.num_qubits = n;
    st.settings = settings.str();
    st.trials = trials;
    st.bits_communicated = bits_for_parties(n);
    st.flip_decision = flip_decision(settings);
    auto subsets = reported_subsets(settings);
    std::vector<uint64_t> plus(subsets.size(), 0);
    for (uint64_t i = 0; i < trials; i++) {
        HiddenSample hs(n, draw(i));
        TrialRecord rec = run_protocol(table, settings, hs, i < trace_limit);
        st.flips += rec.flip_applied;
        uint64_t minus = rec.corrected_minus_mask();
        for (size_t k = 0; k < subsets.size(); k++) {
            plus[k] += !parity(minus & subsets[k]);
        }
        if (i < trace_limit) {
            st.trace.push_back(std::move(rec));
        }
    }
    for (size_t k = 0; k < subsets.size(); k++) {
        SubsetStat s;
        s.subset = subsets[k];
        PauliProduct induced = settings.induced_product(subsets[k]);
        s.product = induced.str();
        s.oracle = ghz_classify(induced);
        s.plus = plus[k];
        s.trials = trials;
        s.mean = (2.0 * static_cast<double>(plus[k]) - static_cast<double>(trials)) / static_cast<double>(trials);
        clopper_pearson(plus[k], trials, 0.05, s.ci_low, s.ci_high);
        st.subsets.push_back(s);
    }
    return st;
}

}  // namespace

TrialStatistics sample_trials(
    size_t n, const MeasurementSettings &settings, uint64_t trials, uint64_t seed, size_t trace_limit) {
    std::mt19937_64 rng(seed);
    uint64_t mask = low_bits(n);
    TrialStatistics st = run_trials(n, settings, trials, [&](uint64_t) { return rng() & mask; }, trace_limit);
    st.seed = seed;
    st.rng = kRngName;
    for (auto &s : st.subsets) {
        switch (s.oracle) {
            case Prediction::DefinitePlus:
                s.consistent = s.plus == s.trials;
                break;
            case Prediction::DefiniteMinus:
                s.consistent = s.plus == 0;
                break;
            case Prediction::Random: {
                // The reported 95% interval is per subset; the verdict uses a
                // family-wise level so many subsets do not raise false alarms.
                double lo = 0;
                double hi = 1;
                clopper_pearson(s.plus, s.trials, kFamilyAlpha / static_cast<double>(st.subsets.size()), lo, hi);
                s.consistent = lo <= 0.5 && 0.5 <= hi;
                break;
            }
        }
    }
    return st;
}

TrialStatistics exhaustive_trials(size_t n, const MeasurementSettings &settings, size_t trace_limit) {
    if (n > 24) {
        throw std::out_of_range("exhaustive trials are limited to 24 qubits");
    }
    uint64_t total = uint64_t{1} << n;
    TrialStatistics st = run_trials(n, settings, total, [](uint64_t i) { return i; }, trace_limit);
    st.exhaustive = true;
    for (auto &s : st.subsets) {
        switch (s.oracle) {
            case Prediction::DefinitePlus:
                s.consistent = s.plus == total;
                break;
            case Prediction::DefiniteMinus:
                s.consistent = s.plus == 0;
                break;
            case Prediction::Random:
                s.consistent = 2 * s.plus == total;
                break;
        }
    }
    return st;
}

SubsetTrialStatistics exhaustive_subset_trials(const SubsetSettings &ss) {
    SubsetDistributionCheck check = check_subset_distribution(ss);
    SubsetTrialStatistics st;
    st.settings = ss;
    st.exhaustive = true;
    st.trials = uint64_t{1} << ss.num_qubits();
    st.bits_communicated = check.bits_communicated;
    st.counts = check.model_counts;
    st.oracle = check.oracle;
    st.consistent = check.matches;
    return st;
}

SubsetTrialStatistics sample_subset_trials(const SubsetSettings &ss, uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
    size_t n = ss.num_qubits();
    LhvTable table = n >= 2 ? ghz_table(n) : evolve(1, ghz_circuit(1));
    StabilizerTableau tableau = tableau_from_circuit(n, ghz_circuit(n));
    SubsetTrialStatistics st;
    st.settings = ss;
    st.trials = trials;
    st.seed = seed;
    st.rng = kRngName;
    st.bits_communicated = bits_for_parties(ss.num_sets());
    st.counts.assign(size_t{1} << ss.num_sets(), 0);
    st.oracle = joint_distribution(tableau, ss.products());
    std::mt19937_64 rng(seed);
    uint64_t mask = low_bits(n);
    for (uint64_t i = 0; i < trials; i++) {
        auto rec = run_subset_protocol(table, ss, HiddenSample(n, rng() & mask));
        st.counts[rec.corrected_outcome()]++;
    }
    // Sampled runs can only certify support: no outcome outside the oracle's allowed set.
    st.consistent = true;
    for (uint32_t v = 0; v < st.counts.size(); v++) {
        if (st.counts[v] && !std::binary_search(st.oracle.allowed.begin(), st.oracle.allowed.end(), v)) {
            st.consistent = false;
        }
    }
    return st;
}

}  // namespace ghzlhv
