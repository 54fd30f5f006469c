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

#include "ghzlhv/report_io.h"

#include <fmt/format.h>

#include <algorithm>

namespace ghzlhv {

using nlohmann::json;

json mask_to_json(uint64_t mask) {
    json out = json::array();
    for (size_t j = 0; j < 64; j++) {
        if ((mask >> j) & 1) {
            out.push_back(j + 1);
        }
    }
    return out;
}

json entry_to_json(const LhvEntry &e) {
    return {{"phase_exp", e.phase_exp}, {"r_mask", mask_to_json(e.r_mask)}, {"text", e.str()}};
}

json table_to_json(const LhvTable &t) {
    json rows = json::array();
    for (size_t q = 0; q < t.num_qubits(); q++) {
        rows.push_back({{"qubit", q + 1},
                        {"X", entry_to_json(t.at(q, Basis::X))},
                        {"Y", entry_to_json(t.at(q, Basis::Y))},
                        {"Z", entry_to_json(t.at(q, Basis::Z))}});
    }
    return {{"n", t.num_qubits()}, {"rows", rows}};
}

json report_to_json(const VerificationReport &r) {
    json ces = json::array();
    for (const auto &c : r.counterexamples) {
        ces.push_back({{"settings", c.settings},
                       {"sample", c.sample},
                       {"subset", c.subset},
                       {"expected", c.expected},
                       {"got", c.got}});
    }
    return {{"mode", r.mode},
            {"n", r.num_qubits},
            {"scope", r.scope},
            {"cases_checked", r.cases_checked},
            {"mismatches", r.mismatches},
            {"counterexamples", ces},
            {"counterexamples_truncated", r.mismatches > r.counterexamples.size()},
            {"tallies", r.tallies},
            {"wall_seconds", r.wall_seconds},
            {"ok", r.ok()}};
}

namespace {

json subset_stat_to_json(const SubsetStat &s, size_t n) {
    return {{"subset", qubit_set_str(s.subset, n)},
            {"product", s.product},
            {"oracle", prediction_name(s.oracle)},
            {"plus", s.plus},
            {"trials", s.trials},
            {"mean", s.mean},
            {"ci95", {s.ci_low, s.ci_high}},
            {"consistent", s.consistent}};
}

json trial_to_json(const TrialRecord &t) {
    json trace = json::array();
    for (const auto &m : t.trace) {
        trace.push_back({{"sender", m.sender + 1}, {"bit", m.bit ? 1 : 0}});
    }
    return {{"sample", sample_str(t.sample)},
            {"raw", t.raw_local},
            {"flip", t.flip_applied},
            {"corrected", t.corrected_local},
            {"bits", t.bits_communicated},
            {"messages", trace}};
}

}  // namespace

json stats_to_json(const TrialStatistics &s) {
    json subsets = json::array();
    for (const auto &x : s.subsets) {
        subsets.push_back(subset_stat_to_json(x, s.num_qubits));
    }
    json trace = json::array();
    for (const auto &t : s.trace) {
        trace.push_back(trial_to_json(t));
    }
    json out = {{"mode", "single"},
                {"n", s.num_qubits},
                {"settings", s.settings},
                {"exhaustive", s.exhaustive},
                {"trials", s.trials},
                {"bits_communicated", s.bits_communicated},
                {"flip_decision", s.flip_decision},
                {"flips", s.flips},
                {"subsets", subsets},
                {"trace", trace},
                {"consistent", s.consistent()}};
    if (!s.exhaustive) {
        out["seed"] = s.seed;
        out["rng"] = s.rng;
        out["family_alpha"] = kFamilyAlpha;
    }
    return out;
}

json subset_stats_to_json(const SubsetTrialStatistics &s) {
    json counts = json::array();
    size_t l = s.settings.num_sets();
    for (uint32_t v = 0; v < s.counts.size(); v++) {
        std::string vec;
        for (size_t k = 0; k < l; k++) {
            vec += (v >> k) & 1 ? '-' : '+';
        }
        counts.push_back({{"outcome", vec},
                          {"count", s.counts[v]},
                          {"oracle_probability", s.oracle.probability(v)}});
    }
    json out = {{"mode", "subsets"},
                {"n", s.settings.num_qubits()},
                {"partition", s.settings.partition_str()},
                {"products", s.settings.products_str()},
                {"sets", l},
                {"exhaustive", s.exhaustive},
                {"trials", s.trials},
                {"bits_communicated", s.bits_communicated},
                {"distribution", counts},
                {"consistent", s.consistent}};
    if (!s.exhaustive) {
        out["seed"] = s.seed;
        out["rng"] = s.rng;
    }
    return out;
}

json witness_to_json(const WitnessReport &r) {
    json blocks = json::array();
    for (const auto &b : r.blocks) {
        json qs = json::array();
        for (size_t q : b) {
            qs.push_back(q + 1);
        }
        blocks.push_back(qs);
    }
    json comps = json::array();
    for (const auto &c : r.components) {
        json qs = json::array();
        for (size_t q : c) {
            qs.push_back(q + 1);
        }
        comps.push_back(qs);
    }
    json relabel = json::object();
    for (size_t q = 0; q < r.relabeling.size(); q++) {
        relabel[std::to_string(q + 1)] = r.relabeling[q] + 1;
    }
    const auto &o = r.operators;
    json ops = {{"A", o.a.str()}, {"B", o.b.str()}, {"C", o.c.str()},
                {"D", o.d.str()}, {"E", o.e.str()}, {"F", o.f.str()}};
    const auto &co = r.contiguous_operators;
    json cops = {{"A", co.a.str()}, {"B", co.b.str()}, {"C", co.c.str()},
                 {"D", co.d.str()}, {"E", co.e.str()}, {"F", co.f.str()}};
    json terms = json::array();
    for (const auto &t : r.terms) {
        terms.push_back({{"label", t.label},
                         {"product", t.product.str()},
                         {"ghz_classify", prediction_name(t.ghz_verdict)},
                         {"tableau_classify", prediction_name(t.tableau_verdict)}});
    }
    return {{"n", r.num_qubits},
            {"edges", r.graph.str()},
            {"edge_count", r.graph.edges().size()},
            {"components", comps},
            {"blocks", blocks},
            {"block_sizes", r.block_sizes},
            {"relabeling", relabel},
            {"operators", ops},
            {"contiguous_operators", cops},
            {"terms", terms},
            {"epr_constraints", "adf = bcf = bde = -1"},
            {"epr_assignments", r.epr_assignments},
            {"epr_assignments_with_ace_minus", r.epr_assignments_with_ace_minus},
            {"lhv_ace", r.lhv_ace},
            {"quantum_ace", r.quantum_ace},
            {"lhv_mermin_values", r.lhv_mermin_values},
            {"lhv_mermin_bound", r.lhv_mermin_bound},
            {"quantum_mermin", r.quantum_mermin},
            {"contradiction", r.contradiction}};
}

void write_table_text(std::ostream &out, const LhvTable &t) {
    std::vector<std::array<std::string, 3>> cells;
    size_t w = 1;
    for (size_t q = 0; q < t.num_qubits(); q++) {
        std::array<std::string, 3> row{t.at(q, Basis::X).str(), t.at(q, Basis::Y).str(), t.at(q, Basis::Z).str()};
        for (const auto &c : row) {
            w = std::max(w, c.size());
        }
        cells.push_back(row);
    }
    std::string label_head = "qubit";
    size_t lw = label_head.size();
    for (size_t q = 0; q < t.num_qubits(); q++) {
        lw = std::max(lw, fmt::format("qubit {}", q + 1).size());
    }
    std::string head = fmt::format("{:<{}}  {:<{}}  {:<{}}  {}", "", lw, "X", w, "Y", w, "Z");
    out << head << "\n";
    for (size_t q = 0; q < cells.size(); q++) {
        std::string line = fmt::format(
            "{:<{}}  {:<{}}  {:<{}}  {:<{}}", fmt::format("qubit {}", q + 1), lw, cells[q][0], w, cells[q][1], w,
            cells[q][2], w);
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    }
}

void write_report_text(std::ostream &out, const VerificationReport &r) {
    out << fmt::format("mode: {}  n: {}\n", r.mode, r.num_qubits);
    for (const auto &[k, v] : r.scope) {
        out << fmt::format("  {}: {}\n", k, v);
    }
    out << fmt::format("cases checked: {}\n", r.cases_checked);
    for (const auto &[k, v] : r.tallies) {
        out << fmt::format("  {}: {}\n", k, v);
    }
    out << fmt::format("mismatches: {}\n", r.mismatches);
    for (const auto &c : r.counterexamples) {
        out << fmt::format(
            "  counterexample: settings={} sample={} subset={} expected={} got={}\n", c.settings, c.sample, c.subset,
            c.expected, c.got);
    }
    if (r.mismatches > r.counterexamples.size()) {
        out << fmt::format("  ... {} more not shown\n", r.mismatches - r.counterexamples.size());
    }
    out << fmt::format("wall time: {:.3f} s\n", r.wall_seconds);
    out << (r.ok() ? "result: CONSISTENT\n" : "result: MISMATCH\n");
}

void write_stats_text(std::ostream &out, const TrialStatistics &s) {
    out << fmt::format("settings: {}  n: {}  trials: {}", s.settings, s.num_qubits, s.trials);
    if (s.exhaustive) {
        out << "  (exhaustive)\n";
    } else {
        out << fmt::format("  seed: {}  rng: {}\n", s.seed, s.rng);
        out << fmt::format("random subsets judged at family-wise level {:g}\n", kFamilyAlpha);
    }
    out << fmt::format(
        "bits communicated per trial: {}\nflip decision: {}  flips applied: {}\n", s.bits_communicated,
        s.flip_decision ? "yes" : "no", s.flips);
    out << fmt::format(
        "{:<20} {:<14} {:>10} {:>10} {:>9}  {:<19} {}\n", "subset", "oracle", "+1", "trials", "mean", "95% CI P(+1)",
        "ok");
    for (const auto &x : s.subsets) {
        out << fmt::format(
            "{:<20} {:<14} {:>10} {:>10} {:>9.4f}  [{:.4f}, {:.4f}]  {}\n", qubit_set_str(x.subset, s.num_qubits) + " " +
                x.product,
            prediction_name(x.oracle), x.plus, x.trials, x.mean, x.ci_low, x.ci_high, x.consistent ? "yes" : "NO");
    }
    for (size_t i = 0; i < s.trace.size(); i++) {
        const auto &t = s.trace[i];
        std::string raw, cor, msgs;
        for (int v : t.raw_local) {
            raw += v > 0 ? '+' : '-';
        }
        for (int v : t.corrected_local) {
            cor += v > 0 ? '+' : '-';
        }
        for (const auto &m : t.trace) {
            msgs += fmt::format(" q{}->q1:{}", m.sender + 1, m.bit ? 1 : 0);
        }
        out << fmt::format(
            "trial {}: R={} raw={} flip={} corrected={} bits={}{}\n", i + 1, sample_str(t.sample), raw,
            t.flip_applied ? 1 : 0, cor, t.bits_communicated, msgs);
    }
    out << (s.consistent() ? "result: CONSISTENT\n" : "result: MISMATCH\n");
}

void write_subset_stats_text(std::ostream &out, const SubsetTrialStatistics &s) {
    out << fmt::format(
        "partition: {}  products: {}  n: {}  sets: {}  trials: {}", s.settings.partition_str(),
        s.settings.products_str(), s.settings.num_qubits(), s.settings.num_sets(), s.trials);
    if (s.exhaustive) {
        out << "  (exhaustive)\n";
    } else {
        out << fmt::format("  seed: {}  rng: {}\n", s.seed, s.rng);
    }
    out << fmt::format("bits communicated per trial: {}\n", s.bits_communicated);
    out << fmt::format("{:<10} {:>10} {:>12} {:>12}\n", "outcome", "count", "frequency", "oracle");
    size_t l = s.settings.num_sets();
    for (uint32_t v = 0; v < s.counts.size(); v++) {
        std::string vec;
        for (size_t k = 0; k < l; k++) {
            vec += (v >> k) & 1 ? '-' : '+';
        }
        out << fmt::format(
            "{:<10} {:>10} {:>12.6f} {:>12.6f}\n", vec, s.counts[v],
            static_cast<double>(s.counts[v]) / static_cast<double>(s.trials), s.oracle.probability(v));
    }
    out << (s.consistent ? "result: CONSISTENT\n" : "result: MISMATCH\n");
}

void write_witness_text(std::ostream &out, const WitnessReport &r) {
    auto list = [](const std::vector<size_t> &qs) {
        std::string s = "{";
        for (size_t i = 0; i < qs.size(); i++) {
            s += (i ? "," : "") + std::to_string(qs[i] + 1);
        }
        return s + "}";
    };
    out << fmt::format(
        "n = {}, {} communication edge(s) [{}], at most n - 3 = {}\n", r.num_qubits, r.graph.edges().size(),
        r.graph.str(), r.num_qubits - 3);
    out << "connected components:";
    for (const auto &c : r.components) {
        out << " " << list(c);
    }
    out << fmt::format("\nmerged into three blocks: {} {} {} (k, l, m) = ({}, {}, {})\n", list(r.blocks[0]),
                       list(r.blocks[1]), list(r.blocks[2]), r.block_sizes[0], r.block_sizes[1], r.block_sizes[2]);
    const auto &o = r.operators;
    out << fmt::format("A = {}  B = {}\nC = {}  D = {}\nE = {}  F = {}\n", o.a.str(), o.b.str(), o.c.str(), o.d.str(),
                       o.e.str(), o.f.str());
    out << "stabilizer terms:\n";
    for (const auto &t : r.terms) {
        out << fmt::format(
            "  {:<5} = {:<{}}  closed form: {:<13}  tableau: {}\n", t.label, t.product.str(), r.num_qubits + 1,
            prediction_name(t.ghz_verdict), prediction_name(t.tableau_verdict));
    }
    out << fmt::format(
        "elements of reality: adf = bcf = bde = -1 holds for {} of 64 assignments; ace = -1 in {} of them\n",
        r.epr_assignments, r.epr_assignments_with_ace_minus);
    out << fmt::format(
        "local value of ACE: {}, quantum value: {}\n", r.lhv_ace == -1 ? "-1 (forced)" : "not forced",
        r.quantum_ace > 0 ? "+1" : (r.quantum_ace < 0 ? "-1" : "random"));
    std::string vals;
    for (int v : r.lhv_mermin_values) {
        vals += (vals.empty() ? "" : ", ") + std::to_string(v);
    }
    out << fmt::format(
        "Mermin combination ACE - ADF - BCF - BDE: local values {{{}}}, |<M>| <= {}; quantum <M> = {}\n", vals,
        r.lhv_mermin_bound, r.quantum_mermin);
    out << (r.contradiction ? "result: CONTRADICTION (n - 3 bits are insufficient)\n" : "result: NO CONTRADICTION\n");
}

}  // namespace ghzlhv
