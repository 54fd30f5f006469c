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

#include "ghzlhv/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "ghzlhv/errors.h"
#include "ghzlhv/lhv.h"
#include "ghzlhv/optimality.h"
#include "ghzlhv/protocol.h"
#include "ghzlhv/report_io.h"
#include "ghzlhv/stabilizer.h"
#include "ghzlhv/verifier.h"

namespace ghzlhv {

using nlohmann::json;

namespace {

/// Everything a run depends on, echoed at the top of its output.
struct RunConfig {
    std::string subcommand;
    size_t n = 0;
    std::string format = "text";
    std::string pauli;
    std::string circuit_path;
    bool steps = false;
    std::string settings;
    std::string partition;
    std::string products;
    uint64_t trials = 0;
    uint64_t seed = 0;
    bool exhaustive = false;
    size_t trace = 0;
    std::string mode = "products";
    size_t cap = 0;
    size_t max_sets = 0;
    std::string alphabet = "IXYZ";
    bool signs = true;
    size_t workers = 0;
    std::string edges;

    json to_json() const {
        json j = {{"subcommand", subcommand}, {"n", n}, {"format", format}};
        if (subcommand == "classify") {
            j["pauli"] = pauli;
        } else if (subcommand == "table") {
            j["circuit"] = circuit_path.empty() ? json("ghz") : json(circuit_path);
            j["steps"] = steps;
        } else if (subcommand == "simulate") {
            if (!partition.empty()) {
                j["partition"] = partition;
                j["products"] = products;
            } else {
                j["settings"] = settings;
            }
            j["exhaustive"] = exhaustive;
            if (!exhaustive) {
                j["trials"] = trials;
                j["seed"] = seed;
                j["rng"] = kRngName;
            }
            j["trace"] = trace;
        } else if (subcommand == "verify") {
            j["mode"] = mode;
            j["cap"] = cap;
            j["seed"] = seed;
            j["workers"] = workers;
            if (mode == "subsets") {
                j["max_sets"] = max_sets;
                j["alphabet"] = alphabet;
                j["signs"] = signs;
            }
        } else if (subcommand == "witness") {
            j["edges"] = edges;
        }
        return j;
    }

    std::string header() const {
        std::string out = "# ghzlhv";
        json j = to_json();
        for (const auto &[k, v] : j.items()) {
            out += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        return out + "\n";
    }
};

size_t env_cap(const char *name, size_t fallback) {
    const char *v = std::getenv(name);
    if (v == nullptr || *v == '\0') {
        return fallback;
    }
    try {
        return std::stoul(v);
    } catch (const std::exception &) {
        throw std::invalid_argument(std::string("environment variable ") + name + " is not a number");
    }
}

void emit(std::ostream &out, const RunConfig &cfg, json body) {
    if (cfg.format == "json") {
        body["config"] = cfg.to_json();
        out << body.dump(2) << "\n";
    }
}

int cmd_classify(const RunConfig &cfg, std::ostream &out) {
    PauliProduct p = cfg.n ? parse_pauli(cfg.pauli, cfg.n) : parse_pauli(cfg.pauli);
    size_t n = p.num_qubits();
    Prediction closed = ghz_classify(p);
    Prediction tab = tableau_classify(tableau_from_circuit(n, ghz_circuit(n)), p);
    LhvPrediction lhv;
    if (n >= 2) {
        lhv = predict_joint(ghz_table(n), p);
    } else {
        lhv = predict_joint(evolve(1, ghz_circuit(1)), p);
    }
    bool agree = closed == tab && closed == lhv.kind;
    if (cfg.format == "json") {
        json j = {{"product", p.str()},
                  {"n", n},
                  {"ghz_classify", prediction_name(closed)},
                  {"tableau_classify", prediction_name(tab)},
                  {"lhv_predict", prediction_name(lhv.kind)},
                  {"lhv_sign", lhv.sign},
                  {"lhv_r_mask", mask_to_json(lhv.r_mask)},
                  {"agree", agree}};
        emit(out, cfg, j);
    } else {
        out << cfg.header();
        out << fmt::format("product: {}\n", p.str());
        out << fmt::format("closed form (GHZ stabilizer group): {}\n", prediction_name(closed));
        out << fmt::format("stabilizer tableau:                 {}\n", prediction_name(tab));
        std::string detail;
        if (lhv.kind == Prediction::Random) {
            LhvEntry e{static_cast<uint8_t>(lhv.sign < 0 ? 2 : 0), lhv.r_mask};
            detail = " (outcome " + e.str() + ")";
        }
        out << fmt::format("LHV table:                          {}{}\n", prediction_name(lhv.kind), detail);
        out << (agree ? "result: AGREE\n" : "result: DISAGREE\n");
    }
    return agree ? kExitOk : kExitMismatch;
}

int cmd_table(RunConfig cfg, std::ostream &out, std::ostream &err) {
    Circuit circuit;
    if (!cfg.circuit_path.empty()) {
        circuit = load_circuit_file(cfg.circuit_path);
        if (cfg.n == 0) {
            cfg.n = std::max<size_t>(1, circuit_width(circuit));
        }
    } else {
        if (cfg.n == 0) {
            throw CLI::ValidationError("table needs -n or --circuit");
        }
        circuit = ghz_circuit(cfg.n);
    }
    validate_circuit(circuit, cfg.n);

    struct Step {
        std::string label;
        LhvTable table;
    };
    std::vector<Step> steps;
    steps.push_back({"initial", initial_table(cfg.n)});
    LhvTable t = steps.back().table;
    for (size_t k = 0; k < circuit.size(); k++) {
        try {
            t = t.apply(circuit[k]);
        } catch (const CnotConsistencyError &e) {
            err << fmt::format("error: gate {} ({}): {}\n", k + 1, circuit[k].str(), e.what());
            if (cfg.format == "json") {
                emit(out, cfg, {{"error", e.what()}, {"gate_index", k + 1}, {"gate", circuit[k].str()}});
            }
            return kExitMismatch;
        }
        if (cfg.steps) {
            steps.push_back({circuit[k].str(), t});
        }
    }
    if (!cfg.steps) {
        steps = {{"final", t}};
    }
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto &s : steps) {
            json j = table_to_json(s.table);
            j["after"] = s.label;
            arr.push_back(j);
        }
        json body = {{"n", cfg.n}, {"tables", arr}, {"phase_condition", t.phase_condition()}};
        json gates = json::array();
        for (const auto &g : circuit) {
            gates.push_back(g.str());
        }
        body["gates"] = gates;
        emit(out, cfg, body);
    } else {
        out << cfg.header();
        for (size_t i = 0; i < steps.size(); i++) {
            if (i) {
                out << "\n";
            }
            out << "after: " << steps[i].label << "\n";
            write_table_text(out, steps[i].table);
        }
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    bool subset_mode = !cfg.partition.empty() || !cfg.products.empty();
    if (subset_mode) {
        if (cfg.n == 0) {
            throw CLI::ValidationError("subset mode needs -n");
        }
        SubsetSettings ss = SubsetSettings::parse(cfg.n, cfg.partition, cfg.products);
        SubsetTrialStatistics st =
            cfg.exhaustive ? exhaustive_subset_trials(ss) : sample_subset_trials(ss, cfg.trials, cfg.seed);
        if (cfg.format == "json") {
            emit(out, cfg, subset_stats_to_json(st));
        } else {
            out << cfg.header();
            write_subset_stats_text(out, st);
        }
        return st.consistent ? kExitOk : kExitMismatch;
    }
    MeasurementSettings settings = MeasurementSettings::parse(cfg.settings);
    if (cfg.n != 0 && cfg.n != settings.size()) {
        throw CLI::ValidationError(
            fmt::format("--settings has {} letters but -n is {}", settings.size(), cfg.n));
    }
    size_t n = settings.size();
    TrialStatistics st = cfg.exhaustive ? exhaustive_trials(n, settings, cfg.trace)
                                        : sample_trials(n, settings, cfg.trials, cfg.seed, cfg.trace);
    if (cfg.format == "json") {
        emit(out, cfg, stats_to_json(st));
    } else {
        out << cfg.header();
        write_stats_text(out, st);
    }
    return st.consistent() ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    VerificationReport rep;
    if (cfg.mode == "products") {
        rep = verify_products(cfg.n, {cfg.cap, cfg.workers});
    } else if (cfg.mode == "correlations") {
        rep = verify_correlations(cfg.n, {cfg.cap, cfg.workers});
    } else {
        SubsetSweepOptions opt;
        opt.cap = cfg.cap;
        opt.max_sets = cfg.max_sets;
        opt.alphabet = cfg.alphabet;
        opt.signs = cfg.signs;
        opt.workers = cfg.workers;
        rep = verify_subsets(cfg.n, opt);
    }
    rep.scope["seed"] = std::to_string(cfg.seed);
    if (cfg.format == "json") {
        emit(out, cfg, report_to_json(rep));
    } else {
        out << cfg.header();
        write_report_text(out, rep);
    }
    return rep.ok() ? kExitOk : kExitMismatch;
}

int cmd_witness(const RunConfig &cfg, std::ostream &out) {
    CommGraph g = CommGraph::parse(cfg.n, cfg.edges);
    WitnessReport r;
    try {
        r = insufficiency_witness(g);
    } catch (const std::logic_error &e) {
        throw CLI::ValidationError(e.what());
    }
    if (cfg.format == "json") {
        emit(out, cfg, witness_to_json(r));
    } else {
        out << cfg.header();
        write_witness_text(out, r);
    }
    return r.contradiction ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Communication-assisted local hidden-variable model of n-qubit GHZ correlations", "ghzlhv"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto *classify = app.add_subcommand("classify", "Classify a Pauli product with both oracles and the LHV table");
    classify->add_option("-n,--n", cfg.n, "Qubit count (default: length of the product)");
    classify->add_option("pauli", cfg.pauli, "Pauli product, e.g. -XYY")->required();
    add_format(classify);

    auto *table = app.add_subcommand("table", "Print the LHV table for the GHZ circuit or a circuit file");
    table->add_option("-n,--n", cfg.n, "Qubit count");
    table->add_option("--circuit", cfg.circuit_path, "Circuit file (H q / CNOT c t, 1-based)");
    table->add_flag("--steps", cfg.steps, "Print the table after every gate");
    add_format(table);

    auto *simulate = app.add_subcommand("simulate", "Run the communication protocol");
    simulate->add_option("-n,--n", cfg.n, "Qubit count");
    auto *settings_opt = simulate->add_option("--settings", cfg.settings, "Per-qubit settings, e.g. XYY (I = unmeasured)");
    auto *partition_opt = simulate->add_option("--partition", cfg.partition, "Qubit sets, e.g. \"1,2|3|4\"");
    auto *products_opt = simulate->add_option("--products", cfg.products, "Per-set products, e.g. \"XY|X|Y\"");
    settings_opt->excludes(partition_opt)->excludes(products_opt);
    partition_opt->needs(products_opt);
    products_opt->needs(partition_opt);
    auto *trials_opt = simulate->add_option("--trials", cfg.trials, "Number of sampled trials");
    simulate->add_option("--seed", cfg.seed, "RNG seed");
    auto *exhaustive_opt = simulate->add_flag("--exhaustive", cfg.exhaustive, "Run every hidden sample once");
    trials_opt->excludes(exhaustive_opt);
    simulate->add_option("--trace", cfg.trace, "Print per-trial traces for the first N trials");
    add_format(simulate);

    auto *verify = app.add_subcommand("verify", "Exhaustive sweeps against the stabilizer oracle");
    verify->add_option("--mode", cfg.mode, "products | correlations | subsets")
        ->check(CLI::IsMember({"products", "correlations", "subsets"}));
    verify->add_option("-n,--n", cfg.n, "Qubit count")->required();
    verify->add_option("--seed", cfg.seed, "Recorded in the report (exhaustive sweeps do not sample)");
    verify->add_option("--cap", cfg.cap, "Largest n accepted (overrides GHZLHV_*_CAP)");
    verify->add_option("--max-sets", cfg.max_sets, "Subsets mode: largest number of sets (default n)");
    verify->add_option("--alphabet", cfg.alphabet, "Subsets mode: letters to enumerate per qubit");
    bool no_signs = false;
    verify->add_flag("--no-signs", no_signs, "Subsets mode: do not enumerate product signs");
    verify->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
    add_format(verify);

    auto *witness = app.add_subcommand("witness", "Show why n - 3 bits cannot suffice for a communication graph");
    witness->add_option("-n,--n", cfg.n, "Qubit count")->required();
    witness->add_option("--edges", cfg.edges, "Communication edges, e.g. 1-2,3-4");
    add_format(witness);

    // CLI11 consumes arguments from the back.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            cfg.subcommand = "classify";
            return cmd_classify(cfg, out);
        }
        if (table->parsed()) {
            cfg.subcommand = "table";
            return cmd_table(cfg, out, err);
        }
        if (simulate->parsed()) {
            cfg.subcommand = "simulate";
            if (cfg.settings.empty() && cfg.partition.empty()) {
                throw CLI::ValidationError("simulate needs --settings or --partition/--products");
            }
            if (!cfg.exhaustive && cfg.trials == 0) {
                throw CLI::ValidationError("simulate needs --trials N or --exhaustive");
            }
            if (cfg.n == 0 && !cfg.settings.empty()) {
                cfg.n = cfg.settings.size();
            }
            return cmd_simulate(cfg, out);
        }
        if (verify->parsed()) {
            cfg.subcommand = "verify";
            cfg.signs = !no_signs;
            if (cfg.cap == 0) {
                if (cfg.mode == "products") {
                    cfg.cap = env_cap("GHZLHV_PRODUCTS_CAP", kDefaultProductsCap);
                } else if (cfg.mode == "correlations") {
                    cfg.cap = env_cap("GHZLHV_CORRELATIONS_CAP", kDefaultCorrelationsCap);
                } else {
                    cfg.cap = env_cap("GHZLHV_SUBSETS_CAP", kDefaultSubsetsCap);
                }
            }
            return cmd_verify(cfg, out);
        }
        if (witness->parsed()) {
            cfg.subcommand = "witness";
            return cmd_witness(cfg, out);
        }
    } catch (const CnotConsistencyError &e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const CLI::Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ghzlhv
