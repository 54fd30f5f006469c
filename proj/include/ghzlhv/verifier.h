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

#ifndef GHZLHV_VERIFIER_H
#define GHZLHV_VERIFIER_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ghzlhv/protocol.h"
#include "ghzlhv/stabilizer.h"

namespace ghzlhv {

inline constexpr size_t kDefaultProductsCap = 8;
inline constexpr size_t kDefaultCorrelationsCap = 6;
inline constexpr size_t kDefaultSubsetsCap = 5;
inline constexpr size_t kMaxCounterexamples = 32;
inline constexpr const char *kRngName = "mt19937_64";
// Family-wise error level for judging sampled Random subsets.
inline constexpr double kFamilyAlpha = 1e-6;

struct Counterexample {
    std::string settings;
    std::string sample;  // e.g. "+-+" for R1=+1, R2=-1, R3=+1; empty when the check spans all samples
    std::string subset;  // 1-based qubit list or set list
    std::string expected;
    std::string got;
    bool operator==(const Counterexample &) const = default;
};

struct VerificationReport {
    std::string mode;
    size_t num_qubits = 0;
    std::map<std::string, std::string> scope;
    uint64_t cases_checked = 0;
    uint64_t mismatches = 0;
    std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples only
    std::map<std::string, uint64_t> tallies;
    double wall_seconds = 0;

    bool ok() const {
        return mismatches == 0;
    }
    void add_mismatch(Counterexample c);
    /// Appends `other` after this report's contents; order-sensitive only in
    /// which counterexamples survive truncation.
    void merge(const VerificationReport &other);
};

struct SweepOptions {
    size_t cap = 0;      // 0 = mode default
    size_t workers = 0;  // 0 = hardware concurrency
};

/// Every signed product: LHV table vs closed form vs tableau, plus exact
/// balance of every Random prediction over all 2^n samples.
VerificationReport verify_products(size_t n, const SweepOptions &opt = {});

/// Every settings vector in {I,X,Y,Z}^n, every sample, every qubit subset:
/// corrected local products against the GHZ oracle.
VerificationReport verify_correlations(size_t n, const SweepOptions &opt = {});

struct SubsetSweepOptions {
    size_t cap = 0;
    size_t max_sets = 0;           // 0 = n
    std::string alphabet = "IXYZ";
    bool signs = true;             // also enumerate the sign of every set's product
    bool all_orders = false;       // every ordering of the sets, not only by smallest qubit
    size_t workers = 0;
};

/// Partitions into at most max_sets sets, every product assignment: the
/// model's corrected joint distribution against joint_distribution().
VerificationReport verify_subsets(size_t n, const SubsetSweepOptions &opt = {});

/// Compares the model's exhaustive corrected distribution with the oracle for one configuration.
struct SubsetDistributionCheck {
    std::vector<uint64_t> model_counts;  // indexed by outcome vector, over all 2^n samples
    JointDistribution oracle;
    size_t bits_communicated = 0;
    bool matches = false;
};

SubsetDistributionCheck check_subset_distribution(const SubsetSettings &ss);

/// Frequency of the corrected product over one qubit subset.
struct SubsetStat {
    uint64_t subset = 0;
    std::string product;  // induced Pauli product
    Prediction oracle = Prediction::Random;
    uint64_t plus = 0;
    uint64_t trials = 0;
    double mean = 0;      // (plus - minus) / trials
    double ci_low = 0;    // exact 95% interval for P(+1)
    double ci_high = 1;
    bool consistent = false;
};

struct TrialStatistics {
    size_t num_qubits = 0;
    std::string settings;
    bool exhaustive = false;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::string rng;
    size_t bits_communicated = 0;
    uint64_t flips = 0;
    bool flip_decision = false;
    std::vector<SubsetStat> subsets;
    std::vector<TrialRecord> trace;  // first `trace_limit` trials

    bool consistent() const;
};

/// Monte-Carlo over hidden samples from mt19937_64(seed). Same inputs give identical output.
TrialStatistics sample_trials(
    size_t n, const MeasurementSettings &settings, uint64_t trials, uint64_t seed, size_t trace_limit = 0);

/// All 2^n samples once each (n <= 24).
TrialStatistics exhaustive_trials(size_t n, const MeasurementSettings &settings, size_t trace_limit = 0);

/// Subset mode, sampled: empirical counts per outcome vector next to the oracle distribution.
struct SubsetTrialStatistics {
    SubsetSettings settings;
    bool exhaustive = false;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::string rng;
    size_t bits_communicated = 0;
    std::vector<uint64_t> counts;
    JointDistribution oracle;
    bool consistent = false;
};

SubsetTrialStatistics sample_subset_trials(const SubsetSettings &ss, uint64_t trials, uint64_t seed);
SubsetTrialStatistics exhaustive_subset_trials(const SubsetSettings &ss);

/// Clopper-Pearson interval for a binomial proportion.
void clopper_pearson(uint64_t successes, uint64_t trials, double alpha, double &low, double &high);

/// "+-+" rendering of a sample.
std::string sample_str(const HiddenSample &s);

/// "{1,3}" rendering of a qubit mask.
std::string qubit_set_str(uint64_t mask, size_t n);

}  // namespace ghzlhv

#endif
