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

#ifndef GHZLHV_REPORT_IO_H
#define GHZLHV_REPORT_IO_H

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>

#include "ghzlhv/lhv.h"
#include "ghzlhv/optimality.h"
#include "ghzlhv/verifier.h"

namespace ghzlhv {

/// r_mask as a sorted list of 1-based variable indices.
nlohmann::json mask_to_json(uint64_t mask);

/// {"phase_exp": 1, "r_mask": [1, 2], "text": "iR1R2"}
nlohmann::json entry_to_json(const LhvEntry &e);
/// {"n": 3, "rows": [{"qubit": 1, "X": {...}, "Y": {...}, "Z": {...}}, ...]}
nlohmann::json table_to_json(const LhvTable &t);

nlohmann::json report_to_json(const VerificationReport &r);
nlohmann::json stats_to_json(const TrialStatistics &s);
nlohmann::json subset_stats_to_json(const SubsetTrialStatistics &s);
nlohmann::json witness_to_json(const WitnessReport &r);

/// Column-aligned table in the usual notation, one row per qubit.
void write_table_text(std::ostream &out, const LhvTable &t);
void write_report_text(std::ostream &out, const VerificationReport &r);
void write_stats_text(std::ostream &out, const TrialStatistics &s);
void write_subset_stats_text(std::ostream &out, const SubsetTrialStatistics &s);
void write_witness_text(std::ostream &out, const WitnessReport &r);

}  // namespace ghzlhv

#endif
