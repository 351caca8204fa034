#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhp/closed_forms.hpp"
#include "qhp/form_counts.hpp"

namespace qhp {

/// Cross-method comparison for one (p, k). Values are kept in a fixed order
/// for deterministic output. The paper-literal reading is reported but never
/// part of the agreement bit (documented known gap of the descriptive
/// formula).
struct VerificationRecord {
    i64 p;
    i64 k;
    std::vector<std::pair<std::string, i64>> values;  // method name -> count
    bool agree;
    std::vector<std::string> notes;
};

struct VerificationOptions {
    bool include_brute = true;
    i64 brute_limit = kDefaultBruteLimit;
};

/// Runs closed-form (k in 2..5), general, oracle (within limit) and the
/// literal reading (k >= 3) for every k in [2, k_max].
std::vector<VerificationRecord> run_verification(i64 p, i64 k_max,
                                                 const VerificationOptions& opts = {});

bool all_agree(const std::vector<VerificationRecord>& records);

/// Census rows for the table command: one row per (p, k), p ascending then k,
/// counted by the general method.
std::vector<CensusResult> census_table(const std::vector<i64>& primes, i64 k_max);

}  // namespace qhp
