#include "qhp/report.hpp"

#include <algorithm>

#include "qhp/brute_oracle.hpp"
#include "qhp/general_kpotent.hpp"

namespace qhp {

namespace {

// Literature values that the closed formulas fail to reproduce; the
// enumeration oracle adjudicates. Currently the lone known case is the
// published 5-potent count for p = 29.
struct PublishedDiscrepancy {
    i64 p;
    i64 k;
    i64 published;
};

constexpr PublishedDiscrepancy kKnownDiscrepancies[] = {
    {29, 5, 4872},
};

}  // namespace

std::vector<VerificationRecord> run_verification(i64 p, i64 k_max,
                                                 const VerificationOptions& opts) {
    std::vector<VerificationRecord> records;
    const bool brute = opts.include_brute && p <= opts.brute_limit;
    for (i64 k = 2; k <= k_max; ++k) {
        VerificationRecord rec{p, k, {}, true, {}};
        if (k <= 5) {
            rec.values.emplace_back(method_name(Method::ClosedForm),
                                    closed_kpotent_count(p, k));
        }
        i64 general = count_kpotent(p, k);
        rec.values.emplace_back(method_name(Method::General), general);
        if (brute) {
            rec.values.emplace_back(method_name(Method::Oracle),
                                    oracle_count_kpotent(p, k, opts.brute_limit));
        }
        for (const auto& [name, value] : rec.values) {
            if (value != general) rec.agree = false;
        }
        // Reported outside the agreement bit: the descriptive formula in
        // both its readings.
        if (k >= 3) {
            LiteralCensus literal = literal_kpotent_count(p, k);
            rec.values.emplace_back(method_name(Method::PaperLiteral),
                                    literal.with_scalars);
            if (literal.with_scalars != general) {
                rec.notes.push_back(
                    "paper-literal reading differs from general (" +
                    std::to_string(literal.with_scalars) + " vs " +
                    std::to_string(general) + "); scalar-free reading is " +
                    std::to_string(literal.scalar_free));
            }
        }
        for (const auto& disc : kKnownDiscrepancies) {
            if (disc.p == p && disc.k == k && general != disc.published) {
                rec.notes.push_back(
                    "published value " + std::to_string(disc.published) +
                    " for p=" + std::to_string(p) + ", k=" + std::to_string(k) +
                    " is not reproduced; closed formula and enumeration both give " +
                    std::to_string(general) + ", which is authoritative");
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

bool all_agree(const std::vector<VerificationRecord>& records) {
    for (const auto& rec : records) {
        if (!rec.agree) return false;
    }
    return true;
}

std::vector<CensusResult> census_table(const std::vector<i64>& primes, i64 k_max) {
    std::vector<i64> sorted = primes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<CensusResult> rows;
    for (i64 p : sorted) {
        for (i64 k = 2; k <= k_max; ++k) {
            rows.push_back(CensusResult{p, "kpotent", k, count_kpotent(p, k),
                                        Method::General});
        }
    }
    return rows;
}

}  // namespace qhp
