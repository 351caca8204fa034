#pragma once

#include <map>

#include "qhp/form_counts.hpp"

namespace qhp {

/// Exhaustive enumeration over all p^4 quaternions. The default limit keeps
/// a full pass well under a second; callers may raise it knowingly (p = 101
/// is still feasible, at minutes scale). Work is partitioned into p slices
/// by the leading coefficient and merged by addition, so the result is
/// independent of the thread schedule. The QHP_THREADS environment variable
/// caps the worker count (performance only, never correctness).

struct SpecialCensuses {
    i64 nilpotent;                // q^2 = 0, including 0
    i64 idempotent;               // q^2 = q, including 0 and 1
    i64 zero_divisor;             // norm 0, including 0 (matches p^3+p^2-p)
    i64 zero_norm_nonzero_trace;  // norm 0, trace != 0
};

/// Partition of all p^4 elements by minimal potency index, plus the nonzero
/// nilpotents; overflow holds elements with no index within the cap (empty
/// when cap >= p^2 + 1).
struct SpectrumTable {
    i64 p;
    i64 cap;
    i64 nilpotent_nonzero;
    std::map<i64, i64> by_index;
    i64 overflow;

    i64 total() const;
};

i64 oracle_count_kpotent(i64 p, i64 k, i64 limit = kDefaultBruteLimit);
i64 oracle_count_roots(i64 p, i64 k, i64 limit = kDefaultBruteLimit);
SpecialCensuses oracle_special_censuses(i64 p, i64 limit = kDefaultBruteLimit);
SpectrumTable oracle_spectrum(i64 p, i64 cap, i64 limit = kDefaultBruteLimit);

}  // namespace qhp
