#pragma once

#include "qhp/fp.hpp"

namespace qhp {

/// Largest modulus accepted by the exhaustive counters.
inline constexpr i64 kDefaultBruteLimit = 31;

/// Per-prime constants shared by the diagonal form counts: chi = chi4(p) and
/// n0 = number of solutions of x^2 + y^2 = 0 (2p-1 when chi = +1, else 1).
struct FormCountContext {
    i64 p;
    i64 n0;
    int chi;
};

FormCountContext form_context(i64 p);

/// Solutions of x^2 + y^2 = g in Z_p.
i64 circle_count(i64 p, Fp g);

/// Solutions of x^2 + y^2 + z^2 = g in Z_p.
i64 sphere_count(i64 p, Fp g);

/// Quaternions with norm 0 and one fixed nonzero trace: p(p+1), independent
/// of which trace is fixed.
i64 fixed_trace_zero_norm_count(i64 p);

/// Exhaustive O(p^dims) count of tuples with sum of squares = g; dims is 2
/// or 3. Validation oracle for the closed counts above.
i64 brute_form_count(i64 p, int dims, Fp g, i64 limit = kDefaultBruteLimit);

}  // namespace qhp
