#pragma once

#include <map>
#include <optional>

#include "qhp/fp.hpp"

namespace qhp {

/// A (trace, norm) pair. For non-scalar quaternions X^2 - tX + n is the
/// minimal polynomial, so potency behaviour depends only on this pair. The
/// discriminant t^2 - 4n sorts classes into split (nonzero square), inert
/// (non-square) and ramified (zero).
struct CharPair {
    Fp t;
    Fp n;

    i64 modulus() const { return t.modulus(); }
    Fp discriminant() const { return t * t - Fp(4, t.modulus()) * n; }
};

/// Invariant: X^m = a*X + b modulo X^2 - tX + n. The m = 1 state is (1, 0);
/// one step maps (a, b) to (a*t + b, -a*n).
struct ReductionState {
    Fp a;
    Fp b;
    i64 m;
};

ReductionState initial_reduction_state(i64 p);
ReductionState reduce_step(const ReductionState& state, const CharPair& pair);

/// Least k in [2, cap] with X^k = X modulo the pair's quadratic, i.e. the
/// potency index shared by every non-scalar element of the class. Throws
/// NilpotentClass for the pair (0, 0); returns nullopt past the cap.
std::optional<i64> charpoly_min_index(const CharPair& pair, i64 cap);

/// Quaternions with the given trace and norm, excluding scalars:
/// sphere_count(p, n - t^2/4), minus 1 in the ramified case.
i64 nonscalar_class_count(const CharPair& pair);

/// Ground-truth general census of k-potent elements: scalars of order k-1
/// plus every (t, n) class of minimal index exactly k. The zero element is
/// counted at k = 2 only. O(p^2 * k). Throws InvalidIndex unless
/// 2 <= k <= p^2 + 1.
i64 count_kpotent(i64 p, i64 k);

/// Faithful transcription of the descriptive census formula
/// Theta*p(p+1) + Psi + N(degenerate), kept for comparison against
/// count_kpotent. The formula omits the scalar solutions arising in the
/// nonzero-trace branch, so both readings are exposed; disagreement with
/// count_kpotent is reported by callers, never hidden.
struct LiteralCensus {
    i64 theta_case1;   // Theta_p(k) * p(p+1)
    i64 psi;           // trace-zero branch (odd k only)
    i64 degenerate;    // solutions of the degenerate-branch sphere equation
    i64 scalar_free;   // theta_case1 + psi + degenerate
    i64 with_scalars;  // scalar_free + Theta_p(k)
};

LiteralCensus literal_kpotent_count(i64 p, i64 k);

/// Solution count of x^k = 1, with solutions bucketed by minimal exponent d
/// (a divisor of k); per_divisor[1] = 1 is the element 1 itself.
struct RootCountResult {
    i64 p;
    i64 k;
    i64 total;
    std::map<i64, i64> per_divisor;
};

/// Direct root counter over scalars and (t, n) classes of nonzero norm.
RootCountResult count_roots(i64 p, i64 k);

/// Divisor-sum route to the same total:
/// 1 + sum over divisors d > 1 of k of (I_p(d+1) - Theta_p(d+1)*p(p+1)),
/// with I from count_kpotent. Must equal count_roots(p, k).total.
i64 divisor_sum_root_count(i64 p, i64 k);

}  // namespace qhp
