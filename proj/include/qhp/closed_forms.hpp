#pragma once

#include <optional>
#include <string>

#include "qhp/fp.hpp"

namespace qhp {

enum class Method { ClosedForm, General, PaperLiteral, Oracle };

const char* method_name(Method m);

/// A named integer count with provenance, for cross-method comparison and
/// machine-readable output.
struct CensusResult {
    i64 p;
    std::string kind;
    std::optional<i64> k;
    i64 count;
    Method method;
};

/// Elements of zero norm, i.e. the non-invertible elements: p^3 + p^2 - p.
/// The count includes the zero element; its nonzero members are exactly the
/// zero divisors of the per-element predicate.
i64 zero_divisor_count(i64 p);

/// Elements with q^2 = 0, including 0: p^2.
i64 nilpotent_count(i64 p);

/// Elements with q^2 = q, including 0 and 1: p^2 + p + 2.
i64 idempotent_count(i64 p);

/// Elements with zero norm and nonzero trace: p^3 - p.
i64 zero_norm_nonzero_trace_count(i64 p);

/// 2p^2 + 2p + 1.
i64 tripotent_count(i64 p);

/// Theta_p(4)*(p^2+p+1) + Upsilon_p(4)*N4, where Theta_p(4) counts elements
/// of order 3, Upsilon_p(4) counts solutions of t^3 = -1, and N4 is the
/// sphere count at radius 3*t^2/4 (branching only on whether 3 is a square).
i64 fourpotent_count(i64 p);

/// Theta_p(5)*(p^2+p+1) + (Upsilon_p(5)+1)*N5, where Theta_p(5) counts
/// elements of order 4, Upsilon_p(5) counts solutions of t^4 = -4, and N5 is
/// the sphere count at a nonzero square radius.
i64 fivepotent_count(i64 p);

/// Dispatch for k in {2,3,4,5}; throws InvalidIndex otherwise.
i64 closed_kpotent_count(i64 p, i64 k);

}  // namespace qhp
