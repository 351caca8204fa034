#include "qhp/closed_forms.hpp"

#include "qhp/form_counts.hpp"

namespace qhp {

const char* method_name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::General: return "general";
        case Method::PaperLiteral: return "paper-literal";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

namespace {

void require_prime(i64 p) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
}

}  // namespace

i64 zero_divisor_count(i64 p) {
    require_prime(p);
    return p * p * p + p * p - p;
}

i64 nilpotent_count(i64 p) {
    require_prime(p);
    return p * p;
}

i64 idempotent_count(i64 p) {
    require_prime(p);
    return p * p + p + 2;
}

i64 zero_norm_nonzero_trace_count(i64 p) {
    require_prime(p);
    return p * p * p - p;
}

i64 tripotent_count(i64 p) {
    require_prime(p);
    // p(p+1) for trace of order 2 and zero norm, p(p+1) for the trace-zero
    // square roots of 1 with norm -1, plus the scalar p-1.
    return 2 * p * p + 2 * p + 1;
}

i64 fourpotent_count(i64 p) {
    require_prime(p);
    i64 theta = count_order(p, 3);
    i64 upsilon = count_power_solutions(p, 3, Fp(-1, p));
    // The sphere radius 3t^2/4 is a square exactly when 3 is; the count does
    // not depend on the particular root t. At p = 3 the radius degenerates
    // to 0 and the scalar solution x = t/2 must be excluded.
    i64 n4 = sphere_count(p, Fp(3, p));
    if (p == 3) --n4;
    return theta * (p * p + p + 1) + upsilon * n4;
}

i64 fivepotent_count(i64 p) {
    require_prime(p);
    i64 theta = count_order(p, 4);
    i64 upsilon = count_power_solutions(p, 4, Fp(-4, p));
    // Radius t^2/4 is always a nonzero square here; the "+1" is the
    // trace-zero unit-norm sphere.
    i64 n5 = sphere_count(p, Fp(1, p));
    return theta * (p * p + p + 1) + (upsilon + 1) * n5;
}

i64 closed_kpotent_count(i64 p, i64 k) {
    switch (k) {
        case 2: return idempotent_count(p);
        case 3: return tripotent_count(p);
        case 4: return fourpotent_count(p);
        case 5: return fivepotent_count(p);
        default:
            throw InvalidIndex("no closed form for k = " + std::to_string(k) +
                               " (supported: 2..5)");
    }
}

}  // namespace qhp
