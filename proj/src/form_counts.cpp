#include "qhp/form_counts.hpp"

#include <string>

namespace qhp {

FormCountContext form_context(i64 p) {
    int chi = chi4(p);
    return {p, chi == 1 ? 2 * p - 1 : 1, chi};
}

i64 circle_count(i64 p, Fp g) {
    FormCountContext ctx = form_context(p);
    return g.is_zero() ? ctx.n0 : p - ctx.chi;
}

i64 sphere_count(i64 p, Fp g) {
    FormCountContext ctx = form_context(p);
    switch (legendre(g)) {
        case Legendre::Zero:
            return p * p;
        case Legendre::NonResidue:
            return p * (p - ctx.chi);
        case Legendre::Residue:
            return 2 * ctx.n0 + (p - 2) * (p - ctx.chi);
    }
    return 0;  // unreachable
}

i64 fixed_trace_zero_norm_count(i64 p) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
    return p * (p + 1);
}

i64 brute_form_count(i64 p, int dims, Fp g, i64 limit) {
    if (dims != 2 && dims != 3) {
        throw InvalidIndex("dims must be 2 or 3, got " + std::to_string(dims));
    }
    if (p > limit) {
        throw BruteLimit("p = " + std::to_string(p) +
                         " exceeds brute-force limit " + std::to_string(limit));
    }
    const i64 target = g.value();
    i64 count = 0;
    for (i64 x = 0; x < p; ++x) {
        for (i64 y = 0; y < p; ++y) {
            i64 xy = (x * x + y * y) % p;
            if (dims == 2) {
                if (xy == target) ++count;
                continue;
            }
            for (i64 z = 0; z < p; ++z) {
                if ((xy + z * z) % p == target) ++count;
            }
        }
    }
    return count;
}

}  // namespace qhp
