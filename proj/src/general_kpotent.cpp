#include "qhp/general_kpotent.hpp"

#include <vector>

#include "qhp/form_counts.hpp"

namespace qhp {

namespace {

void require_prime(i64 p) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
}

std::vector<i64> divisors_of(i64 k) {
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            small.push_back(d);
            if (d != k / d) large.push_back(k / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

ReductionState initial_reduction_state(i64 p) {
    return {Fp(1, p), Fp(0, p), 1};
}

ReductionState reduce_step(const ReductionState& state, const CharPair& pair) {
    return {state.a * pair.t + state.b, -(state.a * pair.n), state.m + 1};
}

std::optional<i64> charpoly_min_index(const CharPair& pair, i64 cap) {
    if (pair.t.is_zero() && pair.n.is_zero()) {
        throw NilpotentClass("class (0,0) holds the nonzero nilpotents; no potency index");
    }
    ReductionState state = initial_reduction_state(pair.modulus());
    for (i64 k = 2; k <= cap; ++k) {
        state = reduce_step(state, pair);
        if (state.a.value() == 1 && state.b.is_zero()) return k;
    }
    return std::nullopt;
}

i64 nonscalar_class_count(const CharPair& pair) {
    const i64 p = pair.modulus();
    Fp radius = pair.n - pair.t * pair.t * inv(Fp(4, p));
    i64 count = sphere_count(p, radius);
    if (pair.discriminant().is_zero()) --count;  // the scalar t/2
    return count;
}

i64 count_kpotent(i64 p, i64 k) {
    require_prime(p);
    if (k < 2 || k > p * p + 1) {
        throw InvalidIndex("k = " + std::to_string(k) + " out of range [2, " +
                           std::to_string(p * p + 1) + "] for p = " + std::to_string(p));
    }
    i64 total = count_order(p, k - 1);  // scalars of multiplicative order k-1
    if (k == 2) ++total;                // the zero element
    for (i64 t = 0; t < p; ++t) {
        for (i64 n = 0; n < p; ++n) {
            if (t == 0 && n == 0) continue;
            CharPair pair{Fp(t, p), Fp(n, p)};
            if (charpoly_min_index(pair, k) == k) {
                total += nonscalar_class_count(pair);
            }
        }
    }
    return total;
}

LiteralCensus literal_kpotent_count(i64 p, i64 k) {
    require_prime(p);
    if (k < 3) {
        throw InvalidIndex("literal census needs k >= 3, got " + std::to_string(k));
    }
    FormCountContext ctx = form_context(p);
    i64 theta = count_order(p, k - 1);

    LiteralCensus out{};
    out.theta_case1 = theta * p * (p + 1);

    // Trace-zero branch: exists only for odd k. Valid norms are the n with
    // n^(k-1) = 1 and (-n)^((k-1)/2) = 1 whose class (0, n) has minimal
    // index exactly k; each contributes the sphere count at radius n.
    if (k % 2 == 1) {
        for (i64 n = 1; n < p; ++n) {
            Fp alpha(n, p);
            if (pow(alpha, k - 1).value() != 1) continue;
            if (pow(-alpha, (k - 1) / 2).value() != 1) continue;
            if (charpoly_min_index(CharPair{Fp(0, p), alpha}, k) != k) continue;
            out.psi += legendre(alpha) == Legendre::Residue
                           ? 2 * ctx.n0 + (p - 2) * (p - ctx.chi)
                           : p * (p - ctx.chi);
        }
    }

    // Nonzero-trace branch. Eliminating powers against X^2 = tX - n turns
    // t*X^(k-2) - n*X^(k-3) - 1 = 0 into A2*X^2 + B1*X - 1 = 0; the branch
    // where (A2*t + B1)X = A2*n + 1 degenerates contributes a sphere count
    // per qualifying (t, n). The descent needs k >= 4.
    if (k >= 4) {
        for (i64 tv = 1; tv < p; ++tv) {
            for (i64 nv = 1; nv < p; ++nv) {
                Fp t(tv, p), n(nv, p);
                if (pow(n, k - 1).value() != 1) continue;
                Fp a = t, b = -n;  // coefficients at degree k-2
                for (i64 deg = k - 2; deg > 2; --deg) {
                    Fp next_a = a * t + b;
                    b = -(a * n);
                    a = next_a;
                }
                if (!(a * t + b).is_zero()) continue;
                if (!(a * n + Fp(1, p)).is_zero()) continue;
                out.degenerate += sphere_count(p, n - t * t * inv(Fp(4, p)));
            }
        }
    }

    out.scalar_free = out.theta_case1 + out.psi + out.degenerate;
    out.with_scalars = out.scalar_free + theta;
    return out;
}

RootCountResult count_roots(i64 p, i64 k) {
    require_prime(p);
    if (k < 1) {
        throw InvalidIndex("k must be >= 1, got " + std::to_string(k));
    }
    RootCountResult out{p, k, 0, {}};
    for (i64 d : divisors_of(k)) out.per_divisor[d] = 0;

    for (i64 s = 1; s < p; ++s) {
        Fp a(s, p);
        if (pow(a, k).value() == 1) ++out.per_divisor[mult_order(a)];
    }
    // A class of nonzero norm solves x^k = 1 iff the order of X in the
    // quotient ring divides k; the order is then the minimal exponent.
    for (i64 tv = 0; tv < p; ++tv) {
        for (i64 nv = 1; nv < p; ++nv) {
            CharPair pair{Fp(tv, p), Fp(nv, p)};
            ReductionState state = initial_reduction_state(p);
            for (i64 m = 1; m < k; ++m) {
                state = reduce_step(state, pair);
                if (state.a.is_zero() && state.b.value() == 1) {
                    if (k % state.m == 0) {
                        out.per_divisor[state.m] += nonscalar_class_count(pair);
                    }
                    break;
                }
            }
        }
    }
    for (const auto& [d, count] : out.per_divisor) out.total += count;
    return out;
}

i64 divisor_sum_root_count(i64 p, i64 k) {
    require_prime(p);
    if (k < 1) {
        throw InvalidIndex("k must be >= 1, got " + std::to_string(k));
    }
    i64 total = 1;
    for (i64 d : divisors_of(k)) {
        if (d == 1) continue;
        // Indices past p^2 + 1 cannot occur, and no scalar has order > p - 1,
        // so those divisors contribute nothing.
        if (d + 1 > p * p + 1) continue;
        total += count_kpotent(p, d + 1) - count_order(p, d) * p * (p + 1);
    }
    return total;
}

}  // namespace qhp
