#include "qhp/brute_oracle.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qhp {

namespace {

void require_within_limit(i64 p, i64 limit) {
    if (!is_odd_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not an odd prime");
    }
    if (p > limit) {
        throw BruteLimit("p = " + std::to_string(p) +
                         " exceeds brute-force limit " + std::to_string(limit));
    }
}

// Plain-integer quaternion for the hot loops.
using Quat = std::array<i64, 4>;

Quat mul(const Quat& a, const Quat& b, i64 p) {
    Quat r{a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
           a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
           a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
           a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    for (i64& c : r) {
        c %= p;
        if (c < 0) c += p;
    }
    return r;
}

int resolve_threads() {
    if (const char* env = std::getenv("QHP_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(c0, partial) for each slice c0 in [0, p), merging the partial
// results in slice order.
template <typename Partial, typename SliceFn>
Partial run_sliced(i64 p, SliceFn fn) {
    int workers = resolve_threads();
    if (workers > p) workers = static_cast<int>(p);
    std::vector<Partial> partials(static_cast<size_t>(p));
    if (workers <= 1) {
        for (i64 c0 = 0; c0 < p; ++c0) fn(c0, partials[static_cast<size_t>(c0)]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (i64 c0 = w; c0 < p; c0 += workers) {
                    fn(c0, partials[static_cast<size_t>(c0)]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    Partial merged{};
    for (const Partial& part : partials) merged.merge(part);
    return merged;
}

struct CountPartial {
    i64 count = 0;
    void merge(const CountPartial& other) { count += other.count; }
};

// Minimal m in [2, cap] with q^m = q, or 0 if none within cap.
i64 min_potency_index(const Quat& q, i64 p, i64 cap) {
    Quat power = mul(q, q, p);
    for (i64 m = 2; m <= cap; ++m) {
        if (power == q) return m;
        power = mul(power, q, p);
    }
    return 0;
}

// Precomputed minimal indices for scalar elements, so the p scalars skip the
// quaternion products (0 maps to 2, s != 0 to order(s) + 1).
std::vector<i64> scalar_indices(i64 p) {
    std::vector<i64> idx(static_cast<size_t>(p));
    idx[0] = 2;
    for (i64 s = 1; s < p; ++s) {
        idx[static_cast<size_t>(s)] = mult_order(Fp(s, p)) + 1;
    }
    return idx;
}

}  // namespace

i64 SpectrumTable::total() const {
    i64 sum = nilpotent_nonzero + overflow;
    for (const auto& [k, count] : by_index) sum += count;
    return sum;
}

i64 oracle_count_kpotent(i64 p, i64 k, i64 limit) {
    require_within_limit(p, limit);
    if (k < 2 || k > p * p + 1) {
        throw InvalidIndex("k = " + std::to_string(k) + " out of range [2, " +
                           std::to_string(p * p + 1) + "] for p = " + std::to_string(p));
    }
    const std::vector<i64> scalars = scalar_indices(p);
    auto result = run_sliced<CountPartial>(p, [&](i64 c0, CountPartial& out) {
        for (i64 c1 = 0; c1 < p; ++c1) {
            for (i64 c2 = 0; c2 < p; ++c2) {
                for (i64 c3 = 0; c3 < p; ++c3) {
                    if (c1 == 0 && c2 == 0 && c3 == 0) {
                        if (scalars[static_cast<size_t>(c0)] == k) ++out.count;
                        continue;
                    }
                    Quat q{c0, c1, c2, c3};
                    if (min_potency_index(q, p, k) == k) ++out.count;
                }
            }
        }
    });
    return result.count;
}

i64 oracle_count_roots(i64 p, i64 k, i64 limit) {
    require_within_limit(p, limit);
    if (k < 1) {
        throw InvalidIndex("k must be >= 1, got " + std::to_string(k));
    }
    const Quat one{1, 0, 0, 0};
    auto result = run_sliced<CountPartial>(p, [&](i64 c0, CountPartial& out) {
        for (i64 c1 = 0; c1 < p; ++c1) {
            for (i64 c2 = 0; c2 < p; ++c2) {
                for (i64 c3 = 0; c3 < p; ++c3) {
                    Quat q{c0, c1, c2, c3};
                    Quat power = one;
                    for (i64 m = 0; m < k; ++m) power = mul(power, q, p);
                    if (power == one) ++out.count;
                }
            }
        }
    });
    return result.count;
}

SpecialCensuses oracle_special_censuses(i64 p, i64 limit) {
    require_within_limit(p, limit);
    struct Partial {
        SpecialCensuses c{0, 0, 0, 0};
        void merge(const Partial& other) {
            c.nilpotent += other.c.nilpotent;
            c.idempotent += other.c.idempotent;
            c.zero_divisor += other.c.zero_divisor;
            c.zero_norm_nonzero_trace += other.c.zero_norm_nonzero_trace;
        }
    };
    auto result = run_sliced<Partial>(p, [&](i64 c0, Partial& out) {
        const Quat zero{0, 0, 0, 0};
        for (i64 c1 = 0; c1 < p; ++c1) {
            for (i64 c2 = 0; c2 < p; ++c2) {
                for (i64 c3 = 0; c3 < p; ++c3) {
                    Quat q{c0, c1, c2, c3};
                    Quat sq = mul(q, q, p);
                    if (sq == zero) ++out.c.nilpotent;
                    if (sq == q) ++out.c.idempotent;
                    i64 norm = (c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3) % p;
                    i64 trace = (2 * c0) % p;
                    if (norm == 0) ++out.c.zero_divisor;
                    if (norm == 0 && trace != 0) ++out.c.zero_norm_nonzero_trace;
                }
            }
        }
    });
    return result.c;
}

SpectrumTable oracle_spectrum(i64 p, i64 cap, i64 limit) {
    require_within_limit(p, limit);
    if (cap < 2) {
        throw InvalidIndex("cap must be >= 2, got " + std::to_string(cap));
    }
    struct Partial {
        i64 nilpotent_nonzero = 0;
        i64 overflow = 0;
        std::map<i64, i64> by_index;
        void merge(const Partial& other) {
            nilpotent_nonzero += other.nilpotent_nonzero;
            overflow += other.overflow;
            for (const auto& [k, count] : other.by_index) by_index[k] += count;
        }
    };
    const std::vector<i64> scalars = scalar_indices(p);
    auto result = run_sliced<Partial>(p, [&](i64 c0, Partial& out) {
        const Quat zero{0, 0, 0, 0};
        for (i64 c1 = 0; c1 < p; ++c1) {
            for (i64 c2 = 0; c2 < p; ++c2) {
                for (i64 c3 = 0; c3 < p; ++c3) {
                    if (c1 == 0 && c2 == 0 && c3 == 0) {
                        ++out.by_index[scalars[static_cast<size_t>(c0)]];
                        continue;
                    }
                    Quat q{c0, c1, c2, c3};
                    if (mul(q, q, p) == zero) {
                        ++out.nilpotent_nonzero;
                        continue;
                    }
                    i64 k = min_potency_index(q, p, cap);
                    if (k == 0) {
                        ++out.overflow;
                    } else {
                        ++out.by_index[k];
                    }
                }
            }
        }
    });
    SpectrumTable table{p, cap, result.nilpotent_nonzero, std::move(result.by_index),
                        result.overflow};
    return table;
}

}  // namespace qhp
