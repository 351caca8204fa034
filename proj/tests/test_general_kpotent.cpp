#include <doctest.h>

#include <vector>

#include "qhp/closed_forms.hpp"
#include "qhp/general_kpotent.hpp"

using namespace qhp;

TEST_CASE("reduction steps") {
    CharPair pair{Fp(1, 5), Fp(1, 5)};
    ReductionState s = reduce_step(initial_reduction_state(5), pair);
    CHECK(s.m == 2);
    CHECK(s.a.value() == 1);
    CHECK(s.b.value() == 4);  // X^2 = X - 1

    CharPair imag{Fp(0, 3), Fp(1, 3)};  // X^2 = -1
    ReductionState t = initial_reduction_state(3);
    for (int step = 0; step < 4; ++step) t = reduce_step(t, imag);
    CHECK(t.m == 5);
    CHECK(t.a.value() == 1);
    CHECK(t.b.value() == 0);  // X^5 = X

    CharPair idem{Fp(1, 5), Fp(0, 5)};  // X^2 = X
    ReductionState u = reduce_step(initial_reduction_state(5), idem);
    CHECK(u.a.value() == 1);
    CHECK(u.b.value() == 0);
}

TEST_CASE("minimal index per class") {
    CHECK(charpoly_min_index({Fp(0, 3), Fp(1, 3)}, 10) == 5);
    CHECK(charpoly_min_index({Fp(1, 5), Fp(0, 5)}, 10) == 2);
    CHECK(charpoly_min_index({Fp(1, 7), Fp(0, 7)}, 10) == 2);
    CHECK(charpoly_min_index({Fp(2, 3), Fp(1, 3)}, 10) == 4);  // unipotent class
    CHECK_FALSE(charpoly_min_index({Fp(1, 3), Fp(2, 3)}, 4).has_value());
    CHECK_THROWS_AS(charpoly_min_index({Fp(0, 5), Fp(0, 5)}, 10), NilpotentClass);
}

TEST_CASE("zero-norm classes reduce to the trace's multiplicative order") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        for (i64 t = 1; t < p; ++t) {
            CharPair pair{Fp(t, p), Fp(0, p)};
            CHECK(charpoly_min_index(pair, p * p + 1) ==
                  mult_order(Fp(t, p)) + 1);
        }
    }
}

TEST_CASE("nonscalar class populations") {
    CHECK(nonscalar_class_count({Fp(2, 3), Fp(1, 3)}) == 8);
    CHECK(nonscalar_class_count({Fp(1, 5), Fp(0, 5)}) == 30);
    CHECK(nonscalar_class_count({Fp(0, 3), Fp(1, 3)}) == 6);
}

TEST_CASE("general census") {
    CHECK(count_kpotent(3, 4) == 8);
    CHECK(count_kpotent(13, 5) == 1276);
    CHECK(count_kpotent(3, 9) == 12);
    CHECK(count_kpotent(3, 6) == 0);
    CHECK_THROWS_AS(count_kpotent(3, 1), InvalidIndex);
    CHECK_THROWS_AS(count_kpotent(3, 11), InvalidIndex);
}

TEST_CASE("partition of all p^4 elements") {
    for (i64 p : {3, 5, 7}) {
        i64 total = p * p - 1;  // nonzero nilpotents
        for (i64 k = 2; k <= p * p + 1; ++k) total += count_kpotent(p, k);
        CHECK(total == p * p * p * p);
    }
}

TEST_CASE("conjugation pairs classes under t -> -t") {
    // x -> -x maps a class to its negated-trace partner, so paired classes
    // have equal populations.
    for (i64 p : {5, 13}) {
        for (i64 t = 1; t < p; ++t) {
            for (i64 n = 0; n < p; ++n) {
                CharPair a{Fp(t, p), Fp(n, p)};
                CharPair b{Fp(-t, p), Fp(n, p)};
                CHECK(nonscalar_class_count(a) == nonscalar_class_count(b));
            }
        }
    }
}

TEST_CASE("literal census readings") {
    LiteralCensus tri = literal_kpotent_count(3, 3);
    CHECK(tri.with_scalars == 25);

    LiteralCensus five = literal_kpotent_count(5, 5);
    CHECK(five.with_scalars == 212);

    // The scalar-free reading omits the scalar solutions of the nonzero-trace
    // branch; both totals are exposed.
    LiteralCensus four = literal_kpotent_count(7, 4);
    CHECK(four.scalar_free == 280);
    CHECK(four.with_scalars == 282);
    CHECK(four.with_scalars == closed_kpotent_count(7, 4));

    CHECK_THROWS_AS(literal_kpotent_count(5, 2), InvalidIndex);
}

TEST_CASE("root counts") {
    RootCountResult r34 = count_roots(3, 4);
    CHECK(r34.total == 20);

    RootCountResult r36 = count_roots(3, 6);
    CHECK(r36.total == 30);
    CHECK(r36.per_divisor.at(1) == 1);
    CHECK(r36.per_divisor.at(2) == 13);
    CHECK(r36.per_divisor.at(3) == 8);
    CHECK(r36.per_divisor.at(6) == 8);

    CHECK(count_roots(5, 4).total == 184);
    CHECK(count_roots(7, 1).total == 1);
    CHECK(count_roots(11, 1).total == 1);
}

TEST_CASE("divisor-sum route") {
    CHECK(divisor_sum_root_count(3, 4) == 20);
    CHECK(divisor_sum_root_count(5, 4) == 184);
    CHECK(divisor_sum_root_count(3, 2) == 14);
}

TEST_CASE("both root-count routes agree") {
    for (i64 p : {3, 5, 7, 11, 13}) {
        for (i64 k = 1; k <= 12; ++k) {
            CHECK(divisor_sum_root_count(p, k) == count_roots(p, k).total);
        }
    }
}

TEST_CASE("roots of minimal exponent d populate the (d+1)-index classes") {
    for (i64 p : {5, 7}) {
        for (i64 t = 0; t < p; ++t) {
            for (i64 n = 1; n < p; ++n) {
                CharPair pair{Fp(t, p), Fp(n, p)};
                ReductionState state = initial_reduction_state(p);
                for (i64 m = 1; m <= p * p; ++m) {
                    state = reduce_step(state, pair);
                    if (state.a.is_zero() && state.b.value() == 1) {
                        CHECK(charpoly_min_index(pair, p * p + 1) == state.m + 1);
                        break;
                    }
                }
            }
        }
    }
}
