#include <doctest.h>

#include "qhp/report.hpp"

using namespace qhp;

TEST_CASE("verification agrees for the worked primes") {
    for (i64 p : {3, 5, 11}) {
        auto records = run_verification(p, 5);
        CHECK(records.size() == 4);
        CHECK(all_agree(records));
    }
}

TEST_CASE("verification works without the oracle") {
    VerificationOptions opts;
    opts.include_brute = false;
    auto records = run_verification(97, 5, opts);
    CHECK(all_agree(records));
    for (const auto& rec : records) {
        for (const auto& [name, value] : rec.values) {
            CHECK(name != "oracle");
        }
    }
}

TEST_CASE("the published p=29 5-potent value is flagged, not matched") {
    auto records = run_verification(29, 5);
    CHECK(all_agree(records));  // closed, general, oracle agree with each other
    const VerificationRecord& k5 = records.back();
    CHECK(k5.k == 5);
    bool found = false;
    for (const auto& note : k5.notes) {
        if (note.find("4872") != std::string::npos) found = true;
    }
    CHECK(found);
    for (const auto& [name, value] : k5.values) {
        if (name != "paper-literal") CHECK(value == 6092);
    }
}

TEST_CASE("census table ordering and emptiness") {
    auto rows = census_table({7, 3}, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].p == 3);
    CHECK(*rows[0].k == 2);
    CHECK(rows[1].count == 25);
    CHECK(rows[2].p == 7);
    CHECK(rows[3].count == 113);
    CHECK(census_table({}, 5).empty());
}
