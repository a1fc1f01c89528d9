#include <doctest.h>

#include "semidom/formats.hpp"
#include "semidom/verify.hpp"

using namespace semidom;

TEST_CASE("claim ids") {
    CHECK(all_claims().size() == 14);
    for (ClaimId c : all_claims()) {
        const auto parsed = parse_claim(to_string(c));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == c);
    }
    CHECK_FALSE(parse_claim("thm9.9").has_value());
}

TEST_CASE("bounds beyond the budget are rejected") {
    VerifyBounds b;
    b.max_n = budget_max_order(ClaimId::MsdAtMostThree) + 1;
    CHECK_THROWS_AS(run_verification(ClaimId::MsdAtMostThree, b), Error);
    b.max_n = 0;
    CHECK_THROWS_AS(run_verification(ClaimId::MsdAtMostThree, b), Error);
}

TEST_CASE("every claim passes at small bounds") {
    VerifyBounds b;
    b.max_n = 8;
    b.graphs = {complete_graph(4), cycle_graph(5), wheel_graph(4), path_graph(2)};
    for (ClaimId c : all_claims()) {
        CAPTURE(to_string(c));
        const auto r = run_verification(c, b);
        CHECK(r.passed);
        CHECK(r.counterexamples.empty());
        CHECK(r.instances > 0);
    }
}

TEST_CASE("reports do not depend on the number of jobs") {
    VerifyBounds one;
    one.max_n = 10;
    VerifyBounds three = one;
    three.jobs = 3;
    for (ClaimId c : {ClaimId::MsdAtMostThree, ClaimId::DominationRatio, ClaimId::AlmostSemitotalSize}) {
        const auto a = run_verification(c, one);
        const auto b = run_verification(c, three);
        CHECK(a.passed == b.passed);
        CHECK(a.instances == b.instances);
        CHECK(a.stats == b.stats);
        CHECK(a.range == b.range);
    }
}
