#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnspectra/families.hpp"
#include "cnspectra/verify.hpp"
#include "test_util.hpp"

using namespace cns;

TEST_CASE("theorem selection parsing") {
    auto s = TheoremSelection::parse("thm1,appB");
    CHECK(s.thm1);
    CHECK(s.appB);
    CHECK_FALSE(s.thm2);
    CHECK(TheoremSelection::parse("all").l023);
    CHECK(TheoremSelection::parse("all").appB_members);
    CHECK_FALSE(TheoremSelection::parse("standard").appB_members);
    CHECK(TheoremSelection::parse("standard").thm1);
    CHECK_THROWS(TheoremSelection::parse("thmX"));
}

TEST_CASE("non-qualifying graphs are skipped, not failed") {
    TheoremSelection sel;
    sel.thm1 = true;
    VerificationReport rep = verify_theorems({complete_graph(5)}, sel, 1);
    CHECK(rep.checks.at("thm1").skipped == 1);
    CHECK(rep.checks.at("thm1").checked == 0);
    CHECK(rep.ok());
}

TEST_CASE("order-6 sweep is clean and thread-count invariant") {
    TheoremSelection sel = TheoremSelection::standard();
    VerificationReport one = verify_built_in(6, sel, 1);
    VerificationReport two = verify_built_in(6, sel, 2);
    CHECK(one.ok());
    CHECK(two.ok());
    for (const auto& [name, st] : one.checks) {
        CHECK(two.checks.at(name).checked == st.checked);
        CHECK(two.checks.at(name).skipped == st.skipped);
        CHECK(two.checks.at(name).mismatches == st.mismatches);
    }
}

TEST_CASE("order-8 sweeps of the polyhedral and connectivity-2 statements") {
    // Q-class polyhedra are exactly B_4, B_l, B'_l (l >= 5); the
    // connectivity-2 rows and the {1}/{0,1} rows hold across the full
    // order-8 census.
    TheoremSelection sel;
    sel.appA = sel.exc = sel.l023 = sel.rows01 = true;
    VerificationReport rep = verify_built_in(8, sel, 2);
    CHECK(rep.ok());
    CHECK(rep.checks.at("appA").checked == 301);  // polyhedra up to order 8
    CHECK(rep.checks.at("exc").checked > 0);
    CHECK(rep.checks.at("l023").checked > 0);
}

TEST_CASE("the member-annotation sweep reports exactly the 3-sun up to order 6") {
    TheoremSelection sel;
    sel.appB_members = true;
    VerificationReport rep = verify_built_in(6, sel, 2);
    CHECK(rep.checks.at("appB_members").mismatches == 1);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("report merge is additive") {
    TheoremSelection sel;
    sel.l4cy = true;
    VerificationReport a = verify_theorems({complete_graph(4), cycle_graph(4)}, sel, 1);
    VerificationReport b = verify_theorems({path_graph(3)}, sel, 1);
    a.merge(b);
    CHECK(a.checks.at("l4cy").checked == 3);
}
