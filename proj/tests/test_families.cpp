#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnspectra/brute.hpp"
#include "cnspectra/canonical.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/recognition.hpp"
#include "cnspectra/spectrum.hpp"
#include "test_util.hpp"

using namespace cns;
using cnstest::ints;

TEST_CASE("construction anchors") {
    CHECK(certificate(t_graph(2)) == certificate(complete_graph(4)));
    CHECK(certificate(t_prime_graph(2)) == certificate(complete_graph(4)));

    Graph b4 = b_graph(4);
    CHECK(b4.order() == 6);
    CHECK(b4.degree_set() == ints({4}));
    CHECK(certificate(b_graph(3)) == certificate(t_graph(3)));

    Graph d3 = d_graph(3);
    CHECK(d3.order() == 7);
    CHECK(d3.size() == 9);
    CHECK(d3.degree_set() == ints({2, 6}));

    CHECK(cube_graph().degree_set() == ints({3}));
    CHECK(cube_graph().size() == 12);
    Graph ico = icosahedron_graph();
    CHECK(ico.order() == 12);
    CHECK(ico.size() == 30);
    CHECK(ico.degree_set() == ints({5}));

    Graph sp = s_prime_graph();
    CHECK(sp.order() == 6);
    CHECK(sp.size() == 8);

    CHECK_THROWS_AS(t_graph(1), InputError);
    CHECK_THROWS_AS(t_prime_graph(3), InputError);
    CHECK_THROWS_AS(b_graph(2), InputError);
    CHECK_THROWS_AS(d_graph(0), InputError);
    CHECK_THROWS_AS(t_class_member(5, 0b0110), InputError);  // isolated endpoints
}

TEST_CASE("t-class census") {
    CHECK(tclass_members(2).size() == 1);
    CHECK(tclass_members(3).size() == 1);
    CHECK(tclass_members(4).size() == 2);

    // Independent recount by brute-force isomorphism instead of certificates.
    for (int m = 2; m <= 7; ++m) {
        std::vector<Graph> reps;
        for (uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
            bool covered = true;
            for (int v = 0; v < m && covered; ++v) {
                bool left = v > 0 && (mask & (1u << (v - 1)));
                bool right = v + 1 < m && (mask & (1u << v));
                covered = left || right;
            }
            if (!covered) continue;
            Graph g = t_class_member(m, mask);
            bool fresh = true;
            for (const Graph& r : reps)
                if (brute_isomorphic(r, g)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(std::move(g));
        }
        CHECK(reps.size() == tclass_members(m).size());
    }
}

TEST_CASE("constructions pass their own recognizers") {
    for (int m = 2; m <= 10; ++m) {
        auto rec = recognize_T(t_graph(m));
        REQUIRE(rec.has_value());
        CHECK(rec->m == m);
        CHECK(rec->full_path);
    }
    for (int l = 2; l <= 10; l += 2) {
        auto rec = recognize_T(t_prime_graph(l));
        REQUIRE(rec.has_value());
        CHECK(rec->m == l);
        CHECK(rec->perfect_matching);
    }
    for (int m = 2; m <= 8; ++m)
        for (const Graph& g : tclass_members(m)) {
            auto rec = recognize_T(g);
            REQUIRE(rec.has_value());
            CHECK(rec->m == m);
        }
    using Kind = FamilyLabel::Kind;
    for (int l = 4; l <= 9; ++l) CHECK(recognize_family(b_graph(l)) == FamilyLabel{Kind::B, l});
    for (int l = 4; l <= 9; ++l)
        CHECK(recognize_family(b_prime_graph(l)) == FamilyLabel{Kind::Bprime, l});
    for (int l = 1; l <= 8; ++l) CHECK(recognize_family(d_graph(l)) == FamilyLabel{Kind::D, l});
    for (int l = 3; l <= 9; ++l)
        CHECK(recognize_family(complete_bipartite(2, l)) == FamilyLabel{Kind::K2l, l});
}

TEST_CASE("T_m profiles match the classification display") {
    for (int m = 3; m <= 8; ++m) {
        Profile pr = brute_profile(t_graph(m));
        CHECK(pr.at(3) == ints({1, 2}));
        for (int n = 4; n <= m; ++n) CHECK(pr.at(n) == ints({0, 1, 2}));
        CHECK(pr.at(m + 1) == ints({0, 1}));
        CHECK(pr.at(m + 2) == ints({0}));
    }
}

TEST_CASE("bipyramid profiles match the classification display") {
    for (int l = 5; l <= 8; ++l) {
        for (const Graph& g : {b_graph(l), b_prime_graph(l)}) {
            Profile pr = brute_profile(g);
            CHECK(pr.at(3) == ints({0, 1, 2}));
            CHECK(pr.at(4) == ints({0, 1, 2}));
            for (int n = 5; n <= l; ++n) CHECK(pr.at(n) == ints({0, 2}));
            CHECK(pr.at(l + 1) == ints({0}));
            CHECK(pr.at(l + 2) == ints({0}));
        }
        // The two families share all spectra from A_3 on (A_1, A_2 differ).
        Profile pb = brute_profile(b_graph(l));
        Profile pbp = brute_profile(b_prime_graph(l));
        for (int n = 3; n <= l + 2; ++n) CHECK(pb.at(n) == pbp.at(n));
    }
}

TEST_CASE("small spectra of special members") {
    for (int l = 1; l <= 6; ++l) CHECK(brute_a_set(d_graph(l), 2).values == ints({1}));
    CHECK(brute_a_set(s_prime_graph(), 2).values == ints({0, 2, 3}));
    CHECK(brute_a_set(cube_graph(), 2).values == ints({0, 2}));
    CHECK(brute_a_set(icosahedron_graph(), 2).values == ints({0, 2}));
    for (int l = 6; l <= 10; l += 2)
        CHECK(brute_a_set(t_prime_graph(l), 2).values == ints({2, l}));
}

TEST_CASE("family spec dispatch") {
    FamilySpec spec{FamilySpec::Kind::B, 4, 0};
    CHECK(certificate(construct_family(spec)) == certificate(b_graph(4)));
    spec = {FamilySpec::Kind::S, 5, 0};
    CHECK(construct_family(spec).order() == 7);
    spec = {FamilySpec::Kind::Rclass, 4, 0b101};
    CHECK(construct_family(spec).order() == 5);
}
