#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnspectra/brute.hpp"
#include "cnspectra/enumerate.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/recognition.hpp"
#include "test_util.hpp"

#ifdef CNSPECTRA_HAVE_BOOST
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#endif

using namespace cns;

TEST_CASE("planarity anchors") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(cnstest::petersen()));
    CHECK(is_planar(cube_graph()));
    CHECK(is_planar(icosahedron_graph()));
    CHECK(is_planar(complete_bipartite(2, 9)));
    CHECK(is_planar(Graph(0)));
    CHECK(is_planar(path_graph(9)));

    // K_5 minus any edge is planar; so is K_{3,3} minus an edge.
    Graph k5e = complete_graph(5);
    Graph k5 = k5e;  // keep the full one
    Graph m(5);
    for (auto [u, v] : k5e.edges())
        if (!(u == 0 && v == 1)) m.add_edge(u, v);
    CHECK(is_planar(m));

    // A planar graph with a K_{3,3} subdivision after one more edge.
    Graph sub(7);
    for (auto [u, v] : complete_bipartite(3, 3).edges()) {
        if (u == 0 && v == 3) continue;
        sub.add_edge(u, v);
    }
    sub.add_edge(0, 6);
    CHECK(is_planar(sub));
    sub.add_edge(6, 3);  // completes the subdivision
    CHECK_FALSE(is_planar(sub));
}

#ifdef CNSPECTRA_HAVE_BOOST
namespace {
bool boost_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(static_cast<size_t>(g.order()));
    for (auto [u, v] : g.edges()) boost::add_edge(static_cast<size_t>(u), static_cast<size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}
}  // namespace

TEST_CASE("planarity agrees with boyer_myrvold on every graph up to order 7") {
    for (int p = 1; p <= 7; ++p)
        for (const Graph& g : enumerate_graphs(p, GraphFilter{}))
            CHECK(is_planar(g) == boost_planar(g));
}

TEST_CASE("planarity agrees with boyer_myrvold on random order-8..11 graphs") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = cnstest::random_graph(rng.range(8, 11), rng, rng.range(20, 60));
        CHECK(is_planar(g) == boost_planar(g));
    }
}
#endif

TEST_CASE("connectivity classes") {
    CHECK(connectivity_class(path_graph(3)) == ConnectivityClass::One);
    CHECK(connectivity_class(cycle_graph(4)) == ConnectivityClass::Two);
    CHECK(connectivity_class(complete_graph(4)) == ConnectivityClass::ThreePlus);
    CHECK(connectivity_class(complete_graph(2)) == ConnectivityClass::One);
    CHECK(connectivity_class(complete_graph(3)) == ConnectivityClass::Two);
    // kappa(K_1) = 0 lands in the Disconnected bucket by convention.
    CHECK(connectivity_class(Graph(1)) == ConnectivityClass::Disconnected);
    CHECK(is_connected(Graph(1)));
    CHECK(connectivity_class(disjoint_union(Graph(1), Graph(1))) == ConnectivityClass::Disconnected);
    CHECK(connectivity_class(cube_graph()) == ConnectivityClass::ThreePlus);
    CHECK(connectivity_class(t_prime_graph(4)) == ConnectivityClass::Two);
}

TEST_CASE("outerplanarity") {
    CHECK(is_outerplanar(path_graph(7)));
    CHECK(is_outerplanar(disjoint_union(path_graph(3), path_graph(4))));
    CHECK(is_outerplanar(cycle_graph(6)));
    CHECK(is_outerplanar(cnstest::three_sun()));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(complete_bipartite(2, 3)));
    CHECK_FALSE(is_outerplanar(cube_graph()));
    CHECK(is_outerplanar(Graph(0)));

    // Outerplanar implies planar on the whole order-7 census.
    for (int p = 1; p <= 7; ++p)
        for (const Graph& g : enumerate_graphs(p, GraphFilter{}))
            if (is_outerplanar(g)) CHECK(is_planar(g));
}

TEST_CASE("polyhedron predicate") {
    CHECK(is_polyhedron(complete_graph(4)));
    CHECK_FALSE(is_polyhedron(cycle_graph(5)));
    CHECK(is_polyhedron(b_prime_graph(5)));
    CHECK(is_polyhedron(icosahedron_graph()));
    CHECK_FALSE(is_polyhedron(cycle_graph(3)));
    CHECK_FALSE(is_polyhedron(complete_bipartite(2, 3)));
    for (int p = 4; p <= 7; ++p)
        for (const Graph& g : enumerate_graphs(p, GraphFilter{}))
            if (is_polyhedron(g)) {
                CHECK(is_planar(g));
                CHECK_FALSE(is_outerplanar(g));
            }
}

TEST_CASE("recognize_T") {
    auto k4 = recognize_T(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->m == 2);
    CHECK(k4->full_path);
    CHECK(k4->perfect_matching);  // T'_2 = T_2

    auto t3 = recognize_T(t_graph(3));
    REQUIRE(t3.has_value());
    CHECK(t3->m == 3);
    CHECK(t3->full_path);
    CHECK_FALSE(t3->perfect_matching);

    auto tp4 = recognize_T(t_prime_graph(4));
    REQUIRE(tp4.has_value());
    CHECK(tp4->m == 4);
    CHECK_FALSE(tp4->full_path);
    CHECK(tp4->perfect_matching);

    auto generic = recognize_T(t_class_member(5, 0b1011));  // P_3 + P_2
    REQUIRE(generic.has_value());
    CHECK(generic->m == 5);
    CHECK_FALSE(generic->full_path);
    CHECK_FALSE(generic->perfect_matching);

    CHECK_FALSE(recognize_T(b_graph(5)).has_value());  // apexes are non-adjacent
    CHECK_FALSE(recognize_T(cycle_graph(4)).has_value());
    CHECK_FALSE(recognize_T(complete_graph(5)).has_value());
}

TEST_CASE("recognize_Q") {
    CHECK(recognize_Q(b_graph(4)) == 3);
    CHECK(recognize_Q(complete_bipartite(2, 3)) == 3);
    for (int l = 5; l <= 9; ++l) {
        CHECK(recognize_Q(b_graph(l)) == 5);
        CHECK(recognize_Q(b_prime_graph(l)) == 5);
    }
    CHECK_FALSE(recognize_Q(b_graph(3)).has_value());
    CHECK_FALSE(recognize_Q(b_prime_graph(3)).has_value());
    CHECK_FALSE(recognize_Q(b_prime_graph(4)).has_value());
    CHECK_FALSE(recognize_Q(t_graph(5)).has_value());
    CHECK_FALSE(recognize_Q(complete_graph(5)).has_value());  // non-planar
}

TEST_CASE("recognize_family labels") {
    using Kind = FamilyLabel::Kind;
    CHECK(recognize_family(d_graph(2)) == FamilyLabel{Kind::D, 2});
    CHECK(recognize_family(cycle_graph(3)) == FamilyLabel{Kind::D, 1});
    CHECK(recognize_family(s_prime_graph()) == FamilyLabel{Kind::Sprime, 0});
    CHECK(recognize_family(cube_graph()) == FamilyLabel{Kind::Cube, 0});
    CHECK(recognize_family(icosahedron_graph()) == FamilyLabel{Kind::Icosahedron, 0});
    CHECK(recognize_family(cycle_graph(4)) == FamilyLabel{Kind::Cycle, 4});  // K_{2,2}
    CHECK(recognize_family(complete_bipartite(2, 3)) == FamilyLabel{Kind::K2l, 3});
    CHECK(recognize_family(b_graph(4)) == FamilyLabel{Kind::B, 4});
    CHECK(recognize_family(b_prime_graph(6)) == FamilyLabel{Kind::Bprime, 6});
    CHECK(recognize_family(t_graph(3)) == FamilyLabel{Kind::T, 3});  // = B_3
    CHECK(recognize_family(r_class_member(5, 0b1111)) == FamilyLabel{Kind::Rclass, 5});
    CHECK(recognize_family(path_graph(4)) == FamilyLabel{Kind::Path, 4});
    for (int k = 3; k <= 9; ++k) CHECK(recognize_family(s_graph(k)) == FamilyLabel{Kind::S, k});

    // A wheel is not an R member: removing the hub leaves a cycle, not paths.
    Graph w5 = join(cycle_graph(5), complete_graph(1));
    CHECK(recognize_family(w5) == FamilyLabel{Kind::None, 0});
    // Nor is the 3-sun: it has no dominating vertex at all.
    CHECK(recognize_family(cnstest::three_sun()) == FamilyLabel{Kind::None, 0});
}
