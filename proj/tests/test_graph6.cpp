#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/graph6.hpp"
#include "test_util.hpp"

using namespace cns;

TEST_CASE("hand-checked encodings") {
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(path_graph(2)) == "A_");
    CHECK(write_graph6(Graph(0)) == "?");

    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(write_graph6(g) == "D?{");

    // Header and trailing newline are tolerated.
    CHECK(write_graph6(parse_graph6(">>graph6<<D?{\n")) == "D?{");
}

TEST_CASE("parse errors carry a byte offset") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("byte 0"), InputError);
    CHECK_THROWS_AS(parse_graph6("D?"), InputError);     // truncated
    CHECK_THROWS_AS(parse_graph6("D?{?"), InputError);   // overlong
    CHECK_THROWS_AS(parse_graph6("D?\x1f"), InputError); // byte below 63
    CHECK_THROWS_AS(parse_graph6("A\x7f"), InputError);  // byte above 126
    CHECK_THROWS_AS(parse_graph6("Ao"), InputError);     // non-zero padding
}

TEST_CASE("round trip on random graphs up to 70 vertices") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = cnstest::random_graph(rng.range(0, 70), rng, rng.range(5, 95));
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);  // labelled equality, bit-exact round trip
    }
}

TEST_CASE("long order field kicks in above 62 vertices") {
    Graph g(63);
    g.add_edge(0, 62);
    std::string s = write_graph6(g);
    CHECK(static_cast<unsigned char>(s[0]) == 126);
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("edge list form") {
    Graph g = parse_edge_list("4; 0 1; 1 2; 2 3");
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    CHECK(parse_graph_auto("4; 0 1; 1 2; 2 3") == g);
    CHECK(parse_graph_auto("C~").order() == 4);
    CHECK_THROWS_AS(parse_edge_list("3; 0"), InputError);
}
