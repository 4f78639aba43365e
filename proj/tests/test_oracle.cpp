#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "cnspectra/brute.hpp"
#include "cnspectra/canonical.hpp"
#include "cnspectra/derive.hpp"
#include "cnspectra/enumerate.hpp"
#include "cnspectra/errors.hpp"
#include "cnspectra/families.hpp"
#include "cnspectra/graph6.hpp"
#include "cnspectra/recognition.hpp"
#include "cnspectra/sha256.hpp"
#include "test_util.hpp"

using namespace cns;

namespace {
// The order-10 derivation takes several seconds; share one run across cases.
const std::map<int, Certificate>& derived_once() {
    static const std::map<int, Certificate> m = derive_s_graphs(10);
    return m;
}
}  // namespace

TEST_CASE("census counts match the published tallies") {
    // A000088 / A001349 / A003094 / A000109 / A000944.
    const long all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const long connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    const long planar_connected[] = {1, 1, 2, 6, 20, 99, 646, 5974};
    for (int p = 1; p <= 8; ++p) {
        GraphFilter none, conn, pc;
        conn.connected = true;
        pc.connected = pc.planar = true;
        CHECK(static_cast<long>(enumerate_graphs(p, none).size()) == all[p - 1]);
        CHECK(static_cast<long>(enumerate_graphs(p, conn).size()) == connected[p - 1]);
        CHECK(static_cast<long>(enumerate_graphs(p, pc).size()) == planar_connected[p - 1]);
    }
    const long triangulations[] = {1, 1, 2, 5, 14};  // orders 4..8
    const long polyhedra[] = {1, 2, 7, 34, 257};
    for (int p = 4; p <= 8; ++p) {
        GraphFilter tri, poly;
        tri.triangulation = true;
        poly.polyhedral = true;
        CHECK(static_cast<long>(enumerate_graphs(p, tri).size()) == triangulations[p - 4]);
        CHECK(static_cast<long>(enumerate_graphs(p, poly).size()) == polyhedra[p - 4]);
    }
    CHECK_THROWS_AS(enumerate_graphs(0, GraphFilter{}), InputError);
    CHECK_THROWS_AS(enumerate_graphs(10, GraphFilter{}), InputError);
}

TEST_CASE("census matches an independent labelled recount, orders 1..6") {
    for (int p = 1; p <= 6; ++p) {
        const int bits = p * (p - 1) / 2;
        std::set<std::string> classes;
        for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g(p);
            int bit = 0;
            for (int v = 1; v < p; ++v)
                for (int u = 0; u < v; ++u, ++bit)
                    if (mask & (1u << bit)) g.add_edge(u, v);
            classes.insert(certificate(g).g6);
        }
        CHECK(classes.size() == enumerate_graphs(p, GraphFilter{}).size());
    }
}

TEST_CASE("triangulation filter means q = 3p - 6") {
    GraphFilter tri;
    tri.triangulation = true;
    for (const Graph& g : enumerate_graphs(7, tri)) {
        CHECK(g.size() == 15);
        CHECK(is_connected(g));
        CHECK(is_planar(g));
    }
}

TEST_CASE("enumeration is deterministic and isomorph-free") {
    GraphFilter pc;
    pc.connected = pc.planar = true;
    auto a = enumerate_graphs(6, pc);
    auto b = enumerate_graphs(6, pc);
    REQUIRE(a.size() == b.size());
    std::set<std::string> certs;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(certs.insert(certificate(a[i]).g6).second);
    }
}

TEST_CASE("brute profile equals the bit-set profile on the order-6 census") {
    for (int p = 1; p <= 6; ++p)
        for (const Graph& g : enumerate_graphs(p, GraphFilter{}))
            CHECK(brute_profile(g).by_n == profile(g).by_n);
}

TEST_CASE("graph6 round trip across the order-7 census") {
    for (int p = 1; p <= 7; ++p)
        for (const Graph& g : enumerate_graphs(p, GraphFilter{}))
            CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("derivation pins the committed S-graph data") {
    const auto& derived = derived_once();
    REQUIRE(derived.size() == 7);
    for (int k = 3; k <= 9; ++k) {
        REQUIRE(derived.count(k));
        CHECK(derived.at(k).g6 == s_graph_g6(k));
    }

    // Committed data file: "name order g6 sha256-of-the-line-prefix".
    std::ifstream in(std::string(CNSPECTRA_DATA_DIR) + "/s_graphs.cert");
    REQUIRE(in.good());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string name, g6, sha;
        int order = 0;
        REQUIRE((fields >> name >> order >> g6 >> sha));
        REQUIRE(name.substr(0, 2) == "S_");
        int k = std::stoi(name.substr(2));
        CHECK(derived.at(k).g6 == g6);
        CHECK(parse_graph6(g6).order() == order);
        CHECK(sha256_hex(name + " " + std::to_string(order) + " " + g6) == sha);
        ++rows;
    }
    CHECK(rows == 7);
}

TEST_CASE("derivation is stable across reruns") {
    CHECK(derive_s_graphs(10) == derived_once());
    CHECK_THROWS_AS(derive_s_graphs(7), InputError);
    // Below the order of S_3 / S_4 the shortfall is reported, not guessed.
    CHECK_THROWS_AS(derive_s_graphs(8), CapabilityError);
}

TEST_CASE("derived S-graph properties") {
    CHECK(s_graph(3).order() == 9);
    CHECK(s_graph(4).order() == 10);
    CHECK(s_graph(5).order() == 7);
    CHECK(s_graph(6).order() == 7);
    CHECK(s_graph(7).order() == 8);
    CHECK(s_graph(8).order() == 8);
    CHECK(s_graph(9).order() == 8);
    for (int k = 3; k <= 9; ++k) {
        Graph g = s_graph(k);
        CHECK(is_polyhedron(g));
        CHECK(certificate(g).g6 == s_graph_g6(k));  // data is canonical
    }
    // The two triangulation exceptions keep 0 out of A_3.
    CHECK_FALSE(brute_a_set(s_graph(5), 3).values.count(0));
    CHECK_FALSE(brute_a_set(s_graph(7), 3).values.count(0));
    CHECK(brute_a_set(s_graph(3), 2).values == cnstest::ints({2, 3}));
    CHECK(brute_a_set(s_graph(4), 2).values == cnstest::ints({0, 2, 3}));
    CHECK_THROWS_AS(s_graph(2), InputError);
    CHECK_THROWS_AS(s_graph(10), InputError);
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
