#include <doctest.h>

#include <algorithm>
#include <set>

#include "pturan/circuit_graph.hpp"
#include "pturan/constructions.hpp"
#include "pturan/plane_graph.hpp"
#include "test_support.hpp"

using namespace pturan;

namespace {

const char* kK4Plg =
    "PLG 1\n"
    "n=4\n"
    "0: 1 3 2\n"
    "1: 3 0 2\n"
    "2: 1 0 3\n"
    "3: 2 0 1\n"
    "outer: 1 3 2\n";

}  // namespace

TEST_CASE("parse_plg accepts K4 and round-trips") {
    PlaneGraph g = parse_plg(kK4Plg);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.serialize() == kK4Plg);

    // whitespace and comments normalize away
    std::string noisy = "# drawing of K4\nPLG 1\n\nn=4\n0:  1 3 2\n1: 3 0 2 # fan\n2: 1 0 3\n3: 2 0 1\nouter: 1 3 2\n";
    CHECK(parse_plg(noisy).serialize() == kK4Plg);
    CHECK(parse_plg(parse_plg(noisy).serialize()).serialize() == kK4Plg);
}

TEST_CASE("parse_plg rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_plg("PLG 2\nn=1\n0:\n"), ParseError);
    CHECK_THROWS_WITH_AS(parse_plg("PLG 1\nn=4\n0: 1 5\n1: 0\n2: 3\n3: 2\n"),
                         doctest::Contains("label out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_plg("PLG 1\nn=3\n0: 1 1\n1: 0 0\n2:\n"),
                         doctest::Contains("repeated neighbor"), ParseError);
    CHECK_THROWS_WITH_AS(parse_plg("PLG 1\nn=3\n0: 1\n1:\n2:\n"),
                         doctest::Contains("asymmetric"), ParseError);
    CHECK_THROWS_WITH_AS(parse_plg("PLG 1\nn=4\n0: 1\n1: 0\n2: 3\n3: 2\n"),
                         doctest::Contains("disconnected"), ParseError);
    try {
        parse_plg("PLG 1\nn=4\n0: 1 5\n1: 0\n2: 3\n3: 2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("face tracing: tetrahedron and square") {
    PlaneGraph k4 = parse_plg(kK4Plg);
    const FaceSet& fs = k4.faces();
    CHECK(fs.size() == 4);
    for (const Walk& w : fs.walks) CHECK(w.size() == 3);
    CHECK(k4.vertex_count() - k4.edge_count() + fs.size() == 2);

    PlaneGraph sq = testing::square();
    CHECK(sq.faces().size() == 2);
    for (const Walk& w : sq.faces().walks) CHECK(w.size() == 4);
}

TEST_CASE("directed edges partition into faces") {
    for (const PlaneGraph& g : {parse_plg(kK4Plg), testing::cube(), figure2_fixture()}) {
        std::set<std::pair<int, int>> seen;
        int total = 0;
        for (const Walk& w : g.faces().walks) {
            int k = static_cast<int>(w.size());
            for (int i = 0; i < k; ++i) {
                CHECK(seen.insert({w[i], w[(i + 1) % k]}).second);
                ++total;
            }
        }
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("non-planar rotation systems are rejected") {
    // K5 has no sphere embedding, so every rotation system fails Euler
    std::vector<std::vector<int>> rot(5);
    for (int v = 0; v < 5; ++v)
        for (int w = 0; w < 5; ++w)
            if (w != v) rot[v].push_back(w);
    CHECK_THROWS_WITH_AS(PlaneGraph(rot), doctest::Contains("not planar"), Error);
}

TEST_CASE("outer face must match a traced face") {
    CHECK_THROWS_AS(PlaneGraph({{1, 3, 2}, {3, 0, 2}, {1, 0, 3}, {2, 0, 1}}, Walk{0, 1, 2, 3}),
                    Error);
    // reflections of a face are accepted
    PlaneGraph g({{1, 3, 2}, {3, 0, 2}, {1, 0, 3}, {2, 0, 1}}, Walk{2, 3, 1});
    CHECK(g.has_outer());
}

TEST_CASE("deficiency: K4, square, figure 2") {
    PlaneGraph k4 = parse_plg(kK4Plg);
    CircuitGraph c1 = validate_circuit_graph(k4, k4.outer_walk());
    CHECK(deficiency_m(c1) == 0);

    PlaneGraph sq = testing::square();
    CircuitGraph c2 = validate_circuit_graph(sq, sq.outer_walk());
    CHECK(deficiency_m(c2) == 1);

    PlaneGraph f2 = figure2_fixture();
    CircuitGraph c3 = validate_circuit_graph(f2, f2.outer_walk());
    CHECK(deficiency_m(c3) == 0);
}

TEST_CASE("interior_of_cycle") {
    PlaneGraph k4 = parse_plg(kK4Plg);

    SUBCASE("facial triangle yields the bare triangle") {
        Sub sub = interior_of_cycle(k4, {0, 1, 2});
        CHECK(sub.graph.vertex_count() == 3);
        CHECK(sub.graph.edge_count() == 3);
    }
    SUBCASE("outer cycle yields the whole graph") {
        Sub sub = interior_of_cycle(k4, k4.outer_walk());
        CHECK(sub.graph.vertex_count() == 4);
        CHECK(sub.graph.edge_count() == 6);
        for (int i = 0; i < 4; ++i) CHECK(sub.to_host[i] == i);
    }
    SUBCASE("figure 2 inner triangle contains the center") {
        PlaneGraph f2 = figure2_fixture();
        Sub sub = interior_of_cycle(f2, {1, 2, 3});
        CHECK(sub.graph.vertex_count() == 4);
        CHECK(sub.graph.edge_count() == 6);
        std::vector<int> hosts = sub.to_host;
        std::sort(hosts.begin(), hosts.end());
        CHECK(hosts == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("not a cycle") {
        CHECK_THROWS_AS(interior_of_cycle(k4, {0, 1}), Error);
        CHECK_THROWS_AS(interior_of_cycle(testing::square(), {0, 1, 3}), Error);
    }
}

TEST_CASE("cuts") {
    PlaneGraph k4 = parse_plg(kK4Plg);
    CHECK(cuts(k4, 1).empty());
    CHECK(cuts(k4, 2).empty());

    PlaneGraph bt = testing::bowtie();
    CHECK(cuts(bt, 1) == std::vector<std::vector<int>>{{0}});

    PlaneGraph sq = testing::square();
    CHECK(cuts(sq, 1).empty());
    CHECK(cuts(sq, 2) == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
}

TEST_CASE("validate_circuit_graph") {
    PlaneGraph k4 = parse_plg(kK4Plg);
    for (const Walk& f : k4.faces().walks) CHECK_NOTHROW(validate_circuit_graph(k4, f));

    PlaneGraph bt = testing::bowtie();
    auto r = check_circuit_graph(bt, {1, 2, 0});
    REQUIRE(std::holds_alternative<CircuitViolation>(r));
    CHECK(std::get<CircuitViolation>(r).kind == CircuitViolation::Kind::NotTwoConnected);

    auto nf = check_circuit_graph(k4, {0, 1, 2, 3});
    REQUIRE(std::holds_alternative<CircuitViolation>(nf));
    CHECK(std::get<CircuitViolation>(nf).kind == CircuitViolation::Kind::NotFacial);

    CircuitGraph chain = sharp_chain(4, 1);
    CHECK_NOTHROW(validate_circuit_graph(chain.graph(), chain.outer_cycle()));
}

TEST_CASE("deficiency equals interior face deficiency on random circuit graphs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        CircuitGraph cg = testing::random_circuit_graph(6 + trial % 7, trial % 2, rng);
        CHECK(deficiency_m(cg) == interior_face_deficiency(cg.graph()));
    }
}

TEST_CASE("outer_walk_of_subgraph finds the enclosing face") {
    PlaneGraph f2 = figure2_fixture();
    // the K4 core 0..3 sits inside the triangle 1,2,3
    std::vector<std::pair<int, int>> core{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Walk w = outer_walk_of_subgraph(f2, core);
    std::set<int> verts(w.begin(), w.end());
    CHECK(verts == std::set<int>{1, 2, 3});
}
