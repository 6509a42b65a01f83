#include "doctest.h"
#include "helpers.hpp"
#include "lamps/graph.hpp"
#include "lamps/oracle.hpp"
#include "lamps/rng.hpp"
#include "lamps/vertex_vertex.hpp"

using namespace lamps;

TEST_CASE("single edge") {
    VertexSet x = solve_vv(path_graph(2));
    CHECK(x.count() == 1);
    CHECK(verify_vv(path_graph(2), x));
    auto best = min_vv(path_graph(2));
    REQUIRE(best.has_value());
    CHECK(best->count() == 1);
}

TEST_CASE("path on three vertices has the unique middle solution") {
    CHECK(solve_vv(path_graph(3)) == make_set(3, {1}));
    CHECK(min_vv(path_graph(3)) == make_set(3, {1}));
}

TEST_CASE("edgeless graph needs every vertex") {
    CHECK(solve_vv(Graph(3, {})) == make_set(3, {0, 1, 2}));
}

TEST_CASE("four-cycle needs all four vertices") {
    // every closed neighborhood has three members, so the full set works and
    // enumeration shows nothing smaller does
    auto best = min_vv(cycle_graph(4));
    REQUIRE(best.has_value());
    CHECK(*best == make_set(4, {0, 1, 2, 3}));
}

TEST_CASE("verification") {
    CHECK(verify_vv(path_graph(3), make_set(3, {1})));
    CHECK(!verify_vv(path_graph(3), Bitset(3)));
    CHECK(!verify_vv(path_graph(2), make_set(2, {0, 1})));
}

TEST_CASE("budget cap") {
    // closed neighborhoods of a complete graph coincide: rank 1, nullity n-1
    CHECK(!min_vv(complete_graph(30), 20).has_value());
    CHECK(min_vv(complete_graph(10), 20).has_value());
}

TEST_CASE("solver and minimizer agree with enumeration across the corpus") {
    for (const Graph& g : oracle::corpus(7)) {
        if (g.n() > 12) continue;
        VertexSet x = solve_vv(g);
        CHECK(verify_vv(g, x));
        auto all = oracle::brute_solutions_vv(g);
        REQUIRE(!all.empty());
        auto best = min_vv(g);
        REQUIRE(best.has_value());
        CHECK(verify_vv(g, *best));
        CHECK(best->count() == all.front().count());  // front is the canonical minimum
    }
}

TEST_CASE("a larger minimization case") {
    Graph g = random_graph(14, 0.4, 9);
    auto best = min_vv(g);
    REQUIRE(best.has_value());
    CHECK(best->count() == oracle::brute_solutions_vv(g).front().count());
}

TEST_CASE("edge problems reduce to the line graph") {
    // pressing any one star edge toggles all three
    auto star_best = min_ee(star_graph(4));
    REQUIRE(star_best.has_value());
    CHECK(star_best->count() == 1);
    CHECK(verify_ee(star_graph(4), *star_best));

    auto p3_best = min_ee(path_graph(3));
    REQUIRE(p3_best.has_value());
    CHECK(p3_best->count() == 1);

    CHECK(solve_ee(path_graph(2)) == make_set(1, {0}));

    for (const Graph& g : oracle::corpus(6)) {
        if (g.m() == 0) continue;
        EdgeSet f = solve_ee(g);
        CHECK(verify_ee(g, f));
        CHECK(verify_vv(line_graph(g).graph, f));  // identity edge numbering
    }
}

TEST_CASE("both verifiers agree on random subsets") {
    Rng rng(0xeeULL);
    for (const Graph& g : oracle::corpus(6)) {
        if (g.m() == 0 || g.m() > 12) continue;
        Graph lg = line_graph(g).graph;
        for (int k = 0; k < 30; ++k) {
            Bitset f(g.m());
            for (int e = 0; e < g.m(); ++e)
                if (rng.below(2)) f.set(e);
            CHECK(verify_ee(g, f) == verify_vv(lg, f));
        }
    }
}
