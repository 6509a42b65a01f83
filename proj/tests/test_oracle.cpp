#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lamps/errors.hpp"
#include "lamps/graph.hpp"
#include "lamps/oracle.hpp"
#include "lamps/rng.hpp"

using namespace lamps;
using namespace lamps::oracle;

TEST_CASE("direct definition checks") {
    Graph c4 = cycle_graph(4);
    CHECK(check_ev(c4, make_set(4, {0, 2})));
    CHECK(!check_ev(c4, make_set(4, {0, 1})));
    CHECK(check_ve(path_graph(3), make_set(3, {1})));
    CHECK(!check_ve(path_graph(3), make_set(3, {0, 1})));
    CHECK(check_vv(path_graph(3), make_set(3, {1})));
    CHECK(!check_vv(path_graph(3), make_set(3, {0})));
    CHECK(check_ee(star_graph(4), make_set(3, {0})));
    CHECK(!check_ee(star_graph(4), make_set(3, {0, 1})));
}

TEST_CASE("edge-subset enumeration") {
    auto p4 = brute_solutions_ev(path_graph(4));
    REQUIRE(p4.size() == 1);
    CHECK(p4[0] == make_set(3, {0, 2}));

    auto star = brute_solutions_ev(star_graph(4));
    REQUIRE(star.size() == 1);
    CHECK(star[0] == make_set(3, {0, 1, 2}));

    auto c4 = brute_solutions_ev(cycle_graph(4));
    REQUIRE(c4.size() == 2);
    CHECK(c4[0] == make_set(4, {0, 2}));
    CHECK(c4[1] == make_set(4, {1, 3}));

    CHECK(brute_solutions_ev(path_graph(3)).empty());
}

TEST_CASE("vertex-subset enumeration lists are canonical") {
    auto ve = brute_solutions_ve(path_graph(3));
    REQUIRE(ve.size() == 2);
    CHECK(ve[0] == make_set(3, {1}));      // smaller set first
    CHECK(ve[1] == make_set(3, {0, 2}));

    auto vv = brute_solutions_vv(path_graph(3));
    REQUIRE(vv.size() == 1);
    CHECK(vv[0] == make_set(3, {1}));

    auto ee = brute_solutions_ee(star_graph(4));
    REQUIRE(ee.size() == 4);
    CHECK(ee[0] == make_set(3, {0}));
    CHECK(ee[1] == make_set(3, {1}));
    CHECK(ee[2] == make_set(3, {2}));
    CHECK(ee[3] == make_set(3, {0, 1, 2}));
}

TEST_CASE("budget rejections") {
    CHECK_THROWS_AS(brute_solutions_ve(Graph(17, {})), BudgetError);
    CHECK_THROWS_AS(brute_solutions_vv(Graph(17, {})), BudgetError);
    CHECK_THROWS_AS(brute_solutions_ee(star_graph(18)), BudgetError);
    // m = 45 forces cycle-space mode; dimension 36 exceeds its budget too
    CHECK_THROWS_AS(brute_solutions_ev(complete_graph(10)), BudgetError);
}

TEST_CASE("feasibility shortcut matches enumeration") {
    for (const Graph& g : corpus(6))
        CHECK(brute_ev_feasible(g) == !brute_solutions_ev(g).empty());
}

TEST_CASE("streaming enumeration agrees with the subset scan") {
    for (const Graph& g : corpus(6)) {
        std::vector<EdgeSet> streamed;
        bool feasible =
            for_each_ev_solution(g, 20, [&](const EdgeSet& s) { streamed.push_back(s); });
        CHECK(feasible == brute_ev_feasible(g));
        std::sort(streamed.begin(), streamed.end(), [](const Bitset& a, const Bitset& b) {
            if (a.count() != b.count()) return a.count() < b.count();
            return a.lex_less(b);
        });
        CHECK(streamed == brute_solutions_ev(g));
    }
}

TEST_CASE("streaming minimum") {
    auto c4 = brute_min_ev(cycle_graph(4));
    REQUIRE(c4.has_value());
    CHECK(*c4 == make_set(4, {0, 2}));
    CHECK(!brute_min_ev(path_graph(3)).has_value());

    for (const Graph& g : corpus(6)) {
        auto all = brute_solutions_ev(g);
        auto best = brute_min_ev(g);
        REQUIRE(best.has_value() == !all.empty());
        if (best) CHECK(*best == all.front());
    }
}

TEST_CASE("solution lists are sorted smallest-first then by id order") {
    for (const Graph& g : corpus(5)) {
        auto sorted = [](const std::vector<Bitset>& sets) {
            return std::is_sorted(sets.begin(), sets.end(),
                                  [](const Bitset& a, const Bitset& b) {
                                      if (a.count() != b.count()) return a.count() < b.count();
                                      return a.lex_less(b);
                                  });
        };
        CHECK(sorted(brute_solutions_ev(g)));
        CHECK(sorted(brute_solutions_ve(g)));
        CHECK(sorted(brute_solutions_vv(g)));
        if (g.m() <= 16) CHECK(sorted(brute_solutions_ee(g)));
    }
}

TEST_CASE("unlabeled graph counts match the literature") {
    std::vector<size_t> all{1, 2, 4, 11, 34, 156, 1044};
    std::vector<size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(nonisomorphic_graphs(n).size() == all[size_t(n - 1)]);
        CHECK(nonisomorphic_connected(n).size() == connected[size_t(n - 1)]);
    }
}

TEST_CASE("canonical keys are relabeling invariants") {
    Rng rng(0xc0deULL);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + int(rng.below(5));
        Graph g = random_graph(n, 0.5, rng.next());

        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[size_t(i)], perm[rng.below(uint64_t(i) + 1)]);
        std::vector<std::pair<int, int>> relabeled;
        for (const Edge& e : g.edges())
            relabeled.push_back({perm[size_t(e.u)], perm[size_t(e.v)]});

        CHECK(canonical_key(g) == canonical_key(Graph(n, relabeled)));
    }
    CHECK(canonical_key(path_graph(5)) != canonical_key(star_graph(5)));
    CHECK_THROWS_AS(canonical_key(path_graph(9)), std::invalid_argument);
}

TEST_CASE("corpus shape") {
    auto tiny = corpus(2);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].n() == 2);
    CHECK(tiny[0].m() == 1);

    // the n = 4 stratum covers all six connected shapes
    std::set<uint64_t> seen;
    for (const Graph& g : corpus(4))
        if (g.n() == 4 && components(g).size() == 1) seen.insert(canonical_key(g));
    std::set<uint64_t> expected;
    for (const Graph& g : nonisomorphic_connected(4)) expected.insert(canonical_key(g));
    CHECK(expected.size() == 6);
    for (uint64_t k : expected) CHECK(seen.count(k) == 1);

    // deterministic: two streams are identical
    auto a = corpus(6), b = corpus(6);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].n() == b[i].n());
        REQUIRE(a[i].m() == b[i].m());
        for (int e = 0; e < a[i].m(); ++e) {
            CHECK(a[i].edge(e).u == b[i].edge(e).u);
            CHECK(a[i].edge(e).v == b[i].edge(e).v);
        }
    }

    // stress shapes for the solvers: disconnected and isolated-vertex cases
    bool has_disconnected = false, has_isolated = false;
    for (const Graph& g : corpus(6)) {
        if (components(g).size() > 1) has_disconnected = true;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 0) has_isolated = true;
    }
    CHECK(has_disconnected);
    CHECK(has_isolated);
}
