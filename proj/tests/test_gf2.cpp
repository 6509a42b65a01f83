#include <optional>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lamps/gf2.hpp"
#include "lamps/graph.hpp"
#include "lamps/oracle.hpp"
#include "lamps/rng.hpp"

using namespace lamps;

static Gf2Matrix mat(const std::vector<std::vector<int>>& rows) {
    int r = int(rows.size()), c = r ? int(rows[0].size()) : 0;
    Gf2Matrix a(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rows[i][j]) a.set(i, j);
    return a;
}

static Bitset mul(const Gf2Matrix& a, const Bitset& x) {
    Bitset out(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        if ((a.row(i) & x).count() % 2 == 1) out.set(i);
    return out;
}

TEST_CASE("solve on the rank-1 system") {
    Gf2Matrix a = mat({{1, 1}, {1, 1}});
    Gf2Solution sol = solve(a, make_set(2, {0, 1}));
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 1);
    CHECK(sol.nullity() == 1);
    CHECK(sol.particular.count() == 1);  // (1,0) or (0,1)
    CHECK(mul(a, sol.particular) == make_set(2, {0, 1}));
    REQUIRE(sol.nullspace.size() == 1);
    CHECK(sol.nullspace[0] == make_set(2, {0, 1}));
}

TEST_CASE("solve on the identity") {
    Gf2Matrix a = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Gf2Solution sol = solve(a, make_set(3, {0, 2}));
    REQUIRE(sol.consistent);
    CHECK(sol.particular == make_set(3, {0, 2}));
    CHECK(sol.rank == 3);
    CHECK(sol.nullity() == 0);
}

TEST_CASE("solve detects inconsistency") {
    Gf2Matrix a = mat({{1, 1}, {1, 1}});
    CHECK(!solve(a, make_set(2, {0})).consistent);
}

TEST_CASE("solve rejects mismatched dimensions") {
    Gf2Matrix a = mat({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(solve(a, Bitset(3)), std::invalid_argument);
}

TEST_CASE("minimum-weight solution") {
    SUBCASE("nullity zero returns the particular solution") {
        Gf2Matrix a = mat({{1, 0}, {0, 1}});
        Gf2Solution sol = solve(a, make_set(2, {1}));
        CHECK(min_weight_solution(sol) == sol.particular);
    }
    SUBCASE("picks the lighter of the two solutions") {
        Gf2Solution sol = solve(mat({{1, 1}, {1, 1}}), make_set(2, {0, 1}));
        auto best = min_weight_solution(sol);
        REQUIRE(best.has_value());
        CHECK(best->count() == 1);
    }
    SUBCASE("absent beyond the nullity cap") {
        Gf2Solution sol = solve(Gf2Matrix(1, 22), Bitset(1));  // zero matrix: nullity 22
        REQUIRE(sol.consistent);
        CHECK(sol.nullity() == 22);
        CHECK(!min_weight_solution(sol, 20).has_value());
        auto all = min_weight_solution(sol, 22);
        REQUIRE(all.has_value());
        CHECK(all->none());  // zero vector solves the homogeneous system
    }
    SUBCASE("requires a consistent system") {
        Gf2Solution sol = solve(mat({{1, 1}, {1, 1}}), make_set(2, {0}));
        CHECK_THROWS_AS(min_weight_solution(sol), std::invalid_argument);
    }
}

TEST_CASE("closed neighborhood matrix") {
    CHECK(closed_neighborhood_matrix(path_graph(2)).dump() == "11\n11\n");
    CHECK(closed_neighborhood_matrix(Graph(3, {})).dump() == "100\n010\n001\n");
    CHECK(closed_neighborhood_matrix(path_graph(3)).dump() == "110\n111\n011\n");
}

TEST_CASE("incidence matrix") {
    CHECK(incidence_matrix(path_graph(2)).dump() == "1\n1\n");
    CHECK(incidence_matrix(path_graph(3)).dump() == "10\n11\n01\n");
    Gf2Matrix c3 = incidence_matrix(cycle_graph(3));
    for (int i = 0; i < 3; ++i) CHECK(c3.row(i).count() == 2);
}

TEST_CASE("random systems: residuals, rank-nullity, exhaustive minima") {
    Rng rng(0xf00dULL);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + int(rng.below(10));
        int cols = 1 + int(rng.below(12));
        Gf2Matrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng.below(2)) a.set(i, j);

        // force consistency on even trials by deriving b from a random x
        Bitset b(rows);
        if (trial % 2 == 0) {
            Bitset x(cols);
            for (int j = 0; j < cols; ++j)
                if (rng.below(2)) x.set(j);
            b = mul(a, x);
        } else {
            for (int i = 0; i < rows; ++i)
                if (rng.below(2)) b.set(i);
        }

        Gf2Solution sol = solve(a, b);
        CHECK(sol.rank + sol.nullity() == cols);
        if (trial % 2 == 0) REQUIRE(sol.consistent);
        if (!sol.consistent) continue;

        CHECK(mul(a, sol.particular) == b);
        for (const Bitset& v : sol.nullspace) CHECK(mul(a, v).none());
        for (int k = 0; k < 64; ++k) {
            Bitset x = sol.particular;
            for (const Bitset& v : sol.nullspace)
                if (rng.below(2)) x ^= v;
            CHECK(mul(a, x) == b);
        }

        // exhaustive minimum over all 2^cols vectors
        int best = cols + 1;
        for (uint32_t m = 0; m < (1u << cols); ++m) {
            Bitset x(cols);
            for (int j = 0; j < cols; ++j)
                if (m >> j & 1u) x.set(j);
            if (mul(a, x) == b) best = std::min(best, x.count());
        }
        auto got = min_weight_solution(sol);
        REQUIRE(got.has_value());
        CHECK(got->count() == best);
        CHECK(mul(a, *got) == b);
    }
}

TEST_CASE("incidence system nullity is the cycle-space dimension") {
    for (const Graph& g : oracle::corpus(7)) {
        if (components(g).size() != 1) continue;
        Gf2Solution sol = solve(incidence_matrix(g), Bitset(g.n()));
        CHECK(sol.nullity() == g.m() - g.n() + 1);
    }
}
