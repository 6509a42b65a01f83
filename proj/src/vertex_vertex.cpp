#include "lamps/vertex_vertex.hpp"

#include "lamps/errors.hpp"
#include "lamps/gf2.hpp"

namespace lamps {

namespace {

Bitset all_ones(int k) {
    Bitset b(k);
    for (int i = 0; i < k; ++i) b.set(i);
    return b;
}

Gf2Solution vv_system(const Graph& g) {
    Gf2Solution sol = solve(closed_neighborhood_matrix(g), all_ones(g.n()));
    if (!sol.consistent)
        throw InternalError("vertex-vertex: closed-neighborhood system inconsistent on a simple graph");
    return sol;
}

}  // namespace

VertexSet solve_vv(const Graph& g) { return vv_system(g).particular; }

std::optional<VertexSet> min_vv(const Graph& g, int nullity_cap) {
    return min_weight_solution(vv_system(g), nullity_cap);
}

bool verify_vv(const Graph& g, const VertexSet& x) {
    for (int v = 0; v < g.n(); ++v) {
        int hits = x.test(v) ? 1 : 0;
        for (int u : g.neighbors(v)) hits += x.test(u);
        if (hits % 2 == 0) return false;
    }
    return true;
}

namespace {

EdgeSet map_back(const LineGraph& lg, const VertexSet& x, int m) {
    EdgeSet f(m);
    for (int v : x.ids()) f.set(lg.vertex_to_edge[v]);
    return f;
}

}  // namespace

EdgeSet solve_ee(const Graph& g) {
    LineGraph lg = line_graph(g);
    return map_back(lg, solve_vv(lg.graph), g.m());
}

std::optional<EdgeSet> min_ee(const Graph& g, int nullity_cap) {
    LineGraph lg = line_graph(g);
    auto x = min_vv(lg.graph, nullity_cap);
    if (!x) return std::nullopt;
    return map_back(lg, *x, g.m());
}

bool verify_ee(const Graph& g, const EdgeSet& f) {
    std::vector<int> at(g.n(), 0);
    for (int e : f.ids()) {
        ++at[g.edge(e).u];
        ++at[g.edge(e).v];
    }
    for (int e = 0; e < g.m(); ++e) {
        // Edges adjacent to e counted once per shared endpoint; e itself sits
        // in both endpoint counts, so subtract one copy when it is in f.
        int closed = at[g.edge(e).u] + at[g.edge(e).v] - (f.test(e) ? 1 : 0);
        if (closed % 2 == 0) return false;
    }
    return true;
}

}  // namespace lamps
