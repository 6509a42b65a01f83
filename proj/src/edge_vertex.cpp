#include "lamps/edge_vertex.hpp"

#include <algorithm>
#include <stdexcept>

#include "lamps/errors.hpp"

namespace lamps {

bool has_ev_solution(const Graph& g) {
    for (const VertexSet& comp : components(g))
        if (comp.count() % 2 != 0) return false;
    return true;
}

EdgeSet tree_ev_solution(const Graph& t) {
    if (t.n() % 2 != 0) throw std::invalid_argument("tree_ev_solution: odd order");
    if (t.m() != t.n() - 1) throw std::invalid_argument("tree_ev_solution: not a tree");

    // BFS from 0; reverse visit order processes children before parents.
    std::vector<int> order{0}, parent_edge(t.n(), -1), parent(t.n(), -1);
    std::vector<bool> seen(t.n(), false);
    seen[0] = true;
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        const auto& nbrs = t.neighbors(u);
        for (size_t k = 0; k < nbrs.size(); ++k) {
            int v = nbrs[k];
            if (!seen[v]) {
                seen[v] = true;
                parent[v] = u;
                parent_edge[v] = t.incident_edges(u)[k];
                order.push_back(v);
            }
        }
    }
    if (int(order.size()) != t.n()) throw std::invalid_argument("tree_ev_solution: not connected");

    EdgeSet sol(t.m());
    std::vector<int> deg(t.n(), 0);
    for (size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        if (deg[v] % 2 == 0) {
            sol.set(parent_edge[v]);
            ++deg[v];
            ++deg[parent[v]];
        }
    }
    // The root's parity comes out odd exactly because the order is even.
    if (deg[0] % 2 == 0) throw InternalError("tree_ev_solution: root left even on an even-order tree");
    return sol;
}

EvSolution spanning_tree_ev_solution(const Graph& g) {
    if (g.n() % 2 != 0) throw std::invalid_argument("spanning_tree_ev_solution: odd order");
    EdgeSet tree = spanning_tree(g);  // throws when not connected

    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> orig_id;
    for (int e : tree.ids()) {
        tree_edges.push_back({g.edge(e).u, g.edge(e).v});
        orig_id.push_back(e);
    }
    EdgeSet local = tree_ev_solution(Graph(g.n(), tree_edges));

    EvSolution out{EdgeSet(g.m()), 0, false, {}};
    for (int e : local.ids()) out.edges.set(orig_id[e]);
    out.size = out.edges.count();
    return out;
}

GadgetGraph build_gadget(const Graph& g) {
    std::vector<GadgetBlock> blocks(g.n());
    int next = 0;
    for (int i = 0; i < g.n(); ++i) {
        int d = g.degree(i);
        if (d == 0) throw std::invalid_argument("build_gadget: isolated vertex " + std::to_string(i));
        blocks[i] = {next, next + d, d % 2 == 0 ? next + 2 * d : -1, d};
        next += 2 * d + (d % 2 == 0 ? 1 : 0);
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<int64_t> weights;
    std::vector<int> original_of_gadget;
    std::vector<int> rung_ids;
    auto add = [&](int a, int b, int64_t w, int orig) {
        edges.push_back({a, b});
        weights.push_back(w);
        original_of_gadget.push_back(orig);
        if (w == 1) rung_ids.push_back(int(edges.size()) - 1);
    };

    for (int i = 0; i < g.n(); ++i) {
        const GadgetBlock& blk = blocks[i];
        for (int j = 0; j < blk.degree; ++j)
            for (int k = j + 1; k < blk.degree; ++k) add(blk.v1_begin + j, blk.v1_begin + k, 0, -1);
        if (blk.parity_vertex != -1)
            for (int j = 0; j < blk.degree; ++j) add(blk.parity_vertex, blk.v1_begin + j, 0, -1);
        for (int j = 0; j < blk.degree; ++j) add(blk.v1_begin + j, blk.v2_begin + j, 1, -1);
    }

    // Cross edges in original edge id order. An edge's position in an
    // endpoint's incident list equals the other endpoint's position in that
    // vertex's neighbor list (the two lists are parallel).
    std::vector<int> pos_at_u(g.m(), -1), pos_at_v(g.m(), -1);
    for (int i = 0; i < g.n(); ++i) {
        const auto& eids = g.incident_edges(i);
        for (size_t k = 0; k < eids.size(); ++k)
            (g.edge(eids[k]).u == i ? pos_at_u : pos_at_v)[eids[k]] = int(k);
    }
    std::vector<int> cross_of_original(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
        cross_of_original[e] = int(edges.size());
        add(blocks[g.edge(e).u].v2_begin + pos_at_u[e], blocks[g.edge(e).v].v2_begin + pos_at_v[e], 0, e);
    }

    GadgetGraph out{WeightedGraph{Graph(next, edges), std::move(weights)},
                    std::move(blocks),
                    std::move(cross_of_original),
                    std::move(original_of_gadget),
                    EdgeSet(int(edges.size()))};
    for (int e : rung_ids) out.rung_edges.set(e);
    return out;
}

GadgetSolve min_ev_via_matching(const Graph& g) {
    GadgetGraph gadget = build_gadget(g);
    auto matching = min_weight_perfect_matching(gadget.star);
    if (!matching)
        throw InternalError("min_ev: gadget of an even-order graph has no perfect matching");
    GadgetSolve out{EdgeSet(g.m()), matching->total_weight};
    for (int e = 0; e < g.m(); ++e)
        if (!matching->edges.test(gadget.cross_of_original[e])) out.solution.set(e);
    return out;
}

namespace {

std::vector<VertexSet> solution_forest(const Graph& g, const EdgeSet& s) {
    std::vector<std::pair<int, int>> edges;
    for (int e : s.ids()) edges.push_back({g.edge(e).u, g.edge(e).v});
    return components(Graph(g.n(), edges));
}

}  // namespace

std::optional<EvSolution> min_ev(const Graph& g) {
    if (!has_ev_solution(g)) return std::nullopt;

    EvSolution out{EdgeSet(g.m()), 0, true, {}};
    for (const VertexSet& comp : components(g)) {
        Subgraph sub = induced_subgraph(g, comp.ids());
        EdgeSet local(sub.graph.m());
        if (sub.graph.m() == sub.graph.n() - 1) {
            local = tree_ev_solution(sub.graph);
        } else {
            GadgetSolve solved = min_ev_via_matching(sub.graph);
            if (solved.matching_weight != 2 * solved.solution.count())
                throw InternalError("min_ev: matching weight != 2 x solution size");
            local = solved.solution;
        }
        for (int e : local.ids()) out.edges.set(sub.edge_to_orig[e]);
    }
    out.size = out.edges.count();
    out.forest_components = solution_forest(g, out.edges);
    return out;
}

bool verify_ev(const Graph& g, const EdgeSet& s) {
    for (int d : degrees_in(g, s))
        if (d % 2 == 0) return false;
    return true;
}

bool check_optimality_by_cycles(const Graph& g, const EdgeSet& s, int cycle_cap) {
    if (!verify_ev(g, s)) throw std::invalid_argument("check_optimality_by_cycles: s is not a solution");
    for (const EdgeSet& cycle : enumerate_cycles(g, g.n(), cycle_cap)) {
        int inside = (s & cycle).count();
        if (inside * 2 > cycle.count()) return false;
    }
    return true;
}

bool symmetric_difference_check(const Graph& g, const EdgeSet& s1, const EdgeSet& s2) {
    if (!verify_ev(g, s1) || !verify_ev(g, s2))
        throw std::invalid_argument("symmetric_difference_check: inputs must be solutions");
    for (int d : degrees_in(g, s1 ^ s2))
        if (d % 2 != 0) return false;
    return true;
}

bool claw_free_pm_check(const Graph& g) {
    if (!is_claw_free(g)) throw std::invalid_argument("claw_free_pm_check: graph has a claw");
    if (components(g).size() != 1) throw std::invalid_argument("claw_free_pm_check: graph not connected");
    return (g.n() % 2 == 0) == has_perfect_matching(g);
}

}  // namespace lamps
