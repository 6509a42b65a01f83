#include "lamps/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "lamps/errors.hpp"
#include "lamps/rng.hpp"

namespace lamps {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.resize(n);
    adj_edges_.resize(n);
    nbr_sets_.assign(n, VertexSet(n));
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("graph: endpoint " + std::to_string(a < 0 || a >= n ? a : b) +
                                        " out of range 0.." + std::to_string(n - 1));
        if (a == b) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(a));
        if (nbr_sets_[a].test(b))
            throw std::invalid_argument("graph: duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        int id = int(edges_.size());
        edges_.push_back({std::min(a, b), std::max(a, b)});
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        adj_edges_[a].push_back(id);
        adj_edges_[b].push_back(id);
        nbr_sets_[a].set(b);
        nbr_sets_[b].set(a);
    }
}

int Graph::edge_id(int u, int v) const {
    if (u == v || u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    int w = degree(u) <= degree(v) ? u : v;
    int x = (w == u) ? v : u;
    for (int e : adj_edges_[w]) {
        int other = edges_[e].u == w ? edges_[e].v : edges_[e].u;
        if (other == x) return e;
    }
    return -1;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.n(), false);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp(g.n());
        queue.assign(1, s);
        seen[s] = true;
        comp.set(s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    comp.set(v);
                    queue.push_back(v);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition parts;
    std::vector<int> color(g.n(), -1);
    std::vector<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        ComponentBipartition part{VertexSet(g.n()), VertexSet(g.n()), s};
        color[s] = 0;
        part.u.set(s);
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    (color[v] == 0 ? part.u : part.v).set(v);
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

EdgeSet spanning_tree(const Graph& g) {
    if (g.n() == 0) return EdgeSet(0);
    EdgeSet tree(g.m());
    std::vector<bool> seen(g.n(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    int reached = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        const auto& nbrs = g.neighbors(u);
        const auto& eids = g.incident_edges(u);
        for (size_t k = 0; k < nbrs.size(); ++k) {
            int v = nbrs[k];
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                tree.set(eids[k]);
                queue.push_back(v);
            }
        }
    }
    if (reached != g.n()) throw std::invalid_argument("spanning_tree: graph is not connected");
    return tree;
}

LineGraph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    // Two distinct edges of a simple graph share at most one vertex, so
    // scanning each vertex's incident pairs lists every line-graph edge once.
    for (int w = 0; w < g.n(); ++w) {
        const auto& eids = g.incident_edges(w);
        for (size_t i = 0; i < eids.size(); ++i)
            for (size_t j = i + 1; j < eids.size(); ++j)
                edges.push_back({std::min(eids[i], eids[j]), std::max(eids[i], eids[j])});
    }
    LineGraph out{Graph(g.m(), edges), std::vector<int>(g.m())};
    for (int e = 0; e < g.m(); ++e) out.vertex_to_edge[e] = e;
    return out;
}

bool is_claw_free(const Graph& g) {
    for (int c = 0; c < g.n(); ++c) {
        const auto& nbrs = g.neighbors(c);
        int d = int(nbrs.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k])) return false;
            }
    }
    return true;
}

namespace {

struct CycleSearch {
    const Graph& g;
    int max_len, cap;
    std::vector<EdgeSet>& out;
    std::vector<bool> in_path;
    std::vector<int> path;

    void dfs(int start, int u) {
        for (size_t k = 0; k < g.neighbors(u).size(); ++k) {
            int v = g.neighbors(u)[k];
            int e = g.incident_edges(u)[k];
            if (v == start && path.size() >= 3) {
                // Each cycle is found twice (once per direction) with its
                // smallest vertex as start; keep the direction with
                // path[1] < path.back().
                if (path[1] < path.back()) {
                    if (int(out.size()) >= cap)
                        throw BudgetError("enumerate_cycles: more than " + std::to_string(cap) + " cycles");
                    EdgeSet cyc(g.m());
                    for (size_t i = 0; i + 1 < path.size(); ++i)
                        cyc.set(g.edge_id(path[i], path[i + 1]));
                    cyc.set(e);
                    out.push_back(std::move(cyc));
                }
            } else if (v > start && !in_path[v] && int(path.size()) < max_len) {
                in_path[v] = true;
                path.push_back(v);
                dfs(start, v);
                path.pop_back();
                in_path[v] = false;
            }
        }
    }
};

}  // namespace

std::vector<EdgeSet> enumerate_cycles(const Graph& g, int max_len, int cap) {
    std::vector<EdgeSet> out;
    CycleSearch search{g, max_len, cap, out, std::vector<bool>(g.n(), false), {}};
    for (int s = 0; s < g.n(); ++s) {
        search.in_path[s] = true;
        search.path.assign(1, s);
        search.dfs(s, s);
        search.in_path[s] = false;
    }
    return out;
}

std::vector<int> degrees_in(const Graph& g, const EdgeSet& s) {
    std::vector<int> deg(g.n(), 0);
    for (int e : s.ids()) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    return deg;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_to_orig;
    for (int e = 0; e < g.m(); ++e) {
        int u = local[g.edge(e).u], v = local[g.edge(e).v];
        if (u != -1 && v != -1) {
            edges.push_back({u, v});
            edge_to_orig.push_back(e);
        }
    }
    return {Graph(int(vertices.size()), edges), vertices, std::move(edge_to_orig)};
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 1, 0});
    return Graph(n, edges);
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, edges);
}

Graph random_tree(int n, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({int(rng.below(i)), i});
    return Graph(n, edges);
}

Graph random_graph(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) edges.push_back({i, j});
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : a.edges()) edges.push_back({e.u, e.v});
    for (const Edge& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
    return Graph(a.n() + b.n(), edges);
}

}  // namespace lamps
