#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lamps/bitset.hpp"

namespace lamps {

/// Undirected simple graph. Vertices are 0..n-1, edges carry stable ids
/// 0..m-1 in input order with endpoints stored u < v.
///
/// Neighbor lists keep first-appearance order from the input edge list and
/// are never reordered: the minimization gadget identifies "the p-th
/// neighbor of i" by position in these lists.
struct Edge {
    int u, v;
};

class Graph {
public:
    Graph() : n_(0) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    /// Neighbors of v in arrival order.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    /// Incident edge ids of v, parallel to neighbors(v).
    const std::vector<int>& incident_edges(int v) const { return adj_edges_[v]; }

    int degree(int v) const { return int(adj_[v].size()); }
    bool adjacent(int u, int v) const { return nbr_sets_[u].test(v); }
    const VertexSet& neighbor_set(int v) const { return nbr_sets_[v]; }

    /// Edge id of uv, or -1 when uv is not an edge.
    int edge_id(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_edges_;
    std::vector<VertexSet> nbr_sets_;
};

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// One component's 2-coloring; the BFS root sits in u.
struct ComponentBipartition {
    VertexSet u, v;
    int root;
};
using Bipartition = std::vector<ComponentBipartition>;

/// Per-component BFS 2-coloring; absent iff some component has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Edge set of a BFS spanning tree rooted at vertex 0. Requires connected.
EdgeSet spanning_tree(const Graph& g);

/// Line graph: one vertex per edge of g, adjacent iff the edges share an
/// endpoint. vertex_to_edge is the (identity) bijection, kept explicit so
/// callers never assume the numbering.
struct LineGraph {
    Graph graph;
    std::vector<int> vertex_to_edge;
};
LineGraph line_graph(const Graph& g);

/// True iff g has no induced K_{1,3}.
bool is_claw_free(const Graph& g);

/// All simple cycles of length <= max_len, each as an edge set.
/// Throws BudgetError when more than cap cycles exist.
std::vector<EdgeSet> enumerate_cycles(const Graph& g, int max_len, int cap = 10000);

/// Degree of every vertex in the subgraph formed by edge set s.
std::vector<int> degrees_in(const Graph& g, const EdgeSet& s);

/// Subgraph induced by a vertex subset, with id maps back to g.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_to_orig;
    std::vector<int> edge_to_orig;
};
Subgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Generators. Random kinds are deterministic given the seed.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph random_tree(int n, uint64_t seed);
Graph random_graph(int n, double p, uint64_t seed);

/// Disjoint union; vertices of b are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace lamps
