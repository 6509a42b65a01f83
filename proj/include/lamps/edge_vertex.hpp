#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamps/graph.hpp"
#include "lamps/matching.hpp"

namespace lamps {

/// Id layout of one original vertex's block in the gadget: d clique
/// vertices v1, d rung endpoints v2, and a parity vertex joined to the
/// clique iff the original degree is even (-1 otherwise).
struct GadgetBlock {
    int v1_begin;
    int v2_begin;
    int parity_vertex;
    int degree;
};

/// The minimization gadget. Per original vertex i of degree d: a weight-0
/// clique on d vertices, d weight-1 rung edges into d degree-2 vertices,
/// and for even d one extra parity vertex completing the clique. Each
/// original edge uv becomes a weight-0 cross edge between the rung endpoint
/// at u's position-of-v and the one at v's position-of-u; positions are
/// neighbor-list indices, which is why neighbor order is load-bearing.
struct GadgetGraph {
    WeightedGraph star;
    std::vector<GadgetBlock> blocks;
    std::vector<int> cross_of_original;   // original edge id -> gadget edge id
    std::vector<int> original_of_gadget;  // gadget edge id -> original edge id, -1 off E*(G)
    EdgeSet rung_edges;                   // exactly the weight-1 edges
};

/// Requires no isolated vertices (a degree-0 block would be empty).
GadgetGraph build_gadget(const Graph& g);

struct EvSolution {
    EdgeSet edges;
    int size = 0;
    bool is_optimal = false;
    /// Components of the spanning subgraph (V, edges); filled for optimal
    /// solutions, whose components are always induced trees of even order.
    std::vector<VertexSet> forest_components;
};

/// True iff every connected component has even order.
bool has_ev_solution(const Graph& g);

/// The unique all-degrees-odd edge set of an even-order tree, by one
/// post-order pass: a vertex takes the edge to its parent iff its degree
/// among processed edges is still even.
EdgeSet tree_ev_solution(const Graph& t);

/// Solution from a BFS spanning tree: valid, at most n-1 edges, within a
/// factor 2(1-1/n) of optimal. Requires connected, even order.
EvSolution spanning_tree_ev_solution(const Graph& g);

/// Gadget + minimum-weight perfect matching on one connected even-order
/// graph; kept separate from min_ev so the weight relation is observable
/// on every instance, trees included.
struct GadgetSolve {
    EdgeSet solution;
    int64_t matching_weight = 0;
};
GadgetSolve min_ev_via_matching(const Graph& g);

/// Minimum solution. Absent iff some component has odd order; otherwise
/// solved per component, trees by the unique tree solution, everything else
/// through the gadget. Asserts matching weight == 2 * solution size.
std::optional<EvSolution> min_ev(const Graph& g);

/// True iff every vertex has odd degree in s.
bool verify_ev(const Graph& g, const EdgeSet& s);

/// Optimality criterion: a valid solution s is minimum iff no simple cycle
/// C has |s ∩ C| > |C \ s|. Requires s valid; cycle enumeration budgeted.
bool check_optimality_by_cycles(const Graph& g, const EdgeSet& s, int cycle_cap = 10000);

/// Any two valid solutions differ by an everywhere-even-degree edge set;
/// returns that check for s1 xor s2. Requires both valid.
bool symmetric_difference_check(const Graph& g, const EdgeSet& s1, const EdgeSet& s2);

/// For connected claw-free g: returns whether (even order <=> perfect
/// matching exists) held, as a testable biconditional.
bool claw_free_pm_check(const Graph& g);

}  // namespace lamps
