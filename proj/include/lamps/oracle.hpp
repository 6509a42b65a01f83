#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lamps/graph.hpp"

namespace lamps::oracle {

// Everything here checks solvers and must stay independent of them: subset
// enumeration tests the lamp conditions by direct parity counting, and the
// Edge-Vertex cycle-space mode goes through plain linear algebra, never
// through the solver modules.

/// Single-set checks straight off the problem statements.
bool check_ev(const Graph& g, const EdgeSet& s);
bool check_ve(const Graph& g, const VertexSet& x);
bool check_vv(const Graph& g, const VertexSet& x);
bool check_ee(const Graph& g, const EdgeSet& f);

/// Feasibility of the Edge-Vertex incidence system, no enumeration.
bool brute_ev_feasible(const Graph& g);

/// All Edge-Vertex solutions, smallest first (ties by id-list order), so the
/// front entry is the canonical minimum. Subset mode for m <= 20; cycle-
/// space mode (incidence system + kernel enumeration) for nullity <= 20;
/// BudgetError beyond both.
std::vector<EdgeSet> brute_solutions_ev(const Graph& g);

/// Visit every Edge-Vertex solution in Gray-code order without materializing
/// the list; false iff the instance is infeasible. BudgetError when the
/// cycle-space dimension exceeds nullity_cap.
bool for_each_ev_solution(const Graph& g, int nullity_cap,
                          const std::function<void(const EdgeSet&)>& f);

/// Streaming minimum Edge-Vertex solution; ties toward the lex-smallest
/// edge set. Absent iff infeasible. BudgetError when nullity > nullity_cap.
std::optional<EdgeSet> brute_min_ev(const Graph& g, int nullity_cap = 24);

/// Exhaustive subset enumeration against the lamp definitions, in the same
/// smallest-first canonical order.
std::vector<VertexSet> brute_solutions_ve(const Graph& g);  // n <= 16
std::vector<VertexSet> brute_solutions_vv(const Graph& g);  // n <= 16
std::vector<EdgeSet> brute_solutions_ee(const Graph& g);    // m <= 16

/// All graphs on n unlabeled vertices (n <= 8), one representative per
/// isomorphism class, built by vertex extension with canonical-form dedup.
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<Graph> nonisomorphic_connected(int n);

/// Isomorphism-class key: minimum packed adjacency matrix over vertex
/// orderings compatible with (degree, neighbor-degree multiset) classes.
/// Requires n <= 8.
uint64_t canonical_key(const Graph& g);

/// Deterministic test corpus: exhaustive connected graphs for 2 <= n <=
/// min(limit_n, 8), plus seeded families (trees, random graphs, bipartite,
/// line graphs, regular, disconnected unions, isolated-vertex cases) up to
/// limit_n vertices. Families only exist for n >= 3.
std::vector<Graph> corpus(int limit_n);

}  // namespace lamps::oracle
