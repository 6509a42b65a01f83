#pragma once

#include <optional>

#include "lamps/graph.hpp"

namespace lamps {

/// Some odd parity cover: X with |N[v] ∩ X| odd for every v. The closed-
/// neighborhood system is consistent on every simple graph, so failure is an
/// internal invariant violation, never a value.
VertexSet solve_vv(const Graph& g);

/// Minimum-cardinality odd parity cover via nullspace enumeration; absent
/// when the system's nullity exceeds nullity_cap.
std::optional<VertexSet> min_vv(const Graph& g, int nullity_cap = 20);

bool verify_vv(const Graph& g, const VertexSet& x);

/// Edge-Edge: pressing an edge toggles itself and every edge sharing an
/// endpoint; solved as Vertex-Vertex on the line graph, mapped back through
/// the edge bijection.
EdgeSet solve_ee(const Graph& g);
std::optional<EdgeSet> min_ee(const Graph& g, int nullity_cap = 20);

/// Checked directly against the toggle rule on g, independent of the line
/// graph, so the reduction has a second witness.
bool verify_ee(const Graph& g, const EdgeSet& f);

}  // namespace lamps
