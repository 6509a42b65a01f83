#pragma once

#include <optional>
#include <vector>

#include "lamps/graph.hpp"

namespace lamps {

/// The two solutions of one component, plus the component-wise minimum.
/// A bipartite component admits exactly its two color classes as solutions
/// (every edge must see exactly one chosen endpoint), so the global minimum
/// composes the smaller side of each component.
struct VeSolutions {
    std::vector<ComponentBipartition> components;
    VertexSet chosen_min;
    /// m == 0: the edge condition is vacuous and every vertex subset
    /// qualifies; chosen_min is then the all-roots convention, not unique.
    bool degenerate = false;
};

/// Absent iff g is not bipartite. Per component, ties between the two sides
/// break toward the side holding the BFS root.
std::optional<VeSolutions> solve_ve(const Graph& g);

/// True iff every edge has exactly one endpoint in x.
bool verify_ve(const Graph& g, const VertexSet& x);

}  // namespace lamps
