#include "lamps/vertex_edge.hpp"

namespace lamps {

std::optional<VeSolutions> solve_ve(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    VeSolutions out{std::move(*parts), VertexSet(g.n()), g.m() == 0};
    for (const ComponentBipartition& part : out.components) {
        // u holds the root, so <= keeps the tie on the root's side. The
        // all-roots side is also the convention for edgeless graphs, where
        // the strict minimum (the empty set) would be a useless witness.
        const VertexSet& side =
            out.degenerate || part.u.count() <= part.v.count() ? part.u : part.v;
        out.chosen_min |= side;
    }
    return out;
}

bool verify_ve(const Graph& g, const VertexSet& x) {
    for (const Edge& e : g.edges())
        if (int(x.test(e.u)) + int(x.test(e.v)) != 1) return false;
    return true;
}

}  // namespace lamps
