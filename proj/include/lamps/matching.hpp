#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lamps/graph.hpp"

namespace lamps {

/// Graph plus a non-negative integer weight per edge id.
struct WeightedGraph {
    Graph graph;
    std::vector<int64_t> weights;
};

struct Matching {
    EdgeSet edges;
    int64_t total_weight;
};

/// Exact minimum-weight perfect matching (blossom, primal-dual, integer
/// duals). Absent iff no perfect matching exists. Deterministic.
std::optional<Matching> min_weight_perfect_matching(const WeightedGraph& wg);

bool has_perfect_matching(const Graph& g);

/// Exhaustive oracle, same contract as the engine; among equal-weight optima
/// returns the lexicographically smallest edge-id set. Requires n <= 12 or
/// m <= 24, else throws BudgetError.
std::optional<Matching> brute_min_weight_pm(const WeightedGraph& wg);

}  // namespace lamps
