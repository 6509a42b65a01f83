#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lamps::suites {

// Theorem-checking sweeps. Each function runs one claim over its pinned
// population (exhaustive isomorphism-free graphs plus seeded families) and
// reports counts instead of asserting, so callers decide how to surface
// failures. Default arguments are the shipped populations; the CLI lets
// users shrink or reseed them.

struct SuiteReport {
    std::string name;
    long checked = 0;
    long failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions

    bool passed() const { return failures == 0; }
    void pass() { ++checked; }
    void fail(const std::string& what) {
        ++checked;
        ++failures;
        if (notes.size() < 16) notes.push_back(what);
    }
    void check(bool ok, const std::string& what) {
        if (ok)
            pass();
        else
            fail(what);
    }

    /// One-line "name: pass (N checks)" / "name: FAIL (k/N)" summary.
    std::string summary() const;
};

inline constexpr uint64_t kDefaultSeed = 0x1a3b5eedULL;

/// Minimum Edge-Vertex size from the solver equals the streaming oracle
/// minimum, with valid witnesses, over every connected even-order graph
/// n <= limit_n (exhaustive) plus random connected graphs built as a random
/// tree with extra edges (bounded cycle space keeps the oracle in budget).
SuiteReport reduction_exactness(int limit_n = 8, int random_count = 500,
                                uint64_t seed = kDefaultSeed);

/// Gadget matching weight equals exactly twice the minimum solution size on
/// every feasible instance of the same population, trees included.
SuiteReport weight_relation(int limit_n = 8, int random_count = 500,
                            uint64_t seed = kDefaultSeed);

/// n/2 <= |min| <= n-1 everywhere feasible; stars attain the upper bound,
/// perfect-matching graphs (C4, C6, K4, K_{3,3}) the lower.
SuiteReport solution_bounds(int limit_n = 8, int random_count = 500,
                            uint64_t seed = kDefaultSeed);

/// Spanning-tree solution is within the 2(1 - 1/n) factor of optimal,
/// checked in integers as size*n <= 2*(n-1)*opt.
SuiteReport spanning_approximation(int limit_n = 8, int random_count = 500,
                                   uint64_t seed = kDefaultSeed);

/// Even-order-components feasibility rule agrees with the incidence-system
/// oracle on the whole corpus, disconnected and isolated cases included.
SuiteReport existence_agreement(int limit_n = 10);

/// Random even-order trees have exactly one solution, equal to both the
/// tree pass and the general minimizer.
SuiteReport tree_uniqueness(int count = 200, int max_n = 16,
                            uint64_t seed = kDefaultSeed);

/// Every minimum witness induces a forest whose components are induced
/// subtrees of even order.
SuiteReport solution_structure(int limit_n = 8, int random_count = 500,
                               uint64_t seed = kDefaultSeed);

/// Vertex-Edge: feasible iff bipartite; connected feasible graphs have
/// exactly two solutions and the chosen one is the smaller color class.
SuiteReport vertex_edge_agreement(int limit_n = 12);

/// Vertex-Vertex systems are always consistent and witnesses verify, on the
/// corpus plus random graphs up to max_n vertices.
SuiteReport vertex_vertex_solvability(int limit_n = 10, int random_count = 1000,
                                      int max_n = 40,
                                      uint64_t seed = kDefaultSeed);

/// Edge-Edge verification agrees with Vertex-Vertex verification on the
/// line graph, for solver output and random edge subsets alike.
SuiteReport edge_edge_line_graph(int max_m = 12, int subsets_per_graph = 100,
                                 uint64_t seed = kDefaultSeed);

/// Connected claw-free graphs: even order iff a perfect matching exists;
/// even ones have minimum solutions of size exactly n/2.
SuiteReport claw_free_matching(int count = 200, uint64_t seed = kDefaultSeed);

/// Any two solutions differ by an even-degree edge set. Certified for all
/// pairs through the cycle-space basis (even-degree sets are closed under
/// symmetric difference) and exercised literally on sampled pairs.
SuiteReport symmetric_difference_suite(int limit_n = 8);

/// The cycle criterion accepts a solution iff it is optimal, checked
/// against the full solution stream per graph.
SuiteReport cycle_optimality_suite(int limit_n = 8);

/// Blossom engine equals brute-force minimum-weight perfect matching on
/// random weighted graphs.
SuiteReport matching_engine_suite(int count = 500, uint64_t seed = kDefaultSeed);

/// CLI suite names, in the order the check subcommand lists them.
std::vector<std::string> suite_names();

/// Run one named suite; composite names merge several sweeps. Absent
/// parameters fall back to the shipped populations.
SuiteReport run_suite(const std::string& name, std::optional<int> limit_n,
                      std::optional<uint64_t> seed);

}  // namespace lamps::suites
