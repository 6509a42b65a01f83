// Acceptance harness: runs every shipped theorem suite at its full
// population and prints one verdict line per criterion. Exit code is the
// number of failed criteria, so 0 means full acceptance.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lamps/suites.hpp"

using lamps::suites::SuiteReport;

namespace {

struct Criterion {
    const char* label;
    std::vector<std::function<SuiteReport()>> parts;
};

}  // namespace

int main() {
    namespace s = lamps::suites;
    std::vector<Criterion> criteria = {
        {"reduction exactness: minimum size equals the oracle everywhere",
         {[] { return s::reduction_exactness(); }}},
        {"weight relation: gadget matching weight is twice the minimum size",
         {[] { return s::weight_relation(); }}},
        {"bounds: n/2 <= minimum <= n-1, both attained",
         {[] { return s::solution_bounds(); }}},
        {"approximation: spanning-tree solution within factor 2(1-1/n)",
         {[] { return s::spanning_approximation(); }}},
        {"existence: solvable iff every component has even order",
         {[] { return s::existence_agreement(); }}},
        {"tree uniqueness: even trees have exactly one solution",
         {[] { return s::tree_uniqueness(); }}},
        {"structure: minimum witnesses induce even-order subtrees",
         {[] { return s::solution_structure(); }}},
        {"vertex-edge: bipartite iff feasible, two solutions, smaller side",
         {[] { return s::vertex_edge_agreement(); }}},
        {"vertex-vertex: closed-neighborhood system always solvable",
         {[] { return s::vertex_vertex_solvability(); }}},
        {"edge-edge: direct check agrees with the line-graph reduction",
         {[] { return s::edge_edge_line_graph(); }}},
        {"claw-free: even order iff perfect matching, minimum is n/2",
         {[] { return s::claw_free_matching(); }}},
        {"pair and optimality certificates: even differences, cycle criterion",
         {[] { return s::symmetric_difference_suite(); },
          [] { return s::cycle_optimality_suite(); }}},
        {"matching engine: equals brute force on random weighted graphs",
         {[] { return s::matching_engine_suite(); }}},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        long checked = 0, failures = 0;
        std::vector<std::string> notes;
        for (const auto& part : criteria[i].parts) {
            SuiteReport rep = part();
            checked += rep.checked;
            failures += rep.failures;
            notes.insert(notes.end(), rep.notes.begin(), rep.notes.end());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        bool ok = failures == 0;
        if (!ok) ++failed;
        std::printf("criterion %2zu: %s  %s  (%ld checks, %.1fs)\n", i + 1,
                    ok ? "pass" : "FAIL", criteria[i].label, checked, secs);
        if (!ok) {
            std::printf("              %ld of %ld checks failed\n", failures, checked);
            for (const std::string& note : notes)
                std::printf("              note: %s\n", note.c_str());
        }
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - size_t(failed),
                criteria.size());
    return failed;
}
