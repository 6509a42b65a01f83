#include "lamps/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "lamps/errors.hpp"
#include "lamps/gf2.hpp"
#include "lamps/rng.hpp"

namespace lamps::oracle {

namespace {

Bitset from_mask(uint32_t mask, int size) {
    Bitset s(size);
    for (int i = 0; i < size; ++i)
        if (mask >> i & 1u) s.set(i);
    return s;
}

// Canonical listing order: smaller sets first, ties by id-list order, so the
// first entry of any solution list is the canonical minimum witness.
void sort_lex(std::vector<Bitset>& sets) {
    std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.lex_less(b);
    });
}

Gf2Solution ev_system(const Graph& g) {
    Bitset ones(g.n());
    for (int v = 0; v < g.n(); ++v) ones.set(v);
    return lamps::solve(incidence_matrix(g), ones);
}

}  // namespace

bool check_ev(const Graph& g, const EdgeSet& s) {
    for (int v = 0; v < g.n(); ++v) {
        int deg = 0;
        for (int e : g.incident_edges(v)) deg += s.test(e) ? 1 : 0;
        if (deg % 2 == 0) return false;
    }
    return true;
}

bool check_ve(const Graph& g, const VertexSet& x) {
    for (const Edge& e : g.edges())
        if (int(x.test(e.u)) + int(x.test(e.v)) != 1) return false;
    return true;
}

bool check_vv(const Graph& g, const VertexSet& x) {
    for (int v = 0; v < g.n(); ++v) {
        int hits = x.test(v) ? 1 : 0;
        for (int w : g.neighbors(v)) hits += x.test(w) ? 1 : 0;
        if (hits % 2 == 0) return false;
    }
    return true;
}

bool check_ee(const Graph& g, const EdgeSet& f) {
    for (int e = 0; e < g.m(); ++e) {
        int hits = f.test(e) ? 1 : 0;
        for (int other = 0; other < g.m(); ++other) {
            if (other == e || !f.test(other)) continue;
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(other);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) ++hits;
        }
        if (hits % 2 == 0) return false;
    }
    return true;
}

bool brute_ev_feasible(const Graph& g) { return ev_system(g).consistent; }

bool for_each_ev_solution(const Graph& g, int nullity_cap,
                          const std::function<void(const EdgeSet&)>& f) {
    if (nullity_cap < 0 || nullity_cap > 62)
        throw std::invalid_argument("for_each_ev_solution: cap out of range");
    auto sys = ev_system(g);
    if (!sys.consistent) return false;
    int k = sys.nullity();
    if (k > nullity_cap)
        throw BudgetError("for_each_ev_solution: cycle space dimension " +
                          std::to_string(k) + " exceeds cap " +
                          std::to_string(nullity_cap));
    EdgeSet cur = sys.particular;
    if (!check_ev(g, cur))
        throw InternalError("oracle: incidence system produced an invalid solution");
    f(cur);
    for (uint64_t i = 1; i < (uint64_t(1) << k); ++i) {
        cur ^= sys.nullspace[size_t(std::countr_zero(i))];
        f(cur);
    }
    return true;
}

std::vector<EdgeSet> brute_solutions_ev(const Graph& g) {
    std::vector<EdgeSet> out;
    if (g.m() <= 20) {
        std::vector<uint32_t> inc(size_t(g.n()), 0);
        for (int e = 0; e < g.m(); ++e) {
            inc[size_t(g.edge(e).u)] |= 1u << e;
            inc[size_t(g.edge(e).v)] |= 1u << e;
        }
        for (uint32_t s = 0; s < (1u << g.m()); ++s) {
            bool ok = true;
            for (int v = 0; v < g.n() && ok; ++v)
                ok = std::popcount(s & inc[size_t(v)]) % 2 == 1;
            if (ok) out.push_back(from_mask(s, g.m()));
        }
    } else {
        for_each_ev_solution(g, 20, [&](const EdgeSet& s) { out.push_back(s); });
    }
    sort_lex(out);
    return out;
}

std::optional<EdgeSet> brute_min_ev(const Graph& g, int nullity_cap) {
    std::optional<EdgeSet> best;
    size_t best_count = 0;
    bool feasible = for_each_ev_solution(g, nullity_cap, [&](const EdgeSet& s) {
        size_t c = s.count();
        if (!best || c < best_count || (c == best_count && s.lex_less(*best))) {
            best = s;
            best_count = c;
        }
    });
    if (!feasible) return std::nullopt;
    return best;
}

std::vector<VertexSet> brute_solutions_ve(const Graph& g) {
    if (g.n() > 16)
        throw BudgetError("brute_solutions_ve: needs n <= 16");
    std::vector<VertexSet> out;
    for (uint32_t x = 0; x < (1u << g.n()); ++x) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if ((x >> e.u & 1u) + (x >> e.v & 1u) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(from_mask(x, g.n()));
    }
    sort_lex(out);
    return out;
}

std::vector<VertexSet> brute_solutions_vv(const Graph& g) {
    if (g.n() > 16)
        throw BudgetError("brute_solutions_vv: needs n <= 16");
    std::vector<uint32_t> closed(size_t(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) {
        closed[size_t(v)] |= 1u << v;
        for (int w : g.neighbors(v)) closed[size_t(v)] |= 1u << w;
    }
    std::vector<VertexSet> out;
    for (uint32_t x = 0; x < (1u << g.n()); ++x) {
        bool ok = true;
        for (int v = 0; v < g.n() && ok; ++v)
            ok = std::popcount(x & closed[size_t(v)]) % 2 == 1;
        if (ok) out.push_back(from_mask(x, g.n()));
    }
    sort_lex(out);
    return out;
}

std::vector<EdgeSet> brute_solutions_ee(const Graph& g) {
    if (g.m() > 16)
        throw BudgetError("brute_solutions_ee: needs m <= 16");
    // closed[e] = edges sharing an endpoint with e, plus e itself
    std::vector<uint32_t> closed(size_t(g.m()), 0);
    for (int e = 0; e < g.m(); ++e) {
        closed[size_t(e)] |= 1u << e;
        for (int f = 0; f < g.m(); ++f) {
            if (f == e) continue;
            const Edge& a = g.edge(e);
            const Edge& b = g.edge(f);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                closed[size_t(e)] |= 1u << f;
        }
    }
    std::vector<EdgeSet> out;
    for (uint32_t x = 0; x < (1u << g.m()); ++x) {
        bool ok = true;
        for (int e = 0; e < g.m() && ok; ++e)
            ok = std::popcount(x & closed[size_t(e)]) % 2 == 1;
        if (ok) out.push_back(from_mask(x, g.m()));
    }
    sort_lex(out);
    return out;
}

namespace {

uint64_t pack_adjacency(const Graph& g, const std::vector<int>& assign) {
    uint64_t key = 0;
    int n = g.n();
    for (const Edge& e : g.edges()) {
        int a = assign[size_t(e.u)];
        int b = assign[size_t(e.v)];
        key |= (uint64_t(1) << (a * n + b)) | (uint64_t(1) << (b * n + a));
    }
    return key;
}

// Vertices grouped by (degree, sorted neighbor degrees); any isomorphism
// preserves this invariant, so minimizing only over class-respecting
// orderings still yields a canonical form.
std::vector<std::vector<int>> invariant_classes(const Graph& g) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> sig{g.degree(v)};
        for (int w : g.neighbors(v)) sig.push_back(g.degree(w));
        std::sort(sig.begin() + 1, sig.end());
        groups[sig].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [sig, members] : groups) classes.push_back(std::move(members));
    return classes;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::vector<int>> classes;
    std::vector<int> offset;
    std::vector<int> assign;
    uint64_t best = ~uint64_t(0);

    explicit CanonSearch(const Graph& graph)
        : g(graph), classes(invariant_classes(graph)), assign(size_t(graph.n()), -1) {
        int at = 0;
        for (const auto& c : classes) {
            offset.push_back(at);
            at += int(c.size());
        }
    }

    void descend(size_t c) {
        if (c == classes.size()) {
            best = std::min(best, pack_adjacency(g, assign));
            return;
        }
        auto& members = classes[c];
        std::sort(members.begin(), members.end());
        do {
            for (size_t i = 0; i < members.size(); ++i)
                assign[size_t(members[i])] = offset[c] + int(i);
            descend(c + 1);
        } while (std::next_permutation(members.begin(), members.end()));
    }
};

}  // namespace

uint64_t canonical_key(const Graph& g) {
    if (g.n() < 1 || g.n() > 8)
        throw std::invalid_argument("canonical_key: needs 1 <= n <= 8");
    CanonSearch search(g);
    search.descend(0);
    return search.best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("nonisomorphic_graphs: needs 1 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> memo;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) memo.emplace(1, std::vector<Graph>{Graph(1, {})});
    while (!memo.count(n)) {
        int k = memo.rbegin()->first + 1;
        const auto& parents = memo.at(k - 1);
        std::unordered_set<uint64_t> seen;
        std::vector<Graph> level;
        for (const Graph& parent : parents) {
            for (uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (const Edge& e : parent.edges()) edges.emplace_back(e.u, e.v);
                for (int b = 0; b < k - 1; ++b)
                    if (mask >> b & 1u) edges.emplace_back(b, k - 1);
                Graph cand(k, edges);
                if (seen.insert(canonical_key(cand)).second)
                    level.push_back(std::move(cand));
            }
        }
        memo.emplace(k, std::move(level));
    }
    return memo.at(n);
}

std::vector<Graph> nonisomorphic_connected(int n) {
    std::vector<Graph> out;
    for (const Graph& g : nonisomorphic_graphs(n))
        if (components(g).size() == 1) out.push_back(g);
    return out;
}

std::vector<Graph> corpus(int limit_n) {
    if (limit_n < 2)
        throw std::invalid_argument("corpus: limit_n must be at least 2");
    std::vector<Graph> out;
    for (int k = 2; k <= std::min(limit_n, 8); ++k)
        for (const Graph& g : nonisomorphic_connected(k)) out.push_back(g);
    if (limit_n < 3) return out;

    auto add = [&](Graph g) {
        if (g.n() <= limit_n) out.push_back(std::move(g));
    };

    // named families beyond the exhaustive range
    for (int k = 9; k <= limit_n; ++k) {
        add(path_graph(k));
        add(cycle_graph(k));
        add(star_graph(k));
        if (k <= 12) add(complete_graph(k));
    }
    for (int a = 2; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            if (a + b > 8) add(complete_bipartite_graph(a, b));

    // isolated vertices and multi-component graphs
    for (int k = 3; k <= std::min(limit_n, 6); ++k) add(Graph(k, {}));
    add(disjoint_union(complete_graph(2), Graph(1, {})));
    add(disjoint_union(path_graph(3), Graph(1, {})));
    add(disjoint_union(complete_graph(2), complete_graph(2)));
    add(disjoint_union(complete_graph(2), path_graph(3)));
    add(disjoint_union(cycle_graph(4), complete_graph(2)));
    add(disjoint_union(cycle_graph(3), cycle_graph(3)));
    add(disjoint_union(star_graph(5), Graph(1, {})));
    add(disjoint_union(complete_graph(4), cycle_graph(4)));
    add(disjoint_union(path_graph(5), path_graph(5)));
    add(disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)),
                       Graph(1, {})));

    // seeded families: trees, sparse and dense random graphs, near-complete
    // bipartite graphs, line graphs (claw-free)
    uint64_t seed = 0x5eedbea75ULL;
    for (int k = 4; k <= std::min(limit_n, 16); ++k) {
        add(random_tree(k, seed++));
        add(random_tree(k, seed++));
    }
    for (int k = 5; k <= std::min(limit_n, 12); ++k) {
        add(random_graph(k, 0.3, seed++));
        add(random_graph(k, 0.6, seed++));
    }
    const std::pair<int, int> sides[] = {{2, 3}, {3, 3}, {3, 4},
                                         {4, 4}, {4, 5}, {5, 5}};
    for (auto [a, b] : sides) {
        Graph kb = complete_bipartite_graph(a, b);
        Rng rng(seed++);
        std::vector<std::pair<int, int>> kept;
        for (const Edge& e : kb.edges())
            if (rng.unit() < 0.7) kept.emplace_back(e.u, e.v);
        add(Graph(a + b, kept));
    }
    for (int k = 4; k <= 6; ++k) {
        Graph base = random_graph(k, 0.5, seed++);
        if (base.m() > 0) add(line_graph(base).graph);
    }
    return out;
}

}  // namespace lamps::oracle
