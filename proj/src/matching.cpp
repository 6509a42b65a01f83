#include "lamps/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "lamps/errors.hpp"

namespace lamps {

namespace {

// Primal-dual blossom algorithm over a complete slack matrix. Non-edges of
// the input get a prohibitive weight, so a perfect matching always exists
// numerically; the caller rejects results that use such an edge.
//
// All slacks are twice the input weights. Integrality of every dual update
// rests on one invariant: vertices currently in the alternating forest share
// a common dual parity. Updates move every labeled vertex by +/-delta
// together, and a vertex can only (re)enter the forest through a tight edge
// (slack 0 forces parity agreement) or as an unmatched root (unmatched
// vertices are labeled in every phase, so they never drift). Hence
// even-even slacks are even and delta = e2/2 stays integral; update_duals
// asserts this instead of trusting it.
constexpr int kUnlabeled = 0;
constexpr int kOdd = 1;
constexpr int kEven = 2;

class BlossomSolver {
public:
    BlossomSolver(int n, std::vector<int64_t> pair_slack)
        : n_(n),
          slack_(std::move(pair_slack)),
          deep_(2 * n),
          shallow_(2 * n),
          outer_(2 * n),
          type_(2 * n, kUnlabeled),
          forest_(2 * n, -1),
          root_(2 * n),
          mate_(2 * n, -1),
          dual_(2 * n, 0),
          active_(2 * n, 0),
          blocked_(2 * n, 0),
          visited_(2 * n, 0) {
        for (int i = 0; i < 2 * n_; ++i) {
            outer_[i] = i;
            root_[i] = i;
            if (i < n_) {
                deep_[i] = {i};
                active_[i] = 1;
            } else {
                free_slots_.push_back(i);
            }
        }
    }

    /// Mate of every original vertex under a minimum-weight perfect matching.
    std::vector<int> solve() {
        int stall = 0;
        while (true) {
            int before = matched_count();
            greedy_init();
            if (grow()) break;
            update_duals();
            stall = matched_count() > before ? 0 : stall + 1;
            if (stall > 20 * n_ + 200) throw InternalError("matching: dual updates stalled");
        }
        for (int i = 0; i < 2 * n_; ++i)
            if (active_[i] && mate_[i] != -1 && outer_[i] == i) expand(i, true);
        std::vector<int> mates(mate_.begin(), mate_.begin() + n_);
        for (int u = 0; u < n_; ++u)
            if (mates[u] < 0 || mates[u] >= n_ || mates[mates[u]] != u)
                throw InternalError("matching: extraction produced a non-matching");
        return mates;
    }

private:
    size_t pair_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        return size_t(int64_t(u) * n_ - int64_t(u + 1) * (u + 2) / 2 + v);
    }
    int64_t& slack_at(int u, int v) { return slack_[pair_index(u, v)]; }
    bool tight(int u, int v) { return slack_at(u, v) == 0; }

    int matched_count() const {
        int c = 0;
        for (int i = 0; i < n_; ++i)
            if (mate_[outer_[i]] != -1) ++c;
        return c;
    }

    /// Greedy maximal matching on tight edges; unmatched vertices pick the
    /// tight neighbor of smallest tight-degree first.
    void greedy_init() {
        std::vector<int> degree(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (tight(u, v)) {
                    ++degree[u];
                    ++degree[v];
                }
        for (int u = 0; u < n_; ++u) {
            if (mate_[outer_[u]] != -1) continue;
            int pick = -1;
            for (int v = 0; v < n_; ++v) {
                if (u == v || !tight(u, v) || outer_[u] == outer_[v] || mate_[outer_[v]] != -1) continue;
                if (pick == -1 || degree[v] < degree[pick]) pick = v;
            }
            if (pick != -1) {
                mate_[outer_[u]] = pick;
                mate_[outer_[pick]] = u;
            }
        }
    }

    /// Rebuild the forest: destroy unblocked blossoms, unmatched outers
    /// become even roots.
    void reset() {
        for (int i = 0; i < 2 * n_; ++i) {
            forest_[i] = -1;
            root_[i] = i;
            if (i >= n_ && active_[i] && outer_[i] == i) destroy_blossom(i);
        }
        std::fill(visited_.begin(), visited_.end(), 0);
        queue_.clear();
        for (int i = 0; i < n_; ++i) {
            if (mate_[outer_[i]] == -1) {
                type_[outer_[i]] = kEven;
                if (!visited_[outer_[i]]) {
                    queue_.push_back(i);
                    visited_[outer_[i]] = 1;
                }
            } else {
                type_[outer_[i]] = kUnlabeled;
            }
        }
    }

    /// BFS over tight edges: attach unlabeled pairs, contract blossoms,
    /// augment across trees. True iff the matching ends perfect.
    bool grow() {
        reset();
        while (!queue_.empty()) {
            int w = outer_[queue_.back()];
            queue_.pop_back();
            bool restart = false;
            for (size_t di = 0; di < deep_[w].size() && !restart; ++di) {
                int u = deep_[w][di];
                for (int v = 0; v < n_ && !restart; ++v) {
                    if (u == v || !tight(u, v)) continue;
                    int ov = outer_[v];
                    if (type_[ov] == kOdd) continue;
                    if (type_[ov] != kEven) {
                        int vm = mate_[ov];
                        forest_[ov] = u;
                        type_[ov] = kOdd;
                        root_[ov] = root_[outer_[u]];
                        int om = outer_[vm];
                        forest_[om] = v;
                        type_[om] = kEven;
                        root_[om] = root_[outer_[u]];
                        if (!visited_[om]) {
                            queue_.push_back(vm);
                            visited_[om] = 1;
                        }
                    } else if (root_[ov] != root_[outer_[u]]) {
                        augment(u, v);
                        reset();
                        restart = true;
                    } else if (ov != outer_[u]) {
                        int b = make_blossom(u, v);
                        queue_.push_back(b);
                        visited_[b] = 1;
                        restart = true;
                    }
                }
            }
        }
        for (int i = 0; i < n_; ++i)
            if (mate_[outer_[i]] == -1) return false;
        return true;
    }

    /// Flip the matching along the tree paths root..u and v..root.
    void augment(int u, int v) {
        int p = outer_[u];
        int q = outer_[v];
        int other_side = q;
        int fp = forest_[p];
        mate_[p] = q;
        mate_[q] = p;
        expand(p, false);
        expand(q, false);
        while (fp != -1) {
            q = outer_[forest_[p]];
            p = outer_[forest_[q]];
            fp = forest_[p];
            mate_[p] = q;
            mate_[q] = p;
            expand(p, false);
            expand(q, false);
        }
        p = other_side;
        fp = forest_[p];
        while (fp != -1) {
            q = outer_[forest_[p]];
            p = outer_[forest_[q]];
            fp = forest_[p];
            mate_[p] = q;
            mate_[q] = p;
            expand(p, false);
            expand(q, false);
        }
    }

    /// Contract the odd circuit through u and v and their lowest common
    /// forest ancestor into a fresh slot.
    int make_blossom(int u, int v) {
        if (free_slots_.empty()) throw InternalError("matching: blossom slots exhausted");
        int t = free_slots_.back();
        free_slots_.pop_back();

        std::vector<char> in_path(2 * n_, 0);
        for (int x = u; x != -1; x = forest_[outer_[x]]) in_path[outer_[x]] = 1;
        int lca = outer_[v];
        while (!in_path[lca]) lca = outer_[forest_[lca]];

        shallow_[t].clear();
        deep_[t].clear();
        // Circuit order: lca .. u (downward), then v .. just-below-lca (upward).
        std::vector<int> down;
        for (int x = outer_[u]; x != lca; x = outer_[forest_[x]]) down.push_back(x);
        shallow_[t].push_back(lca);
        for (auto it = down.rbegin(); it != down.rend(); ++it) shallow_[t].push_back(*it);
        for (int x = outer_[v]; x != lca; x = outer_[forest_[x]]) shallow_[t].push_back(x);

        for (int s : shallow_[t]) {
            outer_[s] = t;
            for (int d : deep_[s]) {
                deep_[t].push_back(d);
                outer_[d] = t;
            }
        }
        forest_[t] = forest_[lca];
        type_[t] = kEven;
        root_[t] = root_[lca];
        active_[t] = 1;
        outer_[t] = t;
        mate_[t] = mate_[lca];
        return t;
    }

    /// Undo a blossom whose dual is spent (or any blossom during extraction):
    /// pick the connecting edge to the mate, rotate the circuit so the
    /// matched child leads, and pair the rest around the odd circuit.
    ///
    /// The connecting edge is the tight edge of smallest pair index, so the
    /// two sides of a matched blossom pair agree on it without coordination.
    void expand(int u, bool expand_blocked) {
        int v = outer_[mate_[u]];
        size_t best = std::numeric_limits<size_t>::max();
        int p = -1, q = -1;
        for (int di : deep_[u])
            for (int dj : deep_[v])
                if (di != dj && tight(di, dj) && pair_index(di, dj) < best) {
                    best = pair_index(di, dj);
                    p = di;
                    q = dj;
                }
        if (p == -1) throw InternalError("matching: no tight edge between matched units");
        mate_[u] = q;
        mate_[v] = p;
        if (u < n_ || (blocked_[u] && !expand_blocked)) return;

        // Rotate so the child containing p comes first.
        size_t k = 0;
        while (k < shallow_[u].size()) {
            int s = shallow_[u][k];
            if (std::find(deep_[s].begin(), deep_[s].end(), p) != deep_[s].end()) break;
            ++k;
        }
        if (k == shallow_[u].size()) throw InternalError("matching: matched vertex outside blossom circuit");
        std::rotate(shallow_[u].begin(), shallow_[u].begin() + k, shallow_[u].end());

        mate_[shallow_[u][0]] = mate_[u];
        for (size_t i = 1; i + 1 < shallow_[u].size(); i += 2) {
            mate_[shallow_[u][i]] = shallow_[u][i + 1];
            mate_[shallow_[u][i + 1]] = shallow_[u][i];
        }

        for (int s : shallow_[u]) {
            outer_[s] = s;
            for (int d : deep_[s]) outer_[d] = s;
        }
        active_[u] = 0;
        free_slots_.push_back(u);
        std::vector<int> children = shallow_[u];
        for (int s : children) expand(s, expand_blocked);
    }

    /// Dissolve a blossom without touching the matching inside it. Blocked
    /// blossoms with remaining dual stay contracted.
    void destroy_blossom(int t) {
        if (t < n_ || (blocked_[t] && dual_[t] > 0)) return;
        for (int s : shallow_[t]) {
            outer_[s] = s;
            for (int d : deep_[s]) outer_[d] = s;
            destroy_blossom(s);
        }
        active_[t] = 0;
        blocked_[t] = 0;
        free_slots_.push_back(t);
        mate_[t] = -1;
    }

    void update_duals() {
        int64_t e1 = -1, e2 = -1, e3 = -1;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                int tu = type_[outer_[u]], tv = type_[outer_[v]];
                int64_t s = slack_at(u, v);
                if ((tu == kEven && tv == kUnlabeled) || (tv == kEven && tu == kUnlabeled)) {
                    if (e1 == -1 || s < e1) e1 = s;
                } else if (outer_[u] != outer_[v] && tu == kEven && tv == kEven) {
                    if (e2 == -1 || s < e2) e2 = s;
                }
            }
        for (int i = n_; i < 2 * n_; ++i)
            if (active_[i] && outer_[i] == i && type_[i] == kOdd && (e3 == -1 || dual_[i] < e3)) e3 = dual_[i];

        if (e2 != -1 && (e2 & 1)) throw InternalError("matching: odd even-even slack breaks dual parity");
        int64_t delta = -1;
        if (e1 != -1) delta = e1;
        if (e2 != -1 && (delta == -1 || e2 / 2 < delta)) delta = e2 / 2;
        if (e3 != -1 && (delta == -1 || e3 < delta)) delta = e3;
        if (delta <= 0) throw InternalError("matching: no positive dual step available");

        for (int i = 0; i < 2 * n_; ++i) {
            if (i != outer_[i] || !active_[i]) continue;
            if (type_[i] == kEven)
                dual_[i] += delta;
            else if (type_[i] == kOdd)
                dual_[i] -= delta;
        }
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                if (outer_[u] == outer_[v]) continue;
                int tu = type_[outer_[u]], tv = type_[outer_[v]];
                int64_t& s = slack_at(u, v);
                if (tu == kEven && tv == kEven)
                    s -= 2 * delta;
                else if (tu == kOdd && tv == kOdd)
                    s += 2 * delta;
                else if ((tu == kEven && tv == kUnlabeled) || (tv == kEven && tu == kUnlabeled))
                    s -= delta;
                else if ((tu == kOdd && tv == kUnlabeled) || (tv == kOdd && tu == kUnlabeled))
                    s += delta;
            }

        for (int i = n_; i < 2 * n_; ++i) {
            if (dual_[i] > 0) {
                blocked_[i] = 1;
            } else if (active_[i] && blocked_[i]) {
                if (mate_[i] == -1)
                    destroy_blossom(i);
                else {
                    blocked_[i] = 0;
                    expand(i, false);
                }
            }
        }
    }

    int n_;
    std::vector<int64_t> slack_;
    std::vector<std::vector<int>> deep_, shallow_;
    std::vector<int> outer_, type_, forest_, root_, mate_;
    std::vector<int64_t> dual_;
    std::vector<char> active_, blocked_, visited_;
    std::vector<int> free_slots_, queue_;
};

}  // namespace

std::optional<Matching> min_weight_perfect_matching(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    if (int(wg.weights.size()) != g.m())
        throw std::invalid_argument("matching: weight count != edge count");
    if (g.n() % 2 != 0) return std::nullopt;
    if (g.n() == 0) return Matching{EdgeSet(0), 0};

    int64_t total = 0;
    for (int64_t w : wg.weights) {
        if (w < 0) throw std::invalid_argument("matching: negative weight");
        total += w;
        if (total > std::numeric_limits<int64_t>::max() / 16)
            throw std::invalid_argument("matching: weights too large");
    }
    int64_t big = total + 1;

    // Doubled weights keep every dual step integral; see BlossomSolver.
    std::vector<int64_t> slack(size_t(g.n()) * (g.n() - 1) / 2, 2 * big);
    auto at = [&](int u, int v) -> int64_t& {
        if (u > v) std::swap(u, v);
        return slack[size_t(u) * g.n() - size_t(u + 1) * (u + 2) / 2 + v];
    };
    for (int e = 0; e < g.m(); ++e) at(g.edge(e).u, g.edge(e).v) = 2 * wg.weights[e];

    std::vector<int> mates = BlossomSolver(g.n(), std::move(slack)).solve();

    Matching out{EdgeSet(g.m()), 0};
    for (int u = 0; u < g.n(); ++u) {
        int v = mates[u];
        if (v < u) continue;
        int e = g.edge_id(u, v);
        if (e == -1) return std::nullopt;  // only the prohibitive fill-in edge was available
        out.edges.set(e);
        out.total_weight += wg.weights[e];
    }
    if (out.edges.count() * 2 != g.n()) throw InternalError("matching: result is not perfect");
    return out;
}

bool has_perfect_matching(const Graph& g) {
    return min_weight_perfect_matching({g, std::vector<int64_t>(g.m(), 0)}).has_value();
}

namespace {

void brute_extend(const WeightedGraph& wg, std::vector<char>& used, int covered, EdgeSet& picked,
                  int64_t weight, std::optional<Matching>& best) {
    const Graph& g = wg.graph;
    if (covered == g.n()) {
        if (!best || weight < best->total_weight ||
            (weight == best->total_weight && picked.lex_less(best->edges)))
            best = Matching{picked, weight};
        return;
    }
    int u = 0;
    while (used[u]) ++u;
    for (int e : g.incident_edges(u)) {
        int v = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
        if (used[v]) continue;
        used[u] = used[v] = 1;
        picked.set(e);
        brute_extend(wg, used, covered + 2, picked, weight + wg.weights[e], best);
        picked.set(e, false);
        used[u] = used[v] = 0;
    }
}

}  // namespace

std::optional<Matching> brute_min_weight_pm(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    if (g.n() > 12 && g.m() > 24)
        throw BudgetError("brute_min_weight_pm: needs n <= 12 or m <= 24");
    if (int(wg.weights.size()) != g.m())
        throw std::invalid_argument("matching: weight count != edge count");
    if (g.n() % 2 != 0) return std::nullopt;
    std::optional<Matching> best;
    std::vector<char> used(g.n(), 0);
    EdgeSet picked(g.m());
    brute_extend(wg, used, 0, picked, 0, best);
    return best;
}

}  // namespace lamps
