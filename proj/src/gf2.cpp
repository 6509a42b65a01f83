#include "lamps/gf2.hpp"

#include "lamps/errors.hpp"

namespace lamps {

std::string Gf2Matrix::dump() const {
    std::string out;
    out.reserve(size_t(rows_) * (cols_ + 1));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Gf2Solution solve(const Gf2Matrix& a, const Bitset& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("gf2 solve: rhs length != row count");
    int rows = a.rows(), cols = a.cols();

    // Augmented rows: column `cols` carries b.
    std::vector<Bitset> aug(rows, Bitset(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            if (a.get(i, j)) aug[i].set(j);
        if (b.test(i)) aug[i].set(cols);
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (aug[i].test(c)) {
                pivot = i;
                break;
            }
        if (pivot == -1) continue;
        std::swap(aug[r], aug[pivot]);
        for (int i = 0; i < rows; ++i)
            if (i != r && aug[i].test(c)) aug[i] ^= aug[r];
        pivot_col.push_back(c);
        ++r;
    }

    Gf2Solution sol;
    sol.rank = r;
    sol.consistent = true;
    for (int i = r; i < rows; ++i)
        if (aug[i].test(cols)) sol.consistent = false;

    // The kernel basis is independent of b, so fill it either way; only the
    // particular solution is conditional on consistency.
    sol.particular = Bitset(cols);
    if (sol.consistent)
        for (int i = 0; i < r; ++i)
            if (aug[i].test(cols)) sol.particular.set(pivot_col[i]);

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Bitset v(cols);
        v.set(f);
        for (int i = 0; i < r; ++i)
            if (aug[i].test(f)) v.set(pivot_col[i]);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::optional<Bitset> min_weight_solution(const Gf2Solution& sol, int nullity_cap) {
    if (!sol.consistent) throw std::invalid_argument("min_weight_solution: inconsistent system");
    int k = sol.nullity();
    if (k > nullity_cap) return std::nullopt;

    Bitset current = sol.particular;
    Bitset best = current;
    int best_weight = best.count();
    // Gray code: step i flips basis vector ctz(i), visiting every combination.
    for (uint64_t i = 1; i < (uint64_t(1) << k); ++i) {
        current ^= sol.nullspace[__builtin_ctzll(i)];
        int w = current.count();
        if (w < best_weight || (w == best_weight && current.lex_less(best))) {
            best = current;
            best_weight = w;
        }
    }
    return best;
}

Gf2Matrix closed_neighborhood_matrix(const Graph& g) {
    Gf2Matrix a(g.n(), g.n());
    for (int i = 0; i < g.n(); ++i) a.set(i, i);
    for (const Edge& e : g.edges()) {
        a.set(e.u, e.v);
        a.set(e.v, e.u);
    }
    return a;
}

Gf2Matrix incidence_matrix(const Graph& g) {
    Gf2Matrix a(g.n(), g.m());
    for (int e = 0; e < g.m(); ++e) {
        a.set(g.edge(e).u, e);
        a.set(g.edge(e).v, e);
    }
    return a;
}

}  // namespace lamps
