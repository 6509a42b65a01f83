#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamps/bitset.hpp"
#include "lamps/graph.hpp"

namespace lamps {

/// Dense bit matrix over GF(2), row-major packed rows.
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, Bitset(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return row_[i].test(j); }
    void set(int i, int j, bool v = true) { row_[i].set(j, v); }
    const Bitset& row(int i) const { return row_[i]; }
    Bitset& row(int i) { return row_[i]; }

    /// '0'/'1' text grid, one row per line.
    std::string dump() const;

private:
    int rows_, cols_;
    std::vector<Bitset> row_;
};

/// Solution structure of A x = b: one particular solution plus a kernel basis.
struct Gf2Solution {
    bool consistent = false;
    Bitset particular;             // zero on free variables
    std::vector<Bitset> nullspace; // one vector per free variable
    int rank = 0;

    int nullity() const { return int(nullspace.size()); }
};

/// Gaussian elimination; consistent == false iff a zero row meets a 1 in b.
Gf2Solution solve(const Gf2Matrix& a, const Bitset& b);

/// Minimum-Hamming-weight member of the affine solution space, by Gray-code
/// enumeration of all 2^nullity combinations. Ties break toward the
/// lexicographically smallest bit vector. Absent iff nullity > nullity_cap.
/// Requires sol.consistent.
std::optional<Bitset> min_weight_solution(const Gf2Solution& sol, int nullity_cap = 20);

/// n x n matrix of the closed-neighborhood rule: (i,j) = 1 iff i == j or ij
/// is an edge.
Gf2Matrix closed_neighborhood_matrix(const Graph& g);

/// n rows (vertices) x m columns (edges); (v,e) = 1 iff v is an endpoint of e.
Gf2Matrix incidence_matrix(const Graph& g);

}  // namespace lamps
