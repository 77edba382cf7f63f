#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over the rationals.
 *
 * Reduced row echelon form, rank, unique solves and kernel bases, all by
 * exact Gaussian elimination on GMP rationals. These routines back every
 * geometric decision in the library (independence, membership, feasibility),
 * so none of them ever rounds.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace hyperfan {

/// Matrix-vector product for a matrix stored as a list of rows.
inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out;
    out.reserve(m.size());
    for (const RatVec& row : m) out.push_back(dot(row, v));
    return out;
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Rref {
    RatMat mat;                           ///< the reduced matrix (same shape as input)
    std::vector<std::size_t> pivot_cols;  ///< pivot column per nonzero row, in order
};

/// Computes the reduced row echelon form by exact Gauss-Jordan elimination.
inline Rref rref(RatMat m) {
    Rref out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        const Rat inv = 1 / m[pivot_row][col];
        for (std::size_t c = col; c < cols; ++c) m[pivot_row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            const Rat factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[pivot_row][c];
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    out.mat = std::move(m);
    return out;
}

/// Dimension of the span of the given vectors (all of one dimension).
inline std::size_t rank(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t n = vectors[0].size();
    for (const RatVec& v : vectors) require_dim(v, n, "rank");
    return rref(vectors).pivot_cols.size();
}

/// True iff the vectors are linearly independent (empty list: vacuously true).
inline bool independent(const std::vector<RatVec>& vectors) {
    return rank(vectors) == vectors.size();
}

/// Solves columns * x = target for the unique x, given that the columns are
/// linearly independent. Returns absent when target is outside their span.
inline std::optional<RatVec> solve_in_span(const std::vector<RatVec>& columns,
                                           const RatVec& target) {
    const std::size_t n = target.size();
    for (const RatVec& c : columns) require_dim(c, n, "solve_in_span");
    const std::size_t p = columns.size();
    RatMat aug(n, RatVec(p + 1, Rat(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < p; ++c) aug[r][c] = columns[c][r];
        aug[r][p] = target[r];
    }
    const Rref red = rref(std::move(aug));
    RatVec x(p, Rat(0));
    for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
        if (red.pivot_cols[r] == p) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
        x[red.pivot_cols[r]] = red.mat[r][p];
    }
    return x;
}

/// Basis of the kernel of the matrix whose columns are the given vectors,
/// i.e. all x with sum_j x_j * columns_j = 0. Kernel vectors have one entry
/// per column.
inline std::vector<RatVec> kernel_basis(const std::vector<RatVec>& columns,
                                        std::size_t ambient_dim) {
    const std::size_t p = columns.size();
    for (const RatVec& c : columns) require_dim(c, ambient_dim, "kernel_basis");
    RatMat m(ambient_dim, RatVec(p, Rat(0)));
    for (std::size_t r = 0; r < ambient_dim; ++r)
        for (std::size_t c = 0; c < p; ++c) m[r][c] = columns[c][r];
    const Rref red = rref(std::move(m));

    std::vector<bool> is_pivot(p, false);
    for (std::size_t col : red.pivot_cols) is_pivot[col] = true;
    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < p; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(p, Rat(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            v[red.pivot_cols[r]] = -red.mat[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Decides whether the homogeneous strict system  row_i . x > 0  for all i
/// has a solution, by Fourier-Motzkin elimination. Exact; rows may be empty
/// (feasible) and rows of length zero are the constant constraint 0 > 0.
inline bool strictly_feasible(std::vector<RatVec> rows) {
    std::size_t vars = 0;
    for (const RatVec& r : rows) vars = std::max(vars, r.size());
    for (RatVec& r : rows) r.resize(vars, Rat(0));

    for (std::size_t var = 0; var < vars; ++var) {
        // A constraint with no remaining nonzero coefficient reads 0 > 0.
        for (const RatVec& r : rows)
            if (is_zero_vec(r)) return false;

        std::vector<RatVec> pos, negv, zero;
        for (RatVec& r : rows) {
            const int s = sign(r[var]);
            if (s > 0) pos.push_back(std::move(r));
            else if (s < 0) negv.push_back(std::move(r));
            else zero.push_back(std::move(r));
        }
        std::vector<RatVec> next = std::move(zero);
        if (!pos.empty() && !negv.empty()) {
            // Pair every lower bound with every upper bound on this variable.
            for (const RatVec& pr : pos) {
                for (const RatVec& nr : negv) {
                    RatVec comb(vars, Rat(0));
                    for (std::size_t c = 0; c < vars; ++c)
                        comb[c] = pr[var] * nr[c] - nr[var] * pr[c];
                    next.push_back(std::move(comb));
                }
            }
        }
        rows = std::move(next);
    }
    for (const RatVec& r : rows)
        if (is_zero_vec(r)) return false;
    return true;
}

}  // namespace hyperfan
