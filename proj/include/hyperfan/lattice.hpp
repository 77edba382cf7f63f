#pragma once

/**
 * @file lattice.hpp
 * @brief Rational lattices, quotient elements of R^n / L, and the integer
 *        normal forms (Hermite, Smith) behind lattice arithmetic.
 *
 * A lattice here is the Z-span of k <= n independent rational vectors. The
 * quotient R^n / L is represented by canonical representatives: the
 * lattice-basis coordinates of the representative lie in [0,1), and the
 * component outside span(L) is kept verbatim. With that normal form,
 * quotient equality is a syntactic comparison.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace hyperfan {

/// Z-span of independent rational basis vectors inside R^n.
struct Lattice {
    std::size_t ambient_dim = 0;
    std::vector<RatVec> basis;

    Lattice() = default;
    Lattice(std::size_t n, std::vector<RatVec> basis_) : ambient_dim(n), basis(std::move(basis_)) {
        for (const RatVec& b : basis) require_dim(b, ambient_dim, "lattice basis vector");
        if (!independent(basis))
            throw std::invalid_argument("lattice basis vectors are linearly dependent");
    }

    std::size_t rank() const { return basis.size(); }
    bool operator==(const Lattice& other) const = default;
};

/// Rational coordinates of v in the lattice basis, or absent if v is outside
/// span(L).
inline std::optional<RatVec> span_coords(const Lattice& L, const RatVec& v) {
    require_dim(v, L.ambient_dim, "span_coords");
    return solve_in_span(L.basis, v);
}

/// True iff v is a lattice point (integral coordinates in the basis).
inline bool in_lattice(const Lattice& L, const RatVec& v) {
    const auto coords = span_coords(L, v);
    if (!coords) return false;
    for (const Rat& c : *coords)
        if (c.get_den() != 1) return false;
    return true;
}

/// True iff a and b describe the same lattice (mutual containment of bases).
inline bool same_lattice(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim != b.ambient_dim || a.rank() != b.rank()) return false;
    for (const RatVec& v : a.basis)
        if (!in_lattice(b, v)) return false;
    for (const RatVec& v : b.basis)
        if (!in_lattice(a, v)) return false;
    return true;
}

/// True iff w is a primitive lattice vector: w in L, w != 0, and the integer
/// coordinate vector of w has gcd 1 (w is not a proper multiple of a lattice
/// point).
inline bool is_primitive_in(const Lattice& L, const RatVec& w) {
    const auto coords = span_coords(L, w);
    if (!coords) return false;
    mpz_class g = 0;
    for (const Rat& c : *coords) {
        if (c.get_den() != 1) return false;
        mpz_class a = abs(c.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g == 1;
}

/// Element of R^n / L, stored as its canonical representative.
struct QuotientElement {
    RatVec rep;       ///< canonical: lattice coordinates in [0,1)
    Lattice lattice;  ///< the lattice being quotiented by

    bool operator==(const QuotientElement& other) const = default;
    bool is_zero() const { return is_zero_vec(rep); }
};

/// Deterministic completion of the lattice basis to a basis of R^n: standard
/// basis vectors are appended in coordinate order whenever they enlarge the
/// span. Used to split off the component of a vector outside span(L).
inline std::vector<RatVec> complete_basis(const Lattice& L) {
    std::vector<RatVec> full = L.basis;
    std::size_t r = full.size();
    for (std::size_t j = 0; j < L.ambient_dim && r < L.ambient_dim; ++j) {
        RatVec e(L.ambient_dim, Rat(0));
        e[j] = 1;
        full.push_back(e);
        if (rank(full) == r + 1) ++r;
        else full.pop_back();
    }
    return full;
}

/// Canonical representative of v + L: lattice coordinates reduced into [0,1),
/// the complementary component unchanged.
inline QuotientElement reduce_mod_lattice(const RatVec& v, const Lattice& L) {
    require_dim(v, L.ambient_dim, "reduce_mod_lattice");
    if (L.rank() == 0) return QuotientElement{v, L};
    const std::vector<RatVec> full = complete_basis(L);
    const auto coords = solve_in_span(full, v);
    if (!coords) throw std::logic_error("completed basis failed to span");  // unreachable
    RatVec rep(L.ambient_dim, Rat(0));
    for (std::size_t i = 0; i < full.size(); ++i) {
        Rat c = (*coords)[i];
        if (i < L.rank()) c -= Rat(floor_rat(c));
        rep = add(rep, scale(c, full[i]));
    }
    return QuotientElement{rep, L};
}

/// Sum in R^n / L (canonicalized).
inline QuotientElement quotient_add(const QuotientElement& a, const QuotientElement& b) {
    if (!(a.lattice == b.lattice))
        throw std::invalid_argument("quotient_add: elements live in different quotients");
    return reduce_mod_lattice(add(a.rep, b.rep), a.lattice);
}

/// Additive inverse in R^n / L (canonicalized).
inline QuotientElement quotient_neg(const QuotientElement& a) {
    return reduce_mod_lattice(neg(a.rep), a.lattice);
}

// ---------------------------------------------------------------------------
// Integer matrix normal forms.
// ---------------------------------------------------------------------------

using IntVec = std::vector<mpz_class>;
using IntMat = std::vector<IntVec>;

/// Row-style Hermite normal form: returns H (row echelon, positive pivots,
/// entries above each pivot reduced) and a unimodular U with U * A = H.
struct HnfResult {
    IntMat h;
    IntMat u;
    std::vector<std::size_t> pivot_cols;  ///< pivot column per nonzero row of h
};

inline HnfResult hnf_rows(IntMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    IntMat u(rows, IntVec(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;

    const auto row_combine = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t c = 0; c < cols; ++c) a[dst][c] -= q * a[src][c];
        for (std::size_t c = 0; c < rows; ++c) u[dst][c] -= q * u[src][c];
    };

    HnfResult out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        // Euclidean reduction of the column below pivot_row until one nonzero
        // entry remains; that entry ends up dividing everything it cleared.
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pivot_row; r < rows; ++r) {
                if (a[r][col] == 0) continue;
                if (best == rows || mpz_cmpabs(a[r][col].get_mpz_t(), a[best][col].get_mpz_t()) < 0)
                    best = r;
            }
            if (best == rows) break;  // column clear below pivot_row
            std::swap(a[best], a[pivot_row]);
            std::swap(u[best], u[pivot_row]);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                if (a[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[pivot_row][col].get_mpz_t());
                row_combine(r, pivot_row, q);
                if (a[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a[pivot_row][col] == 0) continue;
        if (a[pivot_row][col] < 0) {
            for (auto& x : a[pivot_row]) x = -x;
            for (auto& x : u[pivot_row]) x = -x;
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t r = 0; r < pivot_row; ++r) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[r][col].get_mpz_t(), a[pivot_row][col].get_mpz_t());
            if (q != 0) row_combine(r, pivot_row, q);
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    out.h = std::move(a);
    out.u = std::move(u);
    return out;
}

/// Basis of the integer left kernel {m : m * A = 0} of an integer matrix.
inline IntMat integer_left_kernel(const IntMat& a) {
    const HnfResult res = hnf_rows(a);
    IntMat kernel;
    for (std::size_t r = res.pivot_cols.size(); r < res.h.size(); ++r)
        kernel.push_back(res.u[r]);
    return kernel;
}

/// True iff target lies in the Z-span of the rows of the generator matrix.
inline bool in_z_row_span(const IntMat& generators, IntVec target) {
    const HnfResult res = hnf_rows(generators);
    for (std::size_t r = 0; r < res.pivot_cols.size(); ++r) {
        const std::size_t c = res.pivot_cols[r];
        if (target[c] == 0) continue;
        mpz_class q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), target[c].get_mpz_t(),
                    res.h[r][c].get_mpz_t());
        if (rem != 0) return false;
        for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * res.h[r][j];
    }
    for (const mpz_class& x : target)
        if (x != 0) return false;
    return true;
}

/// Invariant factors (Smith normal form diagonal, positive, each dividing the
/// next) of an integer matrix.
inline std::vector<mpz_class> smith_divisors(IntMat a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<mpz_class> divisors;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate a nonzero entry of minimal absolute value in the submatrix.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                if (pr == rows || mpz_cmpabs(a[r][c].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;  // submatrix is zero
        std::swap(a[pr], a[t]);
        for (std::size_t r = t; r < rows; ++r) std::swap(a[r][pc], a[r][t]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear column t with row operations.
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0) continue;
                mpz_class q = a[r][t] / a[t][t];
                for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) {
                    std::swap(a[r], a[t]);  // smaller remainder becomes the pivot
                    dirty = true;
                }
            }
            // Clear row t with column operations.
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0) continue;
                mpz_class q = a[t][c] / a[t][t];
                for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) {
                    for (std::size_t r = t; r < rows; ++r) std::swap(a[r][c], a[r][t]);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Enforce divisibility of the rest of the submatrix by the pivot.
            for (std::size_t r = t + 1; r < rows && !dirty; ++r)
                for (std::size_t c = t + 1; c < cols && !dirty; ++c)
                    if (a[r][c] % a[t][t] != 0) {
                        for (std::size_t cc = t; cc < cols; ++cc) a[t][cc] += a[r][cc];
                        dirty = true;
                    }
        }
        divisors.push_back(abs(a[t][t]));
        ++t;
    }
    return divisors;
}

/// Scales rational vectors by their common denominator, yielding integer rows.
inline IntMat scale_rows_to_integer(const std::vector<RatVec>& rows) {
    mpz_class d = 1;
    for (const RatVec& row : rows)
        for (const Rat& x : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
    IntMat out;
    out.reserve(rows.size());
    for (const RatVec& row : rows) {
        IntVec irow;
        irow.reserve(row.size());
        for (const Rat& x : row) {
            Rat scaled = x * Rat(d);
            irow.push_back(scaled.get_num());
        }
        out.push_back(std::move(irow));
    }
    return out;
}

/// Z_2-rank of the 2-torsion of (Lambda cap span(L)) / L, where Lambda is the
/// Z-span of the given isotropy vectors together with L itself. This is the
/// number of even invariant factors of the finite quotient.
inline std::size_t twisting_group(const std::vector<RatVec>& isotropy_part, const Lattice& L) {
    for (const RatVec& v : isotropy_part) require_dim(v, L.ambient_dim, "twisting_group");
    const std::size_t k = L.rank();
    if (k == 0) return 0;

    // One common integer scaling for the generators of Lambda and the basis
    // of L; scaling is a group isomorphism, so the quotient is unchanged.
    std::vector<RatVec> all = isotropy_part;
    for (const RatVec& b : L.basis) all.push_back(b);
    const IntMat scaled = scale_rows_to_integer(all);
    IntMat lambda_gens(scaled.begin(), scaled.begin() + isotropy_part.size());
    IntMat l_basis(scaled.begin() + isotropy_part.size(), scaled.end());
    for (const IntVec& row : l_basis) lambda_gens.push_back(row);

    // Basis of Lambda from the Hermite form of its generators.
    const HnfResult lambda_hnf = hnf_rows(lambda_gens);
    IntMat lambda_basis(lambda_hnf.h.begin(),
                        lambda_hnf.h.begin() + lambda_hnf.pivot_cols.size());

    // Functionals cutting out span(L): rows phi with phi . b = 0 for all b.
    std::vector<RatVec> transpose_cols(L.ambient_dim, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < L.ambient_dim; ++j) transpose_cols[j][i] = L.basis[i][j];
    const std::vector<RatVec> annihilator = kernel_basis(transpose_cols, k);

    // Lambda cap span(L): integer combinations m of the Lambda basis with
    // (m . basis) annihilated by every functional.
    std::vector<RatVec> constraint_rows;
    for (const IntVec& bv : lambda_basis) {
        RatVec row;
        for (const RatVec& phi : annihilator) {
            Rat s = 0;
            for (std::size_t j = 0; j < phi.size(); ++j) s += Rat(bv[j]) * phi[j];
            row.push_back(s);
        }
        constraint_rows.push_back(std::move(row));
    }
    IntMat kernel_rows;
    if (annihilator.empty()) {
        // span(L) = R^n; the intersection is Lambda itself.
        kernel_rows.resize(lambda_basis.size());
        for (std::size_t i = 0; i < lambda_basis.size(); ++i) {
            kernel_rows[i].assign(lambda_basis.size(), 0);
            kernel_rows[i][i] = 1;
        }
    } else {
        kernel_rows = integer_left_kernel(scale_rows_to_integer(constraint_rows));
    }

    // Basis of Lambda cap span(L) in ambient coordinates.
    IntMat inter_basis;
    for (const IntVec& m : kernel_rows) {
        IntVec w(L.ambient_dim, 0);
        for (std::size_t i = 0; i < lambda_basis.size(); ++i)
            for (std::size_t j = 0; j < L.ambient_dim; ++j) w[j] += m[i] * lambda_basis[i][j];
        inter_basis.push_back(std::move(w));
    }
    if (inter_basis.size() != k)
        throw std::logic_error("lattice-subspace intersection has unexpected rank");

    // Coordinates of the (scaled) L basis in the intersection basis; the
    // quotient's invariant factors are the Smith divisors of that matrix.
    std::vector<RatVec> inter_rat;
    for (const IntVec& w : inter_basis) {
        RatVec rw;
        for (const mpz_class& x : w) rw.emplace_back(x);
        inter_rat.push_back(std::move(rw));
    }
    IntMat coord_mat;
    for (const IntVec& lb : l_basis) {
        RatVec target;
        for (const mpz_class& x : lb) target.emplace_back(x);
        const auto coords = solve_in_span(inter_rat, target);
        if (!coords) throw std::logic_error("L basis vector escaped the intersection lattice");
        IntVec irow;
        for (const Rat& c : *coords) {
            if (c.get_den() != 1)
                throw std::logic_error("L basis vector has non-integer intersection coordinates");
            irow.push_back(c.get_num());
        }
        coord_mat.push_back(std::move(irow));
    }

    std::size_t even = 0;
    for (const mpz_class& d : smith_divisors(coord_mat))
        if (d % 2 == 0) ++even;
    return even;
}

/// True iff the target quotient element lies in the subgroup of R^n / L
/// generated by the given values (equivalently: the representative is an
/// integer combination of the values and lattice basis vectors).
inline bool in_quotient_subgroup(const std::vector<RatVec>& values, const Lattice& L,
                                 const QuotientElement& target) {
    std::vector<RatVec> all = values;
    for (const RatVec& b : L.basis) all.push_back(b);
    all.push_back(target.rep);
    const IntMat scaled = scale_rows_to_integer(all);
    IntMat generators(scaled.begin(), scaled.end() - 1);
    return in_z_row_span(generators, scaled.back());
}

}  // namespace hyperfan
