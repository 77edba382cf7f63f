#pragma once

/**
 * @file cone.hpp
 * @brief Simplicial cones and exact membership / interior / disjointness tests.
 *
 * A simplicial cone is the nonnegative span of finitely many linearly
 * independent rational rays; the empty ray list is the zero cone {0}. Its
 * relative interior is the set of strictly positive combinations (for the
 * zero cone, {0} itself). All decisions are exact.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace hyperfan {

/// Cone spanned by independent rays; empty ray list means the zero cone {0}.
struct SimplicialCone {
    std::vector<RatVec> rays;
    std::size_t ambient_dim = 0;

    SimplicialCone() = default;

    /// Builds a cone, checking the simpliciality preconditions.
    SimplicialCone(std::vector<RatVec> rays_, std::size_t ambient_dim_)
        : rays(std::move(rays_)), ambient_dim(ambient_dim_) {
        for (const RatVec& r : rays) {
            require_dim(r, ambient_dim, "simplicial cone ray");
            if (is_zero_vec(r)) throw std::invalid_argument("simplicial cone ray is zero");
        }
        if (!independent(rays))
            throw std::invalid_argument("simplicial cone rays are linearly dependent");
    }

    std::size_t dim() const { return rays.size(); }
    bool is_zero_cone() const { return rays.empty(); }
};

/// Returns the unique nonnegative coefficients alpha with
/// w = sum alpha_i * ray_i, or absent when no such alpha exists.
/// Precondition: rays linearly independent (uniqueness depends on it).
inline std::optional<RatVec> solve_nonneg(const std::vector<RatVec>& rays, const RatVec& w) {
    if (!independent(rays))
        throw std::invalid_argument("solve_nonneg: rays are linearly dependent");
    if (rays.empty()) {
        if (is_zero_vec(w)) return RatVec{};
        return std::nullopt;
    }
    std::optional<RatVec> alpha = solve_in_span(rays, w);
    if (!alpha) return std::nullopt;
    for (const Rat& a : *alpha)
        if (a < 0) return std::nullopt;
    return alpha;
}

/// True iff w lies in the relative interior of the cone
/// (all coefficients strictly positive; zero cone: w = 0).
inline bool in_relative_interior(const SimplicialCone& cone, const RatVec& w) {
    require_dim(w, cone.ambient_dim, "in_relative_interior");
    if (cone.is_zero_cone()) return is_zero_vec(w);
    std::optional<RatVec> alpha = solve_nonneg(cone.rays, w);
    if (!alpha) return false;
    for (const Rat& a : *alpha)
        if (a == 0) return false;
    return true;
}

/// True iff the relative interiors of the two cones share no point.
/// Decided exactly: a common point means a strictly positive solution of
/// sum alpha_i a_i = sum beta_j b_j, i.e. a strictly positive kernel element
/// of [A | -B]; strict feasibility is settled by Fourier-Motzkin on the
/// kernel parametrization.
inline bool relint_disjoint(const SimplicialCone& a, const SimplicialCone& b) {
    if (a.ambient_dim != b.ambient_dim)
        throw dimension_mismatch("relint_disjoint: ambient dimensions differ");
    if (a.is_zero_cone() && b.is_zero_cone()) return false;  // both interiors are {0}
    if (a.is_zero_cone() || b.is_zero_cone()) return true;   // 0 is never interior to a nonzero cone

    std::vector<RatVec> columns = a.rays;
    for (const RatVec& r : b.rays) columns.push_back(neg(r));
    const std::vector<RatVec> kernel = kernel_basis(columns, a.ambient_dim);
    if (kernel.empty()) return true;  // only the trivial combination, which is not positive

    // Constraint rows: every coefficient of the kernel combination must be > 0.
    const std::size_t total = columns.size();
    std::vector<RatVec> constraints(total, RatVec(kernel.size(), Rat(0)));
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t k = 0; k < kernel.size(); ++k) constraints[i][k] = kernel[k][i];
    return !strictly_feasible(std::move(constraints));
}

}  // namespace hyperfan
