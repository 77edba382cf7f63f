#pragma once

/**
 * @file glue.hpp
 * @brief The canonical 2^m reflection gluing of a fan's domain.
 *
 * Take 2^m copies of the closed domain, one per element of (Z_2)^m (one
 * generator per fan ray), and glue copies differing by e_i along the facet
 * dual to ray i. Combinatorially: a cell of the glued complex is a pair
 * (cone S, coset a.G_S), where G_S <= (Z_2)^m is generated by {e_i : i in S}.
 * The canonical coset representative is the bitmask with the S-positions
 * cleared, so the cone S carries exactly 2^(m-|S|) cells of dimension
 * n - |S|. Adjacent top cells differ by a single generator, which makes the
 * top-cell adjacency graph the m-dimensional hypercube graph - in particular
 * connected.
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "domain.hpp"
#include "fan.hpp"

namespace hyperfan {

/// Bitmask over the fan's rays, an element of (Z_2)^m.
using GroupElement = std::uint32_t;

/// One cell of the glued complex: a fan cone plus a coset of G_S.
struct GluedCell {
    ConeId cone;
    GroupElement coset;  ///< canonical representative: bits at S positions are 0
};

/// Closed complex obtained by the reflection gluing.
struct ClosedComplex {
    std::size_t n = 0;
    std::size_t m = 0;  ///< ray count of the source fan
    std::vector<GluedCell> cells;
};

inline GroupElement cone_mask(const ConeId& id) {
    GroupElement mask = 0;
    for (std::size_t i : id) mask |= GroupElement{1} << i;
    return mask;
}

/// Builds the reflection gluing of a valid fan's domain.
inline ClosedComplex reflection_glue(const Fan& f, std::uint64_t seed = kDefaultSeed) {
    const ValidationReport report = validate_fan(f, seed);
    if (!report.valid())
        throw std::invalid_argument("reflection_glue: fan is invalid (" +
                                    report.violations.front().condition + ": " +
                                    report.violations.front().detail + ")");
    if (f.rays.size() > 24)
        throw std::invalid_argument("reflection_glue: more than 24 rays is out of scope");
    ClosedComplex c;
    c.n = f.ambient_dim;
    c.m = f.rays.size();
    const GroupElement group_size = GroupElement{1} << c.m;
    for (const ConeId& id : derived_cones(f)) {
        const GroupElement mask = cone_mask(id);
        for (GroupElement g = 0; g < group_size; ++g)
            if ((g & mask) == 0) c.cells.push_back({id, g});
    }
    return c;
}

inline std::size_t glued_cell_dim(const ClosedComplex& c, const GluedCell& cell) {
    return c.n - cell.cone.size();
}

/// Euler characteristic by direct alternating cell count.
inline long euler_closed(const ClosedComplex& c) {
    long chi = 0;
    for (const GluedCell& cell : c.cells) chi += (glued_cell_dim(c, cell) % 2 == 0) ? 1 : -1;
    return chi;
}

/// Euler characteristic of the gluing by the closed-form cone sum
/// sum_S (-1)^(n-|S|) * 2^(m-|S|) over the derived cones of the fan. Serves
/// as an independent oracle against euler_closed on the enumerated complex.
inline long euler_closed_formula(const Fan& f) {
    const std::size_t n = f.ambient_dim;
    const std::size_t m = f.rays.size();
    long chi = 0;
    for (const ConeId& id : derived_cones(f)) {
        const long cells = 1l << (m - id.size());
        chi += ((n - id.size()) % 2 == 0) ? cells : -cells;
    }
    return chi;
}

/// Cell counts by cell dimension 0..n.
inline std::vector<std::size_t> closed_cell_counts(const ClosedComplex& c) {
    std::vector<std::size_t> counts(c.n + 1, 0);
    for (const GluedCell& cell : c.cells) counts.at(glued_cell_dim(c, cell))++;
    return counts;
}

/// Adjacency among top cells (zero cone, one per group element): two top
/// cells are adjacent when they share a facet cell ({i}, coset), i.e. when
/// they differ by exactly one generator. Pairs are returned with the smaller
/// element first, sorted, one entry per shared facet.
inline std::vector<std::pair<GroupElement, GroupElement>> top_cell_adjacency(
    const ClosedComplex& c) {
    std::vector<std::pair<GroupElement, GroupElement>> edges;
    for (const GluedCell& cell : c.cells) {
        if (cell.cone.size() != 1) continue;
        const GroupElement bit = GroupElement{1} << cell.cone[0];
        // The facet cell (S = {i}, coset g.G_S) is shared by exactly the top
        // cells g and g + e_i.
        edges.emplace_back(cell.coset, cell.coset | bit);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// True iff the top-cell adjacency graph is connected.
inline bool glued_connected(const ClosedComplex& c) {
    const GroupElement count = GroupElement{1} << c.m;
    std::vector<bool> seen(count, false);
    std::vector<GroupElement> stack{0};
    seen[0] = true;
    const auto edges = top_cell_adjacency(c);
    while (!stack.empty()) {
        const GroupElement g = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : edges) {
            if (a == g && !seen[b]) { seen[b] = true; stack.push_back(b); }
            if (b == g && !seen[a]) { seen[a] = true; stack.push_back(a); }
        }
    }
    for (GroupElement g = 0; g < count; ++g)
        if (!seen[g]) return false;
    return true;
}

/// Collapses all cosets: the quotient by the full (Z_2)^m action, which must
/// reproduce the fan's domain complex cell-for-cell.
inline DomainComplex collapse_cosets(const ClosedComplex& c) {
    std::map<ConeId, std::size_t> dims;
    for (const GluedCell& cell : c.cells) dims[cell.cone] = glued_cell_dim(c, cell);
    DomainComplex d;
    d.n = c.n;
    for (const auto& [cone, dim] : dims) d.cells.push_back({cone, dim});
    d.polytopality = d.n <= 3 ? Polytopality::yes : Polytopality::unknown;
    return d;
}

}  // namespace hyperfan
