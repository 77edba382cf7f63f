#pragma once

/**
 * @file domain.hpp
 * @brief The closed domain of a complete fan as a combinatorial cell complex.
 *
 * Each derived cone S of the fan contributes one cell of dimension
 * n - dim(S); the open top cell corresponds to the zero cone, vertices to the
 * maximal cones. Incidence is dual to cone inclusion: the cell of S lies in
 * the closure of the cell of S' exactly when S' is a subset of S. The
 * alternating cell count is 1 for every valid complete fan - the countable
 * shadow of the domain's contractibility.
 *
 * The complex is purely combinatorial (a face poset); whether it is realized
 * by an honest polytope is recorded as a flag: affirmed for n <= 3, left
 * unknown for n >= 4.
 */

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fan.hpp"
#include "hert.hpp"
#include "report.hpp"

namespace hyperfan {

/// Whether the combinatorial domain is known to be realizable as a polytope.
enum class Polytopality { yes, unknown };

/// One cell of the domain complex, named by its fan cone.
struct DomainCell {
    ConeId cone;      ///< ray-index set of the dual cone
    std::size_t dim;  ///< cell dimension, = n - cone.size()
};

/// Face poset of the closed domain dual to a complete fan.
struct DomainComplex {
    std::size_t n = 0;
    std::vector<DomainCell> cells;  ///< sorted by cone id; one per derived cone
    Polytopality polytopality = Polytopality::unknown;
};

/// Builds the domain complex of a valid fan; rejects invalid fans.
inline DomainComplex domain_from_fan(const Fan& f, std::uint64_t seed = kDefaultSeed) {
    const ValidationReport report = validate_fan(f, seed);
    if (!report.valid())
        throw std::invalid_argument("domain_from_fan: fan is invalid (" +
                                    report.violations.front().condition + ": " +
                                    report.violations.front().detail + ")");
    DomainComplex d;
    d.n = f.ambient_dim;
    for (const ConeId& id : derived_cones(f)) d.cells.push_back({id, d.n - id.size()});
    d.polytopality = d.n <= 3 ? Polytopality::yes : Polytopality::unknown;
    return d;
}

/// Incidence dual to cone inclusion: cell a lies in the closure of cell b
/// exactly when b's cone is a subset of a's cone.
inline bool lies_in_closure(const DomainComplex& d, std::size_t cell_a, std::size_t cell_b) {
    const ConeId& sa = d.cells.at(cell_a).cone;
    const ConeId& sb = d.cells.at(cell_b).cone;
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

/// Alternating cell count; equals 1 for the domain of any valid complete fan.
inline long euler_domain(const DomainComplex& d) {
    long chi = 0;
    for (const DomainCell& c : d.cells) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

/// Cell counts by dimension 0..n.
inline std::vector<std::size_t> domain_cell_counts(const DomainComplex& d) {
    std::vector<std::size_t> counts(d.n + 1, 0);
    for (const DomainCell& c : d.cells) counts.at(c.dim)++;
    return counts;
}

/// The orbit invariant of a cell: every cell of a fan domain is totally
/// hyperbolic, so (h, e, r, t) = (cone dim, 0, cell dim, 0).
inline HERT hert_of_cell(const DomainComplex& d, std::size_t cell) {
    const DomainCell& c = d.cells.at(cell);
    return HERT{static_cast<int>(c.cone.size()), 0, static_cast<int>(c.dim), 0};
}

}  // namespace hyperfan
