#pragma once

/**
 * @file marked_graph.hpp
 * @brief Marked graphs of toric-degree n-1 actions and their classification.
 *
 * The quotient of a toric-degree n-1 action is a circle or an interval.
 * Vertices carry marks: either a single associated vector (a corank-1
 * hyperbolic orbit; at interval ends this is a twisted point) or a couple
 * (v, +/-w) (a corank-2 elliptic orbit; interval ends only). The validator
 * enforces the four graph conditions:
 *
 *   (C i)   circle: even positive vertex count; interval: at least two
 *           vertices (the two ends);
 *   (C ii)  couples only at interval endpoints;
 *   (C iii) the lattice has rank n-1;
 *   (C iv)  every mark direction v is transverse to span(L)
 *           (so R.v + span(L) = R^n), couple second vectors are primitive
 *           lattice elements, and consecutive marks lie on opposite sides of
 *           span(L) (alternating sign of the functional vanishing on it).
 *
 * Classification by endpoint kinds: circle - case a (torus); interval with
 * two couples - case b (n=2: the sphere; n=3: a sphere bundle or a lens
 * space, told apart by the vanishing cycles); one couple and one single -
 * case c (n=2: the projective plane); two singles - case d (n=2: the Klein
 * bottle).
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace hyperfan {

enum class GraphShape { circle, interval };

/// Vertex mark: a single associated vector, or an elliptic couple (v, +/-w).
struct Mark {
    bool is_couple = false;
    RatVec v;  ///< associated vector (single) or the couple's first vector
    RatVec w;  ///< couple second vector (+/-w), empty for single marks
};

/// Marked graph of a toric-degree n-1 action.
struct MarkedGraph {
    GraphShape shape = GraphShape::circle;
    std::vector<Mark> vertices;        ///< cyclic (circle) or linear (interval) order
    Lattice lattice;                   ///< the isotropy lattice, rank n-1
    std::optional<RatVec> monodromy;   ///< circle shape: the element added per turn
};

/// A nonzero functional vanishing on span(L); defined up to scale when
/// rank(L) = n-1, which is all the alternation check needs.
inline std::optional<RatVec> normal_functional(const Lattice& L) {
    std::vector<RatVec> cols(L.ambient_dim, RatVec(L.rank(), Rat(0)));
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.ambient_dim; ++j) cols[j][i] = L.basis[i][j];
    const std::vector<RatVec> ann = kernel_basis(cols, L.rank());
    if (ann.size() != 1) return std::nullopt;
    return ann[0];
}

/// Checks conditions (C i)-(C iv); never throws on bad data.
inline ValidationReport validate_marked_graph(const MarkedGraph& g, int n) {
    ValidationReport report;
    const std::size_t count = g.vertices.size();

    if (g.shape == GraphShape::circle) {
        if (count == 0 || count % 2 != 0)
            report.add("C_i", "circle graph needs an even positive number of vertices, has " +
                                  std::to_string(count));
    } else if (count < 2) {
        report.add("C_i", "interval graph needs at least its two end vertices, has " +
                              std::to_string(count));
    }

    for (std::size_t i = 0; i < count; ++i) {
        const bool is_end =
            g.shape == GraphShape::interval && (i == 0 || i + 1 == count);
        if (g.vertices[i].is_couple && !is_end)
            report.add("C_ii", "vertex " + std::to_string(i) +
                                   " carries a couple away from an interval end");
    }

    if (static_cast<int>(g.lattice.rank()) != n - 1 ||
        g.lattice.ambient_dim != static_cast<std::size_t>(n)) {
        report.add("C_iii", "lattice must have rank n-1 = " + std::to_string(n - 1) +
                                " in R^" + std::to_string(n) + ", has rank " +
                                std::to_string(g.lattice.rank()));
        return report;  // the remaining checks presuppose the corank-1 lattice
    }

    const auto phi = normal_functional(g.lattice);
    if (!phi) {
        report.add("C_iii", "lattice basis does not span a hyperplane");
        return report;
    }
    std::vector<int> side(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const Mark& m = g.vertices[i];
        if (m.v.size() != static_cast<std::size_t>(n)) {
            report.add("C_iv", "mark " + std::to_string(i) + " has wrong dimension",
                       vec_to_string(m.v));
            continue;
        }
        side[i] = sign(dot(*phi, m.v));
        if (side[i] == 0)
            report.add("C_iv", "mark " + std::to_string(i) +
                                   " lies in span(L); R.v + span(L) must be all of R^n",
                       vec_to_string(m.v));
        if (m.is_couple && !is_primitive_in(g.lattice, m.w))
            report.add("C_iv", "couple at vertex " + std::to_string(i) +
                                   " has a non-primitive second vector",
                       vec_to_string(m.w));
    }
    if (!report.valid()) return report;

    const std::size_t pairs = g.shape == GraphShape::circle ? count : count - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t j = (i + 1) % count;
        if (side[i] == side[j])
            report.add("C_iv", "consecutive marks " + std::to_string(i) + " and " +
                                   std::to_string(j) + " lie on the same side of span(L)");
    }
    return report;
}

/// Classification outcome: the case letter and the manifold name when the
/// classification determines one (n = 2 always; n = 3 for case b).
struct GraphClass {
    char case_letter = 'a';
    std::string manifold;  ///< empty when no name is determined
};

/// Classifies a valid marked graph; rejects invalid ones.
inline GraphClass classify_marked_graph(const MarkedGraph& g, int n) {
    const ValidationReport report = validate_marked_graph(g, n);
    if (!report.valid())
        throw std::invalid_argument("classify_marked_graph: invalid graph (" +
                                    report.violations.front().condition + ": " +
                                    report.violations.front().detail + ")");
    GraphClass out;
    if (g.shape == GraphShape::circle) {
        out.case_letter = 'a';
        out.manifold = "T^" + std::to_string(n);
        return out;
    }
    const Mark& first = g.vertices.front();
    const Mark& last = g.vertices.back();
    if (first.is_couple && last.is_couple) {
        out.case_letter = 'b';
        if (n == 2) out.manifold = "S^2";
        if (n == 3) {
            // The vanishing cycles are the couple second vectors; equal up to
            // sign means the product is the trivial bundle.
            const bool same = first.w == last.w || first.w == neg(last.w);
            out.manifold = same ? "S^2 x S^1" : "lens";
        }
    } else if (first.is_couple != last.is_couple) {
        out.case_letter = 'c';
        if (n == 2) out.manifold = "RP^2";
    } else {
        out.case_letter = 'd';
        if (n == 2) out.manifold = "Klein bottle";
    }
    return out;
}

/// The same marked graph walked in the opposite direction; on the circle the
/// monodromy element flips sign. Classification is invariant under this.
inline MarkedGraph reverse(const MarkedGraph& g) {
    MarkedGraph out = g;
    std::reverse(out.vertices.begin(), out.vertices.end());
    if (g.shape == GraphShape::circle && g.monodromy) out.monodromy = neg(*g.monodromy);
    return out;
}

}  // namespace hyperfan
