#pragma once

/**
 * @file typed_quotient.hpp
 * @brief Typed 2-orbifold quotients of toric-degree n-2 actions, the ten
 *        local singularity types, and reduction-data validation.
 *
 * The quotient of a toric-degree n-2 action is a 2-orbifold whose singular
 * strata carry one of ten local types: edge types I (h, interior),
 * II (h_t, boundary), III (e, boundary), and vertex types IV (h-h),
 * V (h-h_t), VI ((h-h)_t), VII (e-h), VIII (h_t-h_t), IX (e-h_t), X (e-e).
 * Each type stores an orbit invariant (h, e, r, t) plus the twisting rank k;
 * the table obeys h + 2e + r + t = n, e + t = n - 2, k <= min(h, t), which
 * rules out VIII-X in ambient dimension 3.
 *
 * Edges are single entities shared by their face sides, so gluings
 * automatically match letters; validation checks letter-position consistency
 * (boundary edges only e or h_t, interior edges only h), side counts, and
 * vertex incidences against the letter patterns above. Circular edges (no
 * endpoints) model closed singular curves such as an e-boundary circle.
 *
 * Reduction data attach to a typed quotient the isotropy lattice, the
 * associated vectors and couples on singular edges, per-stratum isotropy
 * generators, and a lift of the monodromy; validation checks transversality,
 * primitivity, the twisting ranks demanded by each type, and that the lifted
 * monodromy projects onto the declared reduced monodromy.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hert.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace hyperfan {

/// The ten local types of toric-degree n-2 singular strata.
struct QuotientTypeInfo {
    std::string code;     ///< "I" .. "X"
    std::string letters;  ///< stratum letters, e.g. "h_t" or "e-h"
    HERT hert;            ///< orbit invariant at ambient dimension n
    int k = 0;            ///< twisting rank of the stratum
};

/// The full type table at ambient dimension n. Entries with negative t are
/// illegal for that n (this is exactly what excludes VIII-X when n = 3).
inline std::vector<QuotientTypeInfo> quotient_type_table(int n) {
    return {
        {"I", "h", {1, 0, 1, n - 2}, 0},        {"II", "h_t", {1, 0, 1, n - 2}, 1},
        {"III", "e", {0, 1, 1, n - 3}, 0},      {"IV", "h-h", {2, 0, 0, n - 2}, 0},
        {"V", "h-h_t", {2, 0, 0, n - 2}, 1},    {"VI", "(h-h)_t", {2, 0, 0, n - 2}, 1},
        {"VII", "e-h", {1, 1, 0, n - 3}, 0},    {"VIII", "h_t-h_t", {2, 0, 0, n - 2}, 2},
        {"IX", "e-h_t", {1, 1, 0, n - 3}, 1},   {"X", "e-e", {0, 2, 0, n - 4}, 0},
    };
}

/// True iff the type is legal at ambient dimension n: the stored tuple is a
/// valid HERT and the twisting rank fits k <= min(h, t).
inline bool quotient_type_legal(const QuotientTypeInfo& info, int n) {
    return validate_hert(info.hert, n) && info.k <= std::min(info.hert.h, info.hert.t);
}

inline std::optional<QuotientTypeInfo> quotient_type_by_code(const std::string& code, int n) {
    for (const QuotientTypeInfo& info : quotient_type_table(n))
        if (info.code == code) return info;
    return std::nullopt;
}

/// Singular edge letters.
enum class EdgeLetter { h, h_t, e };

inline std::string edge_letter_name(EdgeLetter l) {
    switch (l) {
        case EdgeLetter::h: return "h";
        case EdgeLetter::h_t: return "h_t";
        default: return "e";
    }
}

/// Typed 2-orbifold description of a toric-degree n-2 quotient.
struct TypedQuotient {
    int n = 0;                ///< ambient dimension
    std::size_t face_count = 0;

    struct Edge {
        EdgeLetter letter = EdgeLetter::h;
        bool boundary = false;               ///< lies on the orbifold boundary
        std::vector<std::size_t> face_sides; ///< incident face per side
        std::optional<std::size_t> ends[2];  ///< vertices; both empty = circular edge
    };
    std::vector<Edge> edges;

    struct Vertex {
        std::string type;  ///< "IV" .. "X"
    };
    std::vector<Vertex> vertices;
};

/// Letter pattern each vertex type expects on its incident edge-ends.
inline std::vector<EdgeLetter> vertex_letter_pattern(const std::string& type) {
    using L = EdgeLetter;
    if (type == "IV") return {L::h, L::h, L::h, L::h};
    if (type == "V") return {L::h, L::h_t, L::h_t};
    if (type == "VI") return {L::h, L::h};
    if (type == "VII") return {L::e, L::e, L::h};
    if (type == "VIII") return {L::h_t, L::h_t};
    if (type == "IX") return {L::e, L::h_t};
    if (type == "X") return {L::e, L::e};
    return {};
}

/// Validates a typed quotient: type legality for n, letter-position rules,
/// face-side counts, and vertex incidence patterns.
inline ValidationReport validate_typed_quotient(const TypedQuotient& q) {
    ValidationReport report;

    for (std::size_t vi = 0; vi < q.vertices.size(); ++vi) {
        const auto info = quotient_type_by_code(q.vertices[vi].type, q.n);
        if (!info || vertex_letter_pattern(q.vertices[vi].type).empty()) {
            report.add("type-legal", "vertex " + std::to_string(vi) +
                                         " has unknown type " + q.vertices[vi].type);
            continue;
        }
        if (!quotient_type_legal(*info, q.n))
            report.add("type-legal",
                       "vertex " + std::to_string(vi) + " has type " + info->code +
                           " which is illegal at n = " + std::to_string(q.n),
                       hert_to_string(info->hert) + ", k=" + std::to_string(info->k));
    }

    for (std::size_t ei = 0; ei < q.edges.size(); ++ei) {
        const TypedQuotient::Edge& e = q.edges[ei];
        const std::string code =
            e.letter == EdgeLetter::h ? "I" : (e.letter == EdgeLetter::h_t ? "II" : "III");
        const auto info = quotient_type_by_code(code, q.n);
        if (!quotient_type_legal(*info, q.n))
            report.add("type-legal", "edge " + std::to_string(ei) + " has letter " +
                                         edge_letter_name(e.letter) +
                                         " which is illegal at n = " + std::to_string(q.n));
        if (e.boundary && e.letter == EdgeLetter::h)
            report.add("edge-position",
                       "boundary edge " + std::to_string(ei) + " must be e or h_t, is h");
        if (!e.boundary && e.letter != EdgeLetter::h)
            report.add("edge-position", "interior edge " + std::to_string(ei) +
                                            " must be h, is " + edge_letter_name(e.letter));
        const std::size_t expected_sides = e.boundary ? 1 : 2;
        if (e.face_sides.size() != expected_sides)
            report.add("edge-sides",
                       "edge " + std::to_string(ei) + " has " +
                           std::to_string(e.face_sides.size()) + " face sides, expected " +
                           std::to_string(expected_sides));
        for (std::size_t f : e.face_sides)
            if (f >= q.face_count)
                report.add("structure", "edge " + std::to_string(ei) +
                                            " references missing face " + std::to_string(f));
        if (e.ends[0].has_value() != e.ends[1].has_value())
            report.add("structure", "edge " + std::to_string(ei) +
                                        " has exactly one endpoint; need both or none");
        for (int s : {0, 1})
            if (e.ends[s] && *e.ends[s] >= q.vertices.size())
                report.add("structure", "edge " + std::to_string(ei) +
                                            " references missing vertex " +
                                            std::to_string(*e.ends[s]));
    }
    if (!report.valid()) return report;

    // Vertex incidence: collect the edge-end letters arriving at each vertex
    // and compare multisets with the type's pattern.
    std::vector<std::vector<EdgeLetter>> arriving(q.vertices.size());
    for (const TypedQuotient::Edge& e : q.edges)
        for (int s : {0, 1})
            if (e.ends[s]) arriving[*e.ends[s]].push_back(e.letter);
    for (std::size_t vi = 0; vi < q.vertices.size(); ++vi) {
        std::vector<EdgeLetter> want = vertex_letter_pattern(q.vertices[vi].type);
        std::vector<EdgeLetter> got = arriving[vi];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) {
            std::string got_str;
            for (EdgeLetter l : got) got_str += (got_str.empty() ? "" : ",") + edge_letter_name(l);
            report.add("vertex-incidence",
                       "vertex " + std::to_string(vi) + " of type " + q.vertices[vi].type +
                           " has incident edge letters {" + got_str + "}");
        }
    }
    return report;
}

/// Reduction data over a typed quotient.
struct ReductionData {
    Lattice lattice;  ///< the isotropy lattice, rank n-2

    struct EdgeDatum {
        std::optional<RatVec> v;  ///< associated vector on h / h_t edges
        std::optional<std::pair<RatVec, RatVec>> couple;  ///< (v, +/-w) on e edges
        std::vector<RatVec> isotropy_extras;  ///< isotropy generators beyond L
    };
    std::vector<EdgeDatum> edge_data;  ///< aligned with the quotient's edges

    std::vector<std::vector<RatVec>> vertex_isotropy;  ///< aligned with vertices

    struct LiftPair {
        RatVec lifted;   ///< monodromy generator value upstairs, in R^n
        RatVec reduced;  ///< its declared reduction; must agree modulo span(L)
    };
    std::vector<LiftPair> monodromy_lift;
};

/// Validates reduction data against a (valid) typed quotient: transversality
/// of associated vectors, primitivity of couple second vectors, per-stratum
/// twisting ranks matching the type table, and commutation of the monodromy
/// lift with the projection.
inline ValidationReport validate_reduction_data(const TypedQuotient& q, const ReductionData& d) {
    {
        const ValidationReport qr = validate_typed_quotient(q);
        if (!qr.valid()) {
            ValidationReport report;
            report.add("precondition", "typed quotient is invalid (" +
                                           qr.violations.front().condition + ": " +
                                           qr.violations.front().detail + ")");
            return report;
        }
    }
    ValidationReport report;
    const int n = q.n;
    if (static_cast<int>(d.lattice.rank()) != n - 2 ||
        d.lattice.ambient_dim != static_cast<std::size_t>(n)) {
        report.add("lattice", "isotropy lattice must have rank n-2 = " + std::to_string(n - 2) +
                                  " in R^" + std::to_string(n) + ", has rank " +
                                  std::to_string(d.lattice.rank()));
        return report;
    }
    if (d.edge_data.size() != q.edges.size()) {
        report.add("structure", "need one edge datum per quotient edge, got " +
                                    std::to_string(d.edge_data.size()) + " for " +
                                    std::to_string(q.edges.size()));
        return report;
    }
    if (d.vertex_isotropy.size() != q.vertices.size()) {
        report.add("structure", "need one isotropy list per quotient vertex, got " +
                                    std::to_string(d.vertex_isotropy.size()) + " for " +
                                    std::to_string(q.vertices.size()));
        return report;
    }

    const auto transverse = [&](const RatVec& v) {
        return v.size() == static_cast<std::size_t>(n) && !span_coords(d.lattice, v).has_value();
    };

    for (std::size_t ei = 0; ei < q.edges.size(); ++ei) {
        const TypedQuotient::Edge& e = q.edges[ei];
        const ReductionData::EdgeDatum& datum = d.edge_data[ei];
        const std::string where = "edge " + std::to_string(ei);
        if (e.letter == EdgeLetter::e) {
            if (!datum.couple) {
                report.add("couple", where + " has letter e and needs a vector couple");
                continue;
            }
            const auto& [v, w] = *datum.couple;
            if (!transverse(v))
                report.add("couple",
                           where + ": couple first vector must be transverse to the lattice span",
                           vec_to_string(v));
            if (w.size() != static_cast<std::size_t>(n) || !is_primitive_in(d.lattice, w))
                report.add("couple",
                           where + ": couple second vector must be primitive in the lattice",
                           vec_to_string(w));
        } else {
            if (!datum.v) {
                report.add("associated-vector",
                           where + " has letter " + edge_letter_name(e.letter) +
                               " and needs an associated vector");
                continue;
            }
            if (!transverse(*datum.v))
                report.add("associated-vector",
                           where + ": associated vector must be transverse to the lattice span",
                           vec_to_string(*datum.v));
        }
        // Twisting rank demanded by the edge type: 0 for h and e, 1 for h_t.
        const int want_k = e.letter == EdgeLetter::h_t ? 1 : 0;
        const std::size_t got_k = twisting_group(datum.isotropy_extras, d.lattice);
        if (static_cast<int>(got_k) != want_k)
            report.add("isotropy", where + " (" + edge_letter_name(e.letter) +
                                       ") needs twisting rank " + std::to_string(want_k) +
                                       ", isotropy gives " + std::to_string(got_k));
    }

    for (std::size_t vi = 0; vi < q.vertices.size(); ++vi) {
        const auto info = quotient_type_by_code(q.vertices[vi].type, n);
        const std::size_t got_k = twisting_group(d.vertex_isotropy[vi], d.lattice);
        if (info && static_cast<int>(got_k) != info->k)
            report.add("isotropy", "vertex " + std::to_string(vi) + " of type " + info->code +
                                       " needs twisting rank " + std::to_string(info->k) +
                                       ", isotropy gives " + std::to_string(got_k));
    }

    for (std::size_t gi = 0; gi < d.monodromy_lift.size(); ++gi) {
        const auto& [lifted, reduced] = d.monodromy_lift[gi];
        if (lifted.size() != static_cast<std::size_t>(n) ||
            reduced.size() != static_cast<std::size_t>(n)) {
            report.add("monodromy-lift", "generator " + std::to_string(gi) +
                                             " has mismatched dimensions");
            continue;
        }
        if (!span_coords(d.lattice, sub(lifted, reduced)).has_value())
            report.add("monodromy-lift",
                       "generator " + std::to_string(gi) +
                           ": lifted value does not project to the declared reduced value",
                       vec_to_string(lifted) + " vs " + vec_to_string(reduced));
    }
    return report;
}

}  // namespace hyperfan
