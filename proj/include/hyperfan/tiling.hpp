#pragma once

/**
 * @file tiling.hpp
 * @brief Curve tilings of closed surfaces and their plane realizations.
 *
 * A two-dimensional orbit space is described combinatorially: a set of closed
 * curves cut the surface into polygonal faces, curves cross pairwise at
 * four-corner vertices, and each curve carries one direction vector shared by
 * every face along it.  Validation checks that every face sees a complete
 * plane fan along its boundary and that every crossing is transverse with the
 * local cones present in all incident face fans.  The realization search
 * decides, exactly and exhaustively, whether direction vectors satisfying all
 * of that exist at all, and the isomorphism checker certifies structure-
 * preserving identifications between two realized tilings.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "linalg.hpp"
#include "monodromy.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace hyperfan {

// ---------------------------------------------------------------------------
// The combinatorial structure
// ---------------------------------------------------------------------------

/// A tiling of a closed surface by closed curves.  Vertices are curve
/// crossings, edges are the curve arcs between crossings, and faces are the
/// complementary polygons.  Face boundaries are closed walks of Steps (the
/// same step type used for graph walks: dir = +1 follows ends[0] -> ends[1]).
/// Each curve optionally carries one direction vector in the plane; the
/// vector is shared by both sides of the curve.
struct Tiling2D {
    std::size_t vertex_count = 0;
    std::size_t curve_count = 0;
    std::vector<std::optional<RatVec>> curve_vectors;  ///< one per curve, may be absent

    struct Edge {
        std::size_t curve = 0;
        std::size_t ends[2] = {0, 0};
    };
    std::vector<Edge> edges;

    struct Face {
        Walk boundary;  ///< closed walk; corner i sits at the target of step i
    };
    std::vector<Face> faces;
};

inline std::size_t step_source(const Tiling2D& t, const Step& s) {
    return t.edges.at(s.edge).ends[s.dir > 0 ? 0 : 1];
}
inline std::size_t step_target(const Tiling2D& t, const Step& s) {
    return t.edges.at(s.edge).ends[s.dir > 0 ? 1 : 0];
}

namespace tiling_detail {

/// One face corner: the junction between a face boundary step and its cyclic
/// successor, recorded at the shared vertex with the two incident curves.
struct Corner {
    std::size_t face = 0;
    std::size_t in_curve = 0;   ///< curve of the arriving step
    std::size_t out_curve = 0;  ///< curve of the departing step
};

/// Corners grouped by vertex.  Assumes the structure checks passed.
inline std::vector<std::vector<Corner>> collect_corners(const Tiling2D& t) {
    std::vector<std::vector<Corner>> corners(t.vertex_count);
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const Walk& walk = t.faces[f].boundary;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const Step& in = walk[i];
            const Step& out = walk[(i + 1) % walk.size()];
            corners[step_target(t, in)].push_back(
                Corner{f, t.edges[in.edge].curve, t.edges[out.edge].curve});
        }
    }
    return corners;
}

}  // namespace tiling_detail

// ---------------------------------------------------------------------------
// Complete plane fans from cyclic ray sequences
// ---------------------------------------------------------------------------

/// Decides whether a cyclic sequence of plane rays is the boundary fan of a
/// polygon covering the whole plane of directions: consecutive rays must be
/// independent, all turns must share one rotation sense, and the sequence
/// must wind exactly once around the origin.  Returns a description of the
/// first defect, or absent when the sequence is a complete fan.
inline std::optional<std::string> complete_fan_defect(const std::vector<RatVec>& rays) {
    const std::size_t k = rays.size();
    if (k < 3)
        return "a complete plane fan needs at least 3 rays, got " + std::to_string(k);
    for (const RatVec& r : rays) {
        require_dim(r, 2, "complete_fan_defect");
        if (is_zero_vec(r)) return std::string("zero vector cannot be a ray");
    }
    int sense = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const int s = sign(cross2(rays[i], rays[(i + 1) % k]));
        if (s == 0)
            return "consecutive rays " + std::to_string(i) + " and " +
                   std::to_string((i + 1) % k) + " are collinear";
        if (sense == 0) sense = s;
        if (s != sense)
            return "turn at ray " + std::to_string((i + 1) % k) +
                   " reverses the rotation sense";
    }
    // Normalize to counterclockwise and count how often the walk passes the
    // fixed reference direction (1, 0).  Every consecutive pair spans less
    // than a half turn, so the pair (a, b) passes the reference exactly when
    // the half-open arc from a to b contains it.
    std::vector<RatVec> seq = rays;
    if (sense < 0) std::reverse(seq.begin(), seq.end());
    const RatVec ref = vec({1, 0});
    std::size_t laps = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const RatVec& a = seq[i];
        const RatVec& b = seq[(i + 1) % k];
        if (positively_proportional(b, ref) ||
            (sign(cross2(a, ref)) > 0 && sign(cross2(ref, b)) > 0))
            ++laps;
    }
    if (laps != 1)
        return "rays wind " + std::to_string(laps) +
               " times around the origin instead of once";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Checks the vector-free part of a tiling: index integrity and closed face
/// walks ("structure"), then each edge on exactly two face boundary
/// positions and each vertex a four-corner crossing of exactly two curves
/// ("surface").  Structure defects suppress the surface checks.
inline ValidationReport validate_tiling_surface(const Tiling2D& t) {
    ValidationReport report;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const Tiling2D::Edge& edge = t.edges[e];
        if (edge.curve >= t.curve_count)
            report.add("structure", "edge " + std::to_string(e) + " references curve " +
                                        std::to_string(edge.curve) + " of " +
                                        std::to_string(t.curve_count));
        if (edge.ends[0] >= t.vertex_count || edge.ends[1] >= t.vertex_count)
            report.add("structure", "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        const Walk& walk = t.faces[f].boundary;
        if (walk.empty()) {
            report.add("structure", "face " + std::to_string(f) + " has an empty boundary");
            continue;
        }
        bool indices_ok = true;
        for (const Step& s : walk) {
            if (s.edge >= t.edges.size()) {
                report.add("structure", "face " + std::to_string(f) + " references edge " +
                                            std::to_string(s.edge) + " of " +
                                            std::to_string(t.edges.size()));
                indices_ok = false;
            }
            if (s.dir != 1 && s.dir != -1) {
                report.add("structure", "face " + std::to_string(f) +
                                            " has a step direction other than +1/-1");
                indices_ok = false;
            }
        }
        if (!indices_ok) continue;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            const Step& in = walk[i];
            const Step& out = walk[(i + 1) % walk.size()];
            if (step_target(t, in) != step_source(t, out))
                report.add("structure", "face " + std::to_string(f) + " boundary breaks at position " +
                                            std::to_string(i) + ": step target " +
                                            std::to_string(step_target(t, in)) +
                                            " does not meet the next step source " +
                                            std::to_string(step_source(t, out)));
        }
    }
    if (!report.valid()) return report;

    // Surface checks: every edge on two face sides, every vertex a 4-corner
    // transverse crossing of exactly two curves.
    std::vector<std::size_t> uses(t.edges.size(), 0);
    for (const Tiling2D::Face& face : t.faces)
        for (const Step& s : face.boundary) ++uses[s.edge];
    for (std::size_t e = 0; e < t.edges.size(); ++e)
        if (uses[e] != 2)
            report.add("surface", "edge " + std::to_string(e) + " lies on " +
                                      std::to_string(uses[e]) +
                                      " face boundary positions instead of 2");
    const auto corners = tiling_detail::collect_corners(t);
    for (std::size_t v = 0; v < t.vertex_count; ++v) {
        if (corners[v].size() != 4) {
            report.add("surface", "vertex " + std::to_string(v) + " has " +
                                      std::to_string(corners[v].size()) +
                                      " face corners instead of 4");
            continue;
        }
        std::vector<std::size_t> curves;
        for (const tiling_detail::Corner& c : corners[v]) {
            curves.push_back(c.in_curve);
            curves.push_back(c.out_curve);
            if (c.in_curve == c.out_curve)
                report.add("surface", "a corner of face " + std::to_string(c.face) +
                                          " at vertex " + std::to_string(v) +
                                          " joins curve " + std::to_string(c.in_curve) +
                                          " to itself");
        }
        std::sort(curves.begin(), curves.end());
        curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
        if (curves.size() != 2)
            report.add("surface", "vertex " + std::to_string(v) + " meets " +
                                      std::to_string(curves.size()) +
                                      " distinct curves instead of 2");
    }
    return report;
}

/// Full validation of a realized tiling.  Preconditions: every curve carries
/// a nonzero plane vector (missing or zero vectors throw
/// std::invalid_argument).  Conditions reported: "structure" and "surface" as
/// in validate_tiling_surface, "face-fan" when a face boundary does not read
/// off a complete plane fan, and "vertex-rule" when a crossing is not
/// transverse or an incident face fan misses the local cone of the crossing.
inline ValidationReport validate_tiling2d(const Tiling2D& t) {
    for (std::size_t c = 0; c < t.curve_count; ++c) {
        if (c >= t.curve_vectors.size() || !t.curve_vectors[c].has_value())
            throw std::invalid_argument("tiling: curve " + std::to_string(c) +
                                        " has no direction vector");
        const RatVec& v = *t.curve_vectors[c];
        require_dim(v, 2, "tiling curve vector");
        if (is_zero_vec(v))
            throw std::invalid_argument("tiling: curve " + std::to_string(c) +
                                        " has a zero direction vector");
    }
    ValidationReport report = validate_tiling_surface(t);
    for (const Violation& v : report.violations)
        if (v.condition == "structure") return report;  // walks unusable below

    const auto ray_of = [&](const Step& s) { return *t.curve_vectors[t.edges[s.edge].curve]; };

    for (std::size_t f = 0; f < t.faces.size(); ++f) {
        std::vector<RatVec> rays;
        for (const Step& s : t.faces[f].boundary) rays.push_back(ray_of(s));
        if (const auto defect = complete_fan_defect(rays))
            report.add("face-fan", "face " + std::to_string(f) + ": " + *defect);
    }

    const auto corners = tiling_detail::collect_corners(t);
    for (std::size_t v = 0; v < t.vertex_count; ++v) {
        if (corners[v].size() != 4) continue;  // already a surface violation
        std::vector<std::size_t> curves;
        bool clean = true;
        for (const tiling_detail::Corner& c : corners[v]) {
            if (c.in_curve == c.out_curve) clean = false;
            curves.push_back(c.in_curve);
            curves.push_back(c.out_curve);
        }
        std::sort(curves.begin(), curves.end());
        curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
        if (!clean || curves.size() != 2) continue;  // already a surface violation
        const RatVec& vx = *t.curve_vectors[curves[0]];
        const RatVec& vy = *t.curve_vectors[curves[1]];
        if (sign(cross2(vx, vy)) == 0) {
            report.add("vertex-rule", "vertex " + std::to_string(v) + ": crossing curves " +
                                          std::to_string(curves[0]) + " and " +
                                          std::to_string(curves[1]) +
                                          " have collinear direction vectors");
            continue;
        }
        // Every face incident to the crossing must carry the local cone
        // spanned by the two crossing directions as a consecutive ray pair.
        std::vector<std::size_t> incident;
        for (const tiling_detail::Corner& c : corners[v]) incident.push_back(c.face);
        std::sort(incident.begin(), incident.end());
        incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
        for (std::size_t f : incident) {
            const Walk& walk = t.faces[f].boundary;
            bool found = false;
            for (std::size_t i = 0; i < walk.size() && !found; ++i) {
                const RatVec a = ray_of(walk[i]);
                const RatVec b = ray_of(walk[(i + 1) % walk.size()]);
                if ((positively_proportional(a, vx) && positively_proportional(b, vy)) ||
                    (positively_proportional(a, vy) && positively_proportional(b, vx)))
                    found = true;
            }
            if (!found)
                report.add("vertex-rule", "vertex " + std::to_string(v) + ": face " +
                                              std::to_string(f) +
                                              " has no consecutive ray pair spanning the "
                                              "cone of the crossing");
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Realization search
// ---------------------------------------------------------------------------

/// Decides exactly whether direction vectors exist that make the tiling
/// valid, returning a witness assignment (one vector per curve) or absent
/// when none exists.  Any vectors already stored on the tiling are ignored.
///
/// Every validity predicate is a strict sign condition on determinants of
/// curve vectors (plus winding counts, which such signs determine), so
/// validity depends only on the circular order of the 2m signed directions
/// +-v(c).  The search therefore enumerates these circular orders: curve 0 is
/// pinned to the first slot with positive sign (rotations do not change
/// validity), orders that are reflections of earlier ones are skipped
/// (reflections do not change validity either), and each order is
/// instantiated with concrete rational slot directions of strictly
/// increasing angle inside the first quadrant, then checked with the real
/// validator.  Valid assignments with coincident directions are reachable
/// from tie-free ones by a small perturbation, so the enumeration is
/// exhaustive.
///
/// Preconditions: the tiling must pass validate_tiling_surface (otherwise
/// std::invalid_argument).  At most 10 curves are supported; more throw
/// std::length_error.
inline std::optional<std::vector<RatVec>> realizable_2d(const Tiling2D& t) {
    const std::size_t m = t.curve_count;
    if (m > 10)
        throw std::length_error("realizable_2d: supports at most 10 curves, got " +
                                std::to_string(m));
    const ValidationReport surface = validate_tiling_surface(t);
    if (!surface.valid())
        throw std::invalid_argument("realizable_2d: not a combinatorial surface: " +
                                    surface.violations.front().detail);
    if (m == 0) return std::vector<RatVec>{};

    // Slot directions u_0, ..., u_{m-1}: strictly increasing angle in the
    // first quadrant, so the circular order of {+-u_k} is
    // u_0, ..., u_{m-1}, -u_0, ..., -u_{m-1}.
    std::vector<RatVec> slots;
    for (std::size_t k = 0; k < m; ++k)
        slots.push_back(RatVec{Rat(static_cast<long>(m - k)), Rat(static_cast<long>(k))});

    // A candidate places curve perm[k-1] with sign signs[k-1] on slot k.
    std::vector<std::size_t> perm;
    for (std::size_t c = 1; c < m; ++c) perm.push_back(c);

    // Lexicographic comparison of signed slot sequences, sign + before -.
    const auto lex_less = [](const std::vector<std::pair<std::size_t, int>>& a,
                             const std::vector<std::pair<std::size_t, int>>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].first != b[i].first) return a[i].first < b[i].first;
            if (a[i].second != b[i].second) return a[i].second > b[i].second;  // +1 first
        }
        return false;
    };

    Tiling2D trial = t;
    do {
        for (unsigned long mask = 0; mask < (1ul << (m - 1)); ++mask) {
            std::vector<std::pair<std::size_t, int>> seq;
            for (std::size_t k = 1; k < m; ++k) {
                const int s = (mask >> (m - 1 - k)) & 1ul ? -1 : +1;
                seq.emplace_back(perm[k - 1], s);
            }
            // Reflection through slot 0: reversed order with all signs
            // flipped.  Skip the lexicographically larger twin.
            std::vector<std::pair<std::size_t, int>> reflected;
            for (std::size_t k = 1; k < m; ++k) {
                const auto& [curve, s] = seq[m - 1 - k];
                reflected.emplace_back(curve, -s);
            }
            if (lex_less(reflected, seq)) continue;

            trial.curve_vectors.assign(m, std::nullopt);
            trial.curve_vectors[0] = slots[0];
            for (std::size_t k = 1; k < m; ++k) {
                const auto& [curve, s] = seq[k - 1];
                trial.curve_vectors[curve] = s > 0 ? slots[k] : neg(slots[k]);
            }
            if (validate_tiling2d(trial).valid()) {
                std::vector<RatVec> witness;
                for (std::size_t c = 0; c < m; ++c) witness.push_back(*trial.curve_vectors[c]);
                return witness;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism verification
// ---------------------------------------------------------------------------

/// A proposed identification between two realized tilings: bijections on
/// faces, edges and curves, together with an invertible plane map carrying
/// the first tiling's curve vectors to the second's.
struct IsoCandidate {
    std::vector<std::size_t> face_map;
    std::vector<std::size_t> edge_map;
    std::vector<std::size_t> curve_map;
    RatMat linear;  ///< 2 x 2, rows
};

namespace tiling_detail {

inline void require_bijection(const std::vector<std::size_t>& map, std::size_t domain,
                              std::size_t codomain, const std::string& what) {
    if (map.size() != domain || domain != codomain)
        throw std::invalid_argument("isomorphism candidate: " + what + " map must pair " +
                                    std::to_string(domain) + " items with " +
                                    std::to_string(codomain));
    std::vector<bool> hit(codomain, false);
    for (std::size_t v : map) {
        if (v >= codomain || hit[v])
            throw std::invalid_argument("isomorphism candidate: " + what +
                                        " map is not a bijection");
        hit[v] = true;
    }
}

/// True when b reads off a from some cyclic offset, forward or reversed.
inline bool cyclic_match(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    const std::size_t k = a.size();
    if (b.size() != k) return false;
    if (k == 0) return true;
    for (std::size_t off = 0; off < k; ++off) {
        bool fwd = true, rev = true;
        for (std::size_t i = 0; i < k && (fwd || rev); ++i) {
            if (b[(off + i) % k] != a[i]) fwd = false;
            if (b[(off + k - i) % k] != a[i]) rev = false;
        }
        if (fwd || rev) return true;
    }
    return false;
}

}  // namespace tiling_detail

/// Verifies a proposed isomorphism between two realized tilings: edge and
/// face images must respect curves and cyclic boundary structure, and curve
/// vectors must correspond under the linear identification.  Both tilings
/// must validate and the candidate must be well formed (else
/// std::invalid_argument).  Returns whether every check passes.
inline bool verify_isomorphism(const Tiling2D& a, const Tiling2D& b, const IsoCandidate& cand) {
    {
        const ValidationReport ra = validate_tiling2d(a);
        if (!ra.valid())
            throw std::invalid_argument("verify_isomorphism: first tiling invalid: " +
                                        ra.violations.front().detail);
        const ValidationReport rb = validate_tiling2d(b);
        if (!rb.valid())
            throw std::invalid_argument("verify_isomorphism: second tiling invalid: " +
                                        rb.violations.front().detail);
    }
    tiling_detail::require_bijection(cand.face_map, a.faces.size(), b.faces.size(), "face");
    tiling_detail::require_bijection(cand.edge_map, a.edges.size(), b.edges.size(), "edge");
    tiling_detail::require_bijection(cand.curve_map, a.curve_count, b.curve_count, "curve");
    if (cand.linear.size() != 2 || cand.linear[0].size() != 2 || cand.linear[1].size() != 2)
        throw std::invalid_argument("isomorphism candidate: linear part must be 2 x 2");
    if (sign(cross2(cand.linear[0], cand.linear[1])) == 0)
        throw std::invalid_argument("isomorphism candidate: linear part must be invertible");

    // Edges must land on the mapped curve.
    for (std::size_t e = 0; e < a.edges.size(); ++e)
        if (b.edges[cand.edge_map[e]].curve != cand.curve_map[a.edges[e].curve]) return false;
    // Face boundaries must match cyclically (up to rotation and reversal).
    for (std::size_t f = 0; f < a.faces.size(); ++f) {
        std::vector<std::size_t> image;
        for (const Step& s : a.faces[f].boundary) image.push_back(cand.edge_map[s.edge]);
        std::vector<std::size_t> target;
        for (const Step& s : b.faces[cand.face_map[f]].boundary) target.push_back(s.edge);
        if (!tiling_detail::cyclic_match(image, target)) return false;
    }
    // Curve vectors must correspond under the linear identification.
    for (std::size_t c = 0; c < a.curve_count; ++c)
        if (mat_vec(cand.linear, *a.curve_vectors[c]) != *b.curve_vectors[cand.curve_map[c]])
            return false;
    return true;
}

/// As above, and additionally transports a monodromy specification: the two
/// specs must expose the same number of generators (corresponding by index),
/// the lattices must map onto each other under the linear identification,
/// and each transported generator value must agree modulo the target
/// lattice.  Specs must be well formed and planar (ambient dimension 2).
inline bool verify_isomorphism(const Tiling2D& a, const Tiling2D& b, const IsoCandidate& cand,
                               const MonodromySpec& mono_a, const MonodromySpec& mono_b) {
    if (!verify_isomorphism(a, b, cand)) return false;
    check_spec(mono_a);
    check_spec(mono_b);
    if (mono_a.lattice.ambient_dim != 2 || mono_b.lattice.ambient_dim != 2)
        throw std::invalid_argument("verify_isomorphism: monodromy lattices must live in the plane");
    if (mono_a.values.size() != mono_b.values.size()) return false;
    std::vector<RatVec> mapped_basis;
    for (const RatVec& v : mono_a.lattice.basis) mapped_basis.push_back(mat_vec(cand.linear, v));
    const Lattice mapped(2, mapped_basis);
    if (!same_lattice(mapped, mono_b.lattice)) return false;
    for (std::size_t i = 0; i < mono_a.values.size(); ++i) {
        const RatVec image = mat_vec(cand.linear, mono_a.values[i].rep);
        if (!(reduce_mod_lattice(image, mono_b.lattice) ==
              reduce_mod_lattice(mono_b.values[i].rep, mono_b.lattice)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Canonical examples
// ---------------------------------------------------------------------------

/// Sphere tiling by two meridian circles and `tropic_count` circles of
/// latitude.  Curves 0 and 1 are the meridians (crossing at both poles),
/// curve 2 + i is the i-th tropic from north to south.  One tropic gives the
/// eight-trigone sphere (combinatorially three pairwise-crossing circles);
/// two or more give four polar trigones and quad bands, a pattern that no
/// direction vectors can realize.
inline Tiling2D globe_tiling(std::size_t tropic_count) {
    if (tropic_count == 0)
        throw std::invalid_argument("globe_tiling: at least one tropic required");
    const std::size_t k = tropic_count;
    Tiling2D t;
    t.curve_count = 2 + k;
    t.vertex_count = 2 + 4 * k;  // 0 = north pole, 1 = south pole
    t.curve_vectors.assign(t.curve_count, std::nullopt);
    // Vertex 2 + 4i + j: crossing of tropic i with half-meridian j, where
    // half-meridians 0/2 belong to curve 0 and 1/3 to curve 1.
    const auto x = [](std::size_t i, std::size_t j) { return 2 + 4 * i + j % 4; };

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;
    const auto add_edge = [&](std::size_t curve, std::size_t from, std::size_t to) {
        by_pair[std::minmax(from, to)] = t.edges.size();
        t.edges.push_back({curve, {from, to}});
    };
    for (std::size_t c : {std::size_t{0}, std::size_t{1}}) {
        std::vector<std::size_t> cycle{0};
        for (std::size_t i = 0; i < k; ++i) cycle.push_back(x(i, c));
        cycle.push_back(1);
        for (std::size_t i = k; i-- > 0;) cycle.push_back(x(i, c + 2));
        for (std::size_t p = 0; p < cycle.size(); ++p)
            add_edge(c, cycle[p], cycle[(p + 1) % cycle.size()]);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < 4; ++j) add_edge(2 + i, x(i, j), x(i, j + 1));

    const auto step_to = [&](std::size_t from, std::size_t to) {
        const std::size_t e = by_pair.at(std::minmax(from, to));
        return Step{e, t.edges[e].ends[0] == from ? +1 : -1};
    };
    const auto add_face = [&](const std::vector<std::size_t>& loop) {
        Tiling2D::Face f;
        for (std::size_t p = 0; p < loop.size(); ++p)
            f.boundary.push_back(step_to(loop[p], loop[(p + 1) % loop.size()]));
        t.faces.push_back(f);
    };
    for (std::size_t s = 0; s < 4; ++s) {
        add_face({0, x(0, s), x(0, s + 1)});
        for (std::size_t i = 0; i + 1 < k; ++i)
            add_face({x(i, s), x(i + 1, s), x(i + 1, s + 1), x(i, s + 1)});
        add_face({x(k - 1, s), 1, x(k - 1, s + 1)});
    }
    return t;
}

/// The eight-trigone sphere: three closed curves crossing pairwise twice.
inline Tiling2D octant_tiling() { return globe_tiling(1); }

/// The double-tropic globe with a sixth of its faces subdivided: a closed
/// loop is added around one meridian segment, crossing the meridian twice
/// and each tropic twice.  The loop cuts two polar trigones and two quads
/// into six faces each, giving 5 curves, 16 vertices, 32 edges and 18 faces.
/// Like the plain double-tropic globe, no direction vectors realize it.
inline Tiling2D looped_globe_tiling() {
    Tiling2D t;
    t.vertex_count = 16;
    t.curve_count = 5;
    t.curve_vectors.assign(5, std::nullopt);
    // Vertices: 0/1 poles, 2..5 tropic-0 crossings, 6..9 tropic-1 crossings,
    // 10/11 loop-meridian crossings, 12/13 loop-tropic crossings east,
    // 14/15 loop-tropic crossings west.
    const std::array<std::array<std::size_t, 3>, 32> edge_table{{
        {0, 0, 10}, {0, 10, 2}, {0, 2, 6},  {0, 6, 11},  {0, 11, 1},  {0, 1, 8},
        {0, 8, 4},  {0, 4, 0},  {1, 0, 5},  {1, 5, 9},   {1, 9, 1},   {1, 1, 7},
        {1, 7, 3},  {1, 3, 0},  {2, 2, 12}, {2, 12, 3},  {2, 3, 4},   {2, 4, 5},
        {2, 5, 14}, {2, 14, 2}, {3, 6, 13}, {3, 13, 7},  {3, 7, 8},   {3, 8, 9},
        {3, 9, 15}, {3, 15, 6}, {4, 10, 12}, {4, 12, 13}, {4, 13, 11}, {4, 11, 15},
        {4, 15, 14}, {4, 14, 10}}};
    for (const auto& e : edge_table) t.edges.push_back({e[0], {e[1], e[2]}});
    const std::vector<std::vector<std::pair<std::size_t, int>>> face_table = {
        {{1, +1}, {14, +1}, {26, -1}},
        {{0, +1}, {26, +1}, {15, +1}, {13, +1}},
        {{2, +1}, {20, +1}, {27, -1}, {14, -1}},
        {{27, +1}, {21, +1}, {12, +1}, {15, -1}},
        {{3, +1}, {28, -1}, {20, -1}},
        {{4, +1}, {11, +1}, {21, -1}, {28, +1}},
        {{13, -1}, {16, +1}, {7, +1}},
        {{12, -1}, {22, +1}, {6, +1}, {16, -1}},
        {{11, -1}, {5, +1}, {22, -1}},
        {{7, -1}, {17, +1}, {8, -1}},
        {{6, -1}, {23, +1}, {9, -1}, {17, -1}},
        {{5, -1}, {10, -1}, {23, -1}},
        {{8, +1}, {18, +1}, {31, +1}, {0, -1}},
        {{19, +1}, {1, -1}, {31, -1}},
        {{9, +1}, {24, +1}, {30, +1}, {18, -1}},
        {{25, +1}, {2, -1}, {19, -1}, {30, -1}},
        {{3, -1}, {25, -1}, {29, -1}},
        {{10, +1}, {4, -1}, {29, +1}, {24, -1}}};
    for (const auto& walk : face_table) {
        Tiling2D::Face f;
        for (const auto& [e, d] : walk) f.boundary.push_back(Step{e, d});
        t.faces.push_back(f);
    }
    return t;
}

/// Two curves crossing twice: four two-sided faces.  A combinatorial
/// surface, but every face fan would need two rays, so it is never
/// realizable.
inline Tiling2D bigon_tiling() {
    Tiling2D t;
    t.vertex_count = 2;
    t.curve_count = 2;
    t.curve_vectors.assign(2, std::nullopt);
    t.edges = {{0, {0, 1}}, {0, {1, 0}}, {1, {0, 1}}, {1, {1, 0}}};
    t.faces = {{{{0, +1}, {2, -1}}},
               {{{2, +1}, {1, +1}}},
               {{{1, -1}, {3, +1}}},
               {{{3, -1}, {0, -1}}}};
    return t;
}

/// Torus tiling by two horizontal and two vertical circles: four square
/// faces.  Ships with a realizing set of direction vectors (curves 0/1
/// horizontal, 2/3 vertical).
inline Tiling2D quad_torus_tiling() {
    Tiling2D t;
    t.vertex_count = 4;
    t.curve_count = 4;
    t.curve_vectors = {vec({0, 1}), vec({0, -1}), vec({-1, 0}), vec({1, 0})};
    t.edges = {{0, {0, 1}}, {0, {1, 0}}, {1, {2, 3}}, {1, {3, 2}},
               {2, {0, 2}}, {2, {2, 0}}, {3, {1, 3}}, {3, {3, 1}}};
    t.faces = {{{{0, +1}, {6, +1}, {2, -1}, {4, -1}}},
               {{{1, +1}, {4, +1}, {3, -1}, {6, -1}}},
               {{{2, +1}, {7, +1}, {0, -1}, {5, -1}}},
               {{{3, +1}, {5, +1}, {1, -1}, {7, -1}}}};
    return t;
}

}  // namespace hyperfan
