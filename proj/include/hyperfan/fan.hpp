#pragma once

/**
 * @file fan.hpp
 * @brief Complete simplicial fans: validation, point location, dual complex.
 *
 * A fan is given by its rays (ordered rational vectors, no two positively
 * proportional) and its maximal cones (n-element ray-index sets spanning
 * full-dimensional simplicial cones). All lower-dimensional cones are derived
 * as subsets, so face closure holds by construction; the zero cone is the
 * empty index set.
 *
 * Validation checks, in order: ray conditions, simpliciality, the partition
 * property (distinct derived cones have disjoint relative interiors), and
 * completeness by the ridge criterion — every (n-1)-subset of a maximal cone
 * lies in exactly two maximal cones and the ridge-adjacency graph is
 * connected. For a family of full-dimensional simplicial cones with pairwise
 * disjoint interiors, the support is closed, and a nonempty boundary would
 * contain a ridge belonging to exactly one maximal cone; the ridge criterion
 * therefore certifies that the cones cover R^n. A seeded sample of random
 * rational directions cross-checks the criterion: each direction must land in
 * the relative interior of exactly one derived cone.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cone.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace hyperfan {

/// Ray-index set naming a derived cone; sorted ascending; empty = zero cone.
using ConeId = std::vector<std::size_t>;

/// Complete simplicial fan candidate (validation decides whether it is one).
struct Fan {
    std::size_t ambient_dim = 0;
    std::vector<RatVec> rays;
    std::vector<ConeId> maximal_cones;
};

/// Number of pseudorandom directions used by the sampling cross-check.
inline constexpr int kFanSampleCount = 64;

/// Default seed for the sampling cross-check (overridable per call; the CLI
/// maps the HYPERFAN_SEED environment variable onto this parameter).
inline constexpr std::uint64_t kDefaultSeed = 0x48594645414e2d31ull;

inline std::string cone_id_to_string(const ConeId& id) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < id.size(); ++i) os << (i ? "," : "") << id[i];
    os << "}";
    return os.str();
}

/// All derived cones: every subset of every maximal cone, including the empty
/// set (zero cone), each listed once in sorted order.
inline std::vector<ConeId> derived_cones(const Fan& f) {
    std::set<ConeId> out;
    out.insert(ConeId{});
    for (const ConeId& top : f.maximal_cones) {
        const std::size_t k = top.size();
        for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
            ConeId sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1ull << i)) sub.push_back(top[i]);
            out.insert(std::move(sub));
        }
    }
    return std::vector<ConeId>(out.begin(), out.end());
}

/// The simplicial cone spanned by the rays named in id.
inline SimplicialCone cone_of(const Fan& f, const ConeId& id) {
    std::vector<RatVec> rays;
    rays.reserve(id.size());
    for (std::size_t i : id) rays.push_back(f.rays.at(i));
    return SimplicialCone(std::move(rays), f.ambient_dim);
}

/// Structural sanity: index ranges, cone cardinalities, sortedness. These are
/// prerequisites for the geometric checks, so they are verified first.
inline ValidationReport check_fan_structure(const Fan& f) {
    ValidationReport report;
    if (f.ambient_dim == 0)
        report.add("structure", "ambient dimension must be positive");
    for (std::size_t c = 0; c < f.maximal_cones.size(); ++c) {
        const ConeId& id = f.maximal_cones[c];
        if (id.size() != f.ambient_dim)
            report.add("structure",
                       "maximal cone " + std::to_string(c) + " has " +
                           std::to_string(id.size()) + " rays, expected " +
                           std::to_string(f.ambient_dim),
                       cone_id_to_string(id));
        for (std::size_t i : id)
            if (i >= f.rays.size())
                report.add("structure",
                           "maximal cone " + std::to_string(c) + " references missing ray " +
                               std::to_string(i),
                           cone_id_to_string(id));
        ConeId sorted = id;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            report.add("structure",
                       "maximal cone " + std::to_string(c) + " repeats a ray index",
                       cone_id_to_string(id));
        else if (sorted != id)
            report.add("structure",
                       "maximal cone " + std::to_string(c) + " is not sorted ascending",
                       cone_id_to_string(id));
    }
    if (f.maximal_cones.empty()) report.add("structure", "fan has no maximal cones");
    return report;
}

/// Full validation per the fan definition; seed drives the sampling
/// cross-check of completeness.
inline ValidationReport validate_fan(const Fan& f, std::uint64_t seed = kDefaultSeed) {
    ValidationReport report = check_fan_structure(f);
    if (!report.valid()) return report;

    // Ray conditions: nonzero, dimension n, no two positively proportional.
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        if (f.rays[i].size() != f.ambient_dim) {
            report.add("rays", "ray " + std::to_string(i) + " has wrong dimension",
                       vec_to_string(f.rays[i]));
            continue;
        }
        if (is_zero_vec(f.rays[i]))
            report.add("rays", "ray " + std::to_string(i) + " is the zero vector");
    }
    if (!report.valid()) return report;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (positively_proportional(f.rays[i], f.rays[j]))
                report.add("rays",
                           "rays " + std::to_string(i) + " and " + std::to_string(j) +
                               " are positively proportional",
                           vec_to_string(f.rays[i]) + " ~ " + vec_to_string(f.rays[j]));

    // Simpliciality: each maximal cone's rays are linearly independent.
    for (const ConeId& id : f.maximal_cones) {
        std::vector<RatVec> rays;
        for (std::size_t i : id) rays.push_back(f.rays[i]);
        if (!independent(rays))
            report.add("simplicial", "maximal cone rays are linearly dependent",
                       cone_id_to_string(id));
    }
    if (!report.valid()) return report;

    // Partition: distinct derived cones have disjoint relative interiors.
    const std::vector<ConeId> cones = derived_cones(f);
    std::vector<SimplicialCone> geom;
    geom.reserve(cones.size());
    for (const ConeId& id : cones) geom.push_back(cone_of(f, id));
    for (std::size_t a = 0; a < cones.size(); ++a)
        for (std::size_t b = a + 1; b < cones.size(); ++b)
            if (!relint_disjoint(geom[a], geom[b]))
                report.add("partition", "derived cones have overlapping relative interiors",
                           cone_id_to_string(cones[a]) + " vs " + cone_id_to_string(cones[b]));

    // Completeness, ridge criterion: each (n-1)-subset of a maximal cone in
    // exactly two maximal cones, and ridge-adjacency connects all of them.
    std::map<ConeId, std::vector<std::size_t>> ridge_owners;
    for (std::size_t c = 0; c < f.maximal_cones.size(); ++c) {
        const ConeId& id = f.maximal_cones[c];
        for (std::size_t drop = 0; drop < id.size(); ++drop) {
            ConeId ridge;
            for (std::size_t i = 0; i < id.size(); ++i)
                if (i != drop) ridge.push_back(id[i]);
            ridge_owners[ridge].push_back(c);
        }
    }
    bool ridges_ok = true;
    for (const auto& [ridge, owners] : ridge_owners)
        if (owners.size() != 2) {
            ridges_ok = false;
            report.add("completeness",
                       "ridge lies in " + std::to_string(owners.size()) +
                           " maximal cones, expected 2",
                       cone_id_to_string(ridge));
        }
    if (ridges_ok && f.maximal_cones.size() > 1) {
        std::vector<int> component(f.maximal_cones.size(), -1);
        std::vector<std::size_t> stack{0};
        component[0] = 0;
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            for (const auto& [ridge, owners] : ridge_owners)
                for (std::size_t o : owners)
                    if (component[o] < 0 &&
                        std::find(owners.begin(), owners.end(), c) != owners.end()) {
                        component[o] = 0;
                        stack.push_back(o);
                    }
        }
        for (std::size_t c = 0; c < f.maximal_cones.size(); ++c)
            if (component[c] < 0) {
                report.add("completeness", "maximal-cone adjacency graph is disconnected",
                           "cone " + cone_id_to_string(f.maximal_cones[c]) +
                               " unreachable from cone 0");
                break;
            }
    }

    // Sampling cross-check: random rational directions must each lie in the
    // relative interior of exactly one derived cone. Runs whenever the cones
    // are geometrically meaningful, so it independently corroborates the
    // ridge criterion and the partition check above.
    {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coord(-25, 25);
        std::uniform_int_distribution<long> denom(1, 9);
        for (int s = 0; s < kFanSampleCount; ++s) {
            RatVec w;
            for (std::size_t j = 0; j < f.ambient_dim; ++j)
                w.push_back(rat(coord(rng), denom(rng)));
            std::size_t hits = 0;
            ConeId first_hit;
            for (std::size_t a = 0; a < cones.size(); ++a)
                if (in_relative_interior(geom[a], w)) {
                    ++hits;
                    first_hit = cones[a];
                }
            if (hits != 1) {
                report.add("completeness-sampling",
                           "sample direction lies in " + std::to_string(hits) +
                               " relative interiors, expected 1",
                           vec_to_string(w));
                break;
            }
        }
    }
    return report;
}

/// Point location for a valid fan: the unique derived cone whose relative
/// interior contains w. Finds a maximal cone whose coordinates for w are all
/// nonnegative and keeps the rays with strictly positive coordinate.
/// Assumes validity; see locate() for the checked variant.
inline ConeId locate_in_valid(const Fan& f, const RatVec& w) {
    require_dim(w, f.ambient_dim, "locate");
    for (const ConeId& id : f.maximal_cones) {
        std::vector<RatVec> rays;
        for (std::size_t i : id) rays.push_back(f.rays[i]);
        const auto alpha = solve_nonneg(rays, w);
        if (!alpha) continue;
        ConeId out;
        for (std::size_t i = 0; i < id.size(); ++i)
            if ((*alpha)[i] > 0) out.push_back(id[i]);
        std::sort(out.begin(), out.end());
        return out;
    }
    throw std::logic_error("locate: no maximal cone contains the point (fan not complete?)");
}

/// Point location with the validity precondition enforced.
inline ConeId locate(const Fan& f, const RatVec& w, std::uint64_t seed = kDefaultSeed) {
    const ValidationReport report = validate_fan(f, seed);
    if (!report.valid())
        throw std::invalid_argument("locate: fan is invalid (" +
                                    report.violations.front().condition + ": " +
                                    report.violations.front().detail + ")");
    return locate_in_valid(f, w);
}

/// Faces of the abstract simplicial complex underlying the fan: the ray sets
/// of all nonempty derived cones.
inline std::vector<ConeId> dual_complex(const Fan& f) {
    std::vector<ConeId> faces = derived_cones(f);
    std::erase_if(faces, [](const ConeId& id) { return id.empty(); });
    return faces;
}

/// Count of derived cones per cone dimension 0..n (index 0 counts the zero
/// cone, index n the maximal cones).
inline std::vector<std::size_t> f_vector(const Fan& f) {
    std::vector<std::size_t> counts(f.ambient_dim + 1, 0);
    for (const ConeId& id : derived_cones(f)) counts.at(id.size())++;
    return counts;
}

/// Deterministic complete fan of the plane with m rays (3 <= m <= 24):
/// rational directions in counterclockwise order, consecutive pairs as
/// maximal cones. Directions are spread over the four quadrants so that no
/// angular gap reaches a half turn.
inline Fan polygon_fan_2d(std::size_t m) {
    if (m < 3 || m > 24) throw std::invalid_argument("polygon_fan_2d: need 3 <= m <= 24");
    std::vector<RatVec> rays;
    if (m == 3) {
        rays = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
    } else {
        // q directions per quadrant with strictly increasing angle:
        // (q - j, j) for j = 0..q-1, rotated by multiples of a quarter turn.
        std::size_t per[4];
        for (std::size_t k = 0; k < 4; ++k) per[k] = m / 4 + (k < m % 4 ? 1 : 0);
        for (std::size_t k = 0; k < 4; ++k) {
            const long q = static_cast<long>(per[k]);
            for (long j = 0; j < q; ++j) {
                long x = q - j, y = j;
                for (std::size_t rot = 0; rot < k; ++rot) {
                    const long nx = -y, ny = x;
                    x = nx;
                    y = ny;
                }
                rays.push_back(vec({x, y}));
            }
        }
    }
    Fan f;
    f.ambient_dim = 2;
    f.rays = std::move(rays);
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        ConeId id{i, (i + 1) % f.rays.size()};
        std::sort(id.begin(), id.end());
        f.maximal_cones.push_back(std::move(id));
    }
    return f;
}

/// Testing utility: a pseudorandom complete simplicial fan in the plane.
/// Draws integer directions, removes duplicates of the same direction, sorts
/// by exact angle, and retries until every consecutive pair (cyclically)
/// spans a positively oriented cone; maximal cones are the consecutive pairs.
inline Fan random_complete_fan_2d(std::uint64_t seed, std::size_t ray_target) {
    if (ray_target < 3) throw std::invalid_argument("random fan needs at least 3 rays");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-9, 9);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<RatVec> rays;
        int draws = 0;
        while (rays.size() < ray_target && draws < 512) {
            ++draws;
            RatVec v = vec({coord(rng), coord(rng)});
            if (is_zero_vec(v)) continue;
            bool dup = false;
            for (const RatVec& r : rays)
                if (positively_proportional(r, v)) {
                    dup = true;
                    break;
                }
            if (!dup) rays.push_back(std::move(v));
        }
        if (rays.size() < ray_target) continue;
        // Exact counterclockwise angle sort: split at the half-plane
        // boundary, then order within a half-plane by the cross product.
        const auto half = [](const RatVec& v) {
            return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
        };
        std::sort(rays.begin(), rays.end(), [&](const RatVec& a, const RatVec& b) {
            if (half(a) != half(b)) return half(a) < half(b);
            return cross2(a, b) > 0;
        });
        bool ok = true;
        for (std::size_t i = 0; i < rays.size() && ok; ++i)
            if (!(cross2(rays[i], rays[(i + 1) % rays.size()]) > 0)) ok = false;
        if (!ok) continue;
        Fan f;
        f.ambient_dim = 2;
        f.rays = std::move(rays);
        for (std::size_t i = 0; i < f.rays.size(); ++i) {
            ConeId id{i, (i + 1) % f.rays.size()};
            std::sort(id.begin(), id.end());
            f.maximal_cones.push_back(std::move(id));
        }
        return f;
    }
    throw std::runtime_error("random fan generation failed to converge");
}

}  // namespace hyperfan
