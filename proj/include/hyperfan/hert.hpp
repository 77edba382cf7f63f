#pragma once

/**
 * @file hert.hpp
 * @brief HERT quadruples, toric degree, and orbit-adjacency rules.
 *
 * Each orbit carries a quadruple (h, e, r, t): h transversal hyperbolic
 * components, e transversal elliptic (focus) components, and an orbit diffeomorphic to
 * R^r x T^t. The ambient dimension ties them together by h + 2e + r + t = n,
 * and the toric degree e + t is constant across all orbits of one action.
 * The adjacency rules list which quadruples may sit on the boundary of a
 * given orbit; an orbit poset validator checks semicontinuity of t, constancy
 * of the toric degree, and that everything lies below a regular orbit.
 */

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"

namespace hyperfan {

/// Orbit invariant quadruple, ordered (h, e, r, t) throughout the library.
struct HERT {
    int h = 0;
    int e = 0;
    int r = 0;
    int t = 0;

    auto operator<=>(const HERT&) const = default;
};

inline std::string hert_to_string(const HERT& q) {
    return "(" + std::to_string(q.h) + "," + std::to_string(q.e) + "," + std::to_string(q.r) +
           "," + std::to_string(q.t) + ")";
}

/// True iff the quadruple is a legal HERT for ambient dimension n:
/// nonnegative entries with h + 2e + r + t = n.
inline bool validate_hert(int h, int e, int r, int t, int n) {
    return h >= 0 && e >= 0 && r >= 0 && t >= 0 && h + 2 * e + r + t == n;
}

inline bool validate_hert(const HERT& q, int n) {
    return validate_hert(q.h, q.e, q.r, q.t, n);
}

/// Toric degree e + t of an orbit; rejects quadruples that are not valid
/// HERTs for the ambient dimension.
inline int toric_degree(const HERT& q, int n) {
    if (!validate_hert(q, n))
        throw std::invalid_argument("toric_degree: " + hert_to_string(q) +
                                    " is not a valid HERT for n = " + std::to_string(n));
    return q.e + q.t;
}

/// Quadruples that may label an orbit adjacent (in the closure / boundary
/// sense) to one labelled q:
///   r > 0          -> (h+1, e, r-1, t), and (h, e+1, r-1, t-1) when t > 0
///   e >= 1         -> (h+1, e-1, r, t+1)
///   h >= 1         -> (h-1, e, r+1, t)
/// Returned sorted and deduplicated.
inline std::vector<HERT> allowed_transitions(const HERT& q) {
    std::set<HERT> out;
    if (q.r > 0) {
        out.insert({q.h + 1, q.e, q.r - 1, q.t});
        if (q.t > 0) out.insert({q.h, q.e + 1, q.r - 1, q.t - 1});
    }
    if (q.e >= 1) out.insert({q.h + 1, q.e - 1, q.r, q.t + 1});
    if (q.h >= 1) out.insert({q.h - 1, q.e, q.r + 1, q.t});
    return std::vector<HERT>(out.begin(), out.end());
}

/// Orbit of a labelled poset.
struct Orbit {
    std::string name;
    HERT hert;
};

/// Finite orbit poset: closure pairs (upper, lower) say that orbit `lower`
/// lies in the closure of orbit `upper`. Indices are 0-based into `orbits`.
struct OrbitPoset {
    int n = 0;
    std::vector<Orbit> orbits;
    std::vector<std::pair<std::size_t, std::size_t>> closures;
};

/// Checks the poset against the orbit calculus: every HERT valid for n, the
/// toric degree e + t constant, t weakly decreasing along closure, and every
/// orbit below (or equal to) some regular orbit (h = e = 0).
inline ValidationReport validate_orbit_poset(const OrbitPoset& p) {
    ValidationReport report;
    for (const auto& [upper, lower] : p.closures)
        if (upper >= p.orbits.size() || lower >= p.orbits.size()) {
            report.add("structure", "closure pair references a missing orbit",
                       std::to_string(upper) + " > " + std::to_string(lower));
            return report;
        }

    for (const Orbit& o : p.orbits)
        if (!validate_hert(o.hert, p.n))
            report.add("hert", "orbit " + o.name + " has an invalid HERT for n = " +
                                   std::to_string(p.n),
                       hert_to_string(o.hert));
    if (!report.valid()) return report;

    for (std::size_t i = 1; i < p.orbits.size(); ++i) {
        const int d0 = p.orbits[0].hert.e + p.orbits[0].hert.t;
        const int di = p.orbits[i].hert.e + p.orbits[i].hert.t;
        if (di != d0) {
            report.add("toric-degree",
                       "orbit " + p.orbits[i].name + " has toric degree " + std::to_string(di) +
                           " but orbit " + p.orbits[0].name + " has " + std::to_string(d0),
                       hert_to_string(p.orbits[i].hert));
        }
    }

    for (const auto& [upper, lower] : p.closures) {
        const HERT& hu = p.orbits[upper].hert;
        const HERT& hl = p.orbits[lower].hert;
        if (hl.t > hu.t)
            report.add("semicontinuity",
                       "t increases from " + p.orbits[upper].name + " to the closure orbit " +
                           p.orbits[lower].name,
                       hert_to_string(hu) + " > " + hert_to_string(hl));
    }

    // Reachability downward from the regular orbits along closure pairs.
    std::vector<bool> below_regular(p.orbits.size(), false);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < p.orbits.size(); ++i)
        if (p.orbits[i].hert.h == 0 && p.orbits[i].hert.e == 0) {
            below_regular[i] = true;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const auto& [upper, lower] : p.closures)
            if (upper == u && !below_regular[lower]) {
                below_regular[lower] = true;
                stack.push_back(lower);
            }
    }
    for (std::size_t i = 0; i < p.orbits.size(); ++i)
        if (!below_regular[i])
            report.add("regular-closure",
                       "orbit " + p.orbits[i].name + " is not in the closure of any regular orbit",
                       hert_to_string(p.orbits[i].hert));
    return report;
}

}  // namespace hyperfan
