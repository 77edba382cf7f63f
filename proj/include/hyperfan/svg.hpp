#pragma once

/**
 * @file svg.hpp
 * @brief Deterministic SVG renderings of plane fans and surface tilings.
 *
 * Fans are drawn as labeled arrows from the origin, emitted in exact
 * angle-sorted order; ray endpoints are computed in rational arithmetic
 * (sup-norm scaling) and only rounded to two decimals when formatting, so
 * the output is identical on every run.  Tilings are drawn as a circular
 * schematic: vertices evenly spaced on a ring, edges as arcs colored and
 * labeled by curve, with a legend of curve direction vectors.  All layout
 * choices are fixed functions of the input, making the files suitable for
 * golden-file comparison.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fan.hpp"
#include "rational.hpp"
#include "tiling.hpp"

namespace hyperfan {

namespace svg_detail {

/// Exact coordinate formatting: round(100 x) computed in rational
/// arithmetic, printed with two decimals.
inline std::string coord(const Rat& x) {
    const mpz_class n = floor_rat(x * 100 + Rat(1, 2));
    const bool negative = n < 0;
    const mpz_class a = abs(n);
    const mpz_class whole = a / 100;
    const unsigned long frac = mpz_class(a % 100).get_ui();
    char tail[8];
    std::snprintf(tail, sizeof tail, ".%02lu", frac);
    return (negative ? "-" : "") + whole.get_str() + tail;
}

/// Two-decimal formatting for layout computed in doubles.
inline std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x + 0.0);  // normalize -0.0
    return buf;
}

/// Exact counterclockwise-from-positive-x angle order on nonzero vectors.
inline bool angle_less(const RatVec& a, const RatVec& b) {
    const auto half = [](const RatVec& v) {
        return (sign(v[1]) > 0 || (sign(v[1]) == 0 && sign(v[0]) > 0)) ? 0 : 1;
    };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return sign(cross2(a, b)) > 0;
}

inline const std::vector<std::string>& palette() {
    static const std::vector<std::string> colors = {
        "#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400",
        "#16a085", "#7f8c8d", "#2c3e50", "#f39c12", "#c2185b"};
    return colors;
}

}  // namespace svg_detail

/// Renders a plane fan as labeled arrows from the origin.  Only
/// two-dimensional fans can be drawn; zero rays are rejected.
inline std::string fan_svg(const Fan& fan) {
    if (fan.ambient_dim != 2)
        throw std::invalid_argument("fan_svg: only 2-dimensional fans can be drawn, got dimension " +
                                    std::to_string(fan.ambient_dim));
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        require_dim(fan.rays[i], 2, "fan_svg ray");
        if (is_zero_vec(fan.rays[i]))
            throw std::invalid_argument("fan_svg: ray " + std::to_string(i) + " is zero");
    }
    std::vector<std::size_t> order(fan.rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return svg_detail::angle_less(fan.rays[a], fan.rays[b]);
    });

    const Rat cx(200), cy(200);
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
           "viewBox=\"0 0 400 400\">\n";
    out += "  <defs>\n    <marker id=\"tip\" markerWidth=\"10\" markerHeight=\"8\" refX=\"8\" "
           "refY=\"4\" orient=\"auto\">\n      <path d=\"M0,0 L8,4 L0,8 z\" fill=\"#1f4e79\"/>\n"
           "    </marker>\n  </defs>\n";
    out += "  <rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    out += "  <circle cx=\"200\" cy=\"200\" r=\"3\" fill=\"#1f4e79\"/>\n";
    for (std::size_t i : order) {
        const RatVec& r = fan.rays[i];
        const Rat ax = abs(r[0]), ay = abs(r[1]);
        const Rat m = ax > ay ? ax : ay;
        const Rat ex = cx + Rat(150) * r[0] / m;
        const Rat ey = cy - Rat(150) * r[1] / m;  // SVG y axis points down
        const Rat lx = cx + Rat(170) * r[0] / m;
        const Rat ly = cy - Rat(170) * r[1] / m;
        out += "  <line x1=\"200.00\" y1=\"200.00\" x2=\"" + svg_detail::coord(ex) + "\" y2=\"" +
               svg_detail::coord(ey) + "\" stroke=\"#1f4e79\" stroke-width=\"2\" "
               "marker-end=\"url(#tip)\"/>\n";
        out += "  <text x=\"" + svg_detail::coord(lx) + "\" y=\"" + svg_detail::coord(ly) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\" "
               "dominant-baseline=\"middle\">" +
               std::to_string(i) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

/// Renders a tiling as a circular schematic: vertices on a ring, edges as
/// arcs colored by curve, a legend listing each curve and its direction
/// vector (or "-" when absent).
inline std::string tiling_svg(const Tiling2D& t) {
    const double pi = 3.14159265358979323846;
    const double cx = 260, cy = 260, radius = 200;
    std::vector<std::pair<double, double>> pos(t.vertex_count);
    for (std::size_t v = 0; v < t.vertex_count; ++v) {
        const double a = 2 * pi * static_cast<double>(v) /
                         static_cast<double>(std::max<std::size_t>(t.vertex_count, 1));
        pos[v] = {cx + radius * std::cos(a), cy - radius * std::sin(a)};
    }

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
           "viewBox=\"0 0 520 520\">\n";
    out += "  <rect width=\"520\" height=\"520\" fill=\"white\"/>\n";

    // Legend: one line per curve.
    for (std::size_t c = 0; c < t.curve_count; ++c) {
        const std::string& color = svg_detail::palette()[c % svg_detail::palette().size()];
        std::string label = "c" + std::to_string(c) + ": ";
        if (c < t.curve_vectors.size() && t.curve_vectors[c].has_value())
            label += vec_to_string(*t.curve_vectors[c]);
        else
            label += "-";
        out += "  <text x=\"12\" y=\"" + svg_detail::coord(20.0 + 16.0 * static_cast<double>(c)) +
               "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + color + "\">" + label +
               "</text>\n";
    }

    // Edges: arcs colored by curve; parallel edges and loops are offset by
    // their occurrence index so nothing coincides.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const Tiling2D::Edge& edge = t.edges[e];
        if (edge.ends[0] >= t.vertex_count || edge.ends[1] >= t.vertex_count) continue;
        const std::string& color =
            svg_detail::palette()[edge.curve % svg_detail::palette().size()];
        const auto key = std::minmax(edge.ends[0], edge.ends[1]);
        const std::size_t occ = seen[key]++;
        const auto [px, py] = pos[edge.ends[0]];
        const auto [qx, qy] = pos[edge.ends[1]];
        double lx = 0, ly = 0;  // label anchor
        if (edge.ends[0] == edge.ends[1]) {
            // Loop: a small circle pushed outward from the ring.
            const double rx = px - cx, ry = py - cy;
            const double rl = std::max(std::hypot(rx, ry), 1.0);
            const double r = 14.0 + 8.0 * static_cast<double>(occ);
            const double ox = px + rx / rl * (r + 6), oy = py + ry / rl * (r + 6);
            out += "  <circle cx=\"" + svg_detail::coord(ox) + "\" cy=\"" +
                   svg_detail::coord(oy) + "\" r=\"" + svg_detail::coord(r) +
                   "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
            lx = px + rx / rl * (2 * r + 16);
            ly = py + ry / rl * (2 * r + 16);
        } else {
            const double mx = (px + qx) / 2, my = (py + qy) / 2;
            const double dx = qx - px, dy = qy - py;
            const double dl = std::max(std::hypot(dx, dy), 1.0);
            const double off = (16.0 + 16.0 * static_cast<double>(occ / 2)) *
                               (occ % 2 == 0 ? 1.0 : -1.0);
            const double hx = mx - dy / dl * off, hy = my + dx / dl * off;
            out += "  <path d=\"M " + svg_detail::coord(px) + " " + svg_detail::coord(py) +
                   " Q " + svg_detail::coord(hx) + " " + svg_detail::coord(hy) + " " +
                   svg_detail::coord(qx) + " " + svg_detail::coord(qy) +
                   "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
            // Midpoint of the quadratic at t = 1/2: (P + 2C + Q) / 4.
            lx = (px + 2 * hx + qx) / 4;
            ly = (py + 2 * hy + qy) / 4;
        }
        out += "  <text x=\"" + svg_detail::coord(lx) + "\" y=\"" + svg_detail::coord(ly) +
               "\" font-family=\"monospace\" font-size=\"10\" fill=\"" + color +
               "\" text-anchor=\"middle\" dominant-baseline=\"middle\">c" +
               std::to_string(edge.curve) + "</text>\n";
    }

    // Vertices on top of the edges.
    for (std::size_t v = 0; v < t.vertex_count; ++v) {
        out += "  <circle cx=\"" + svg_detail::coord(pos[v].first) + "\" cy=\"" +
               svg_detail::coord(pos[v].second) + "\" r=\"3\" fill=\"#333333\"/>\n";
        out += "  <text x=\"" + svg_detail::coord(pos[v].first + 6) + "\" y=\"" +
               svg_detail::coord(pos[v].second - 6) +
               "\" font-family=\"monospace\" font-size=\"10\" fill=\"#333333\">" +
               std::to_string(v) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hyperfan
