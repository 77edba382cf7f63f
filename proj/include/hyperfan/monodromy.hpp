#pragma once

/**
 * @file monodromy.hpp
 * @brief Monodromy on the 1-skeleton: loop evaluation, M1/M2, twisting image.
 *
 * The 1-skeleton is a graph (regular orbits as vertices, corank-1 orbits as
 * edges) with a declared spanning tree; monodromy data assigns an element of
 * R^n / L to each non-tree edge. A closed walk decomposes over the
 * fundamental cycles of the non-tree edges it crosses, so its monodromy is
 * the signed sum of generator values - independent of the chosen tree.
 * Validators check condition M1 (loops around corank-2 hyperbolic points
 * vanish), condition M2 (loops around twisted points evaluate to a declared
 * half-lattice element), and that twisting classes lie in the image of the
 * monodromy.
 */

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "lattice.hpp"
#include "report.hpp"

namespace hyperfan {

/// Edge of the 1-skeleton; a twisted edge is a loop at one vertex.
struct SkeletonEdge {
    std::size_t ends[2] = {0, 0};
    bool twisted = false;
};

/// The 1-skeleton: regular orbits as vertices, corank-1 orbits as edges, with
/// a declared spanning tree. The monodromy generators are the non-tree edges.
struct SkeletonGraph {
    std::size_t vertex_count = 0;
    std::vector<SkeletonEdge> edges;
    std::vector<std::size_t> spanning_tree;  ///< edge indices of the tree
};

/// One traversal of an edge: dir = +1 follows ends[0] -> ends[1], -1 reverses.
struct Step {
    std::size_t edge = 0;
    int dir = +1;
};

/// Closed walks are sequences of steps whose endpoints chain up and return.
using Walk = std::vector<Step>;

inline std::size_t step_source(const SkeletonGraph& g, const Step& s) {
    return g.edges.at(s.edge).ends[s.dir > 0 ? 0 : 1];
}
inline std::size_t step_target(const SkeletonGraph& g, const Step& s) {
    return g.edges.at(s.edge).ends[s.dir > 0 ? 1 : 0];
}

/// Throws std::invalid_argument when the skeleton is malformed: bad indices,
/// twisted non-loop edges, or a declared tree that is not a spanning tree.
inline void check_skeleton(const SkeletonGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("skeleton: no vertices");
    for (const SkeletonEdge& e : g.edges) {
        if (e.ends[0] >= g.vertex_count || e.ends[1] >= g.vertex_count)
            throw std::invalid_argument("skeleton: edge endpoint out of range");
        if (e.twisted && e.ends[0] != e.ends[1])
            throw std::invalid_argument("skeleton: twisted edge must be a loop");
    }
    if (g.spanning_tree.size() != g.vertex_count - 1)
        throw std::invalid_argument("skeleton: spanning tree must have V - 1 edges");
    std::vector<bool> in_tree(g.edges.size(), false);
    for (std::size_t t : g.spanning_tree) {
        if (t >= g.edges.size())
            throw std::invalid_argument("skeleton: tree references a missing edge");
        if (in_tree[t]) throw std::invalid_argument("skeleton: repeated tree edge");
        if (g.edges[t].ends[0] == g.edges[t].ends[1])
            throw std::invalid_argument("skeleton: loop edge cannot be a tree edge");
        in_tree[t] = true;
    }
    // V - 1 edges reaching every vertex force a tree (connected and acyclic).
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t t : g.spanning_tree) {
            const SkeletonEdge& e = g.edges[t];
            for (int side : {0, 1}) {
                if (e.ends[side] != v) continue;
                const std::size_t other = e.ends[1 - side];
                if (!seen[other]) {
                    seen[other] = true;
                    stack.push_back(other);
                }
            }
        }
    }
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (!seen[v]) throw std::invalid_argument("skeleton: declared tree does not span");
}

/// The monodromy generators: non-tree edges in index order.
inline std::vector<std::size_t> generators(const SkeletonGraph& g) {
    std::vector<bool> in_tree(g.edges.size(), false);
    for (std::size_t t : g.spanning_tree) in_tree[t] = true;
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!in_tree[e]) out.push_back(e);
    return out;
}

/// A monodromy specification: one quotient value per generator edge.
struct MonodromySpec {
    SkeletonGraph graph;
    Lattice lattice;
    std::vector<QuotientElement> values;  ///< aligned with generators(graph)
};

inline void check_spec(const MonodromySpec& spec) {
    check_skeleton(spec.graph);
    const auto gens = generators(spec.graph);
    if (gens.size() != spec.values.size())
        throw std::invalid_argument("monodromy spec: one value per generator required, got " +
                                    std::to_string(spec.values.size()) + " for " +
                                    std::to_string(gens.size()) + " generators");
    for (const QuotientElement& v : spec.values)
        if (!(v.lattice == spec.lattice))
            throw std::invalid_argument("monodromy spec: value lattice mismatch");
}

/// Walk along tree edges from one vertex to another (unique in a tree).
inline Walk tree_path(const SkeletonGraph& g, std::size_t from, std::size_t to) {
    if (from == to) return {};
    // BFS over tree edges recording the step that discovered each vertex.
    std::vector<std::optional<Step>> discovered(g.vertex_count);
    std::vector<bool> seen(g.vertex_count, false);
    std::queue<std::size_t> queue;
    queue.push(from);
    seen[from] = true;
    while (!queue.empty() && !seen[to]) {
        const std::size_t v = queue.front();
        queue.pop();
        for (std::size_t t : g.spanning_tree) {
            const SkeletonEdge& e = g.edges[t];
            for (int side : {0, 1}) {
                if (e.ends[side] != v) continue;
                const std::size_t other = e.ends[1 - side];
                if (seen[other]) continue;
                seen[other] = true;
                discovered[other] = Step{t, side == 0 ? +1 : -1};
                queue.push(other);
            }
        }
    }
    if (!seen[to]) throw std::invalid_argument("tree_path: vertices not tree-connected");
    Walk path;
    for (std::size_t v = to; v != from;) {
        const Step s = *discovered[v];
        path.push_back(s);
        v = step_source(g, s);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

/// The fundamental cycle of a non-tree edge: cross it forward, then return
/// to the start through the tree.
inline Walk fundamental_cycle(const SkeletonGraph& g, std::size_t edge) {
    const SkeletonEdge& e = g.edges.at(edge);
    Walk loop{Step{edge, +1}};
    const Walk back = tree_path(g, e.ends[1], e.ends[0]);
    loop.insert(loop.end(), back.begin(), back.end());
    return loop;
}

/// Throws std::invalid_argument unless the walk chains up and closes.
inline void check_closed_walk(const SkeletonGraph& g, const Walk& loop) {
    if (loop.empty()) return;  // the constant loop
    for (std::size_t i = 0; i + 1 < loop.size(); ++i)
        if (step_target(g, loop[i]) != step_source(g, loop[i + 1]))
            throw std::invalid_argument("walk: steps " + std::to_string(i) + " and " +
                                        std::to_string(i + 1) + " do not chain");
    if (step_target(g, loop.back()) != step_source(g, loop.front()))
        throw std::invalid_argument("walk: not closed");
}

/// Evaluates the monodromy homomorphism on a closed walk: decompose the loop
/// over the generators via the spanning tree (tree edges contribute nothing)
/// and sum the generator values modulo the lattice.
inline QuotientElement monodromy_of_loop(const MonodromySpec& spec, const Walk& loop) {
    check_spec(spec);
    check_closed_walk(spec.graph, loop);
    const auto gens = generators(spec.graph);
    RatVec total(spec.lattice.ambient_dim, Rat(0));
    for (const Step& s : loop) {
        const auto it = std::find(gens.begin(), gens.end(), s.edge);
        if (it == gens.end()) continue;  // tree edge
        const RatVec& val = spec.values[it - gens.begin()].rep;
        total = s.dir > 0 ? add(total, val) : sub(total, val);
    }
    return reduce_mod_lattice(total, spec.lattice);
}

/// Re-expresses a spec over a different spanning tree of the same graph:
/// each new generator's value is the monodromy of its fundamental cycle
/// under the original spec. Loop evaluation is invariant under this change.
inline MonodromySpec rebase_spec(const MonodromySpec& spec,
                                 const std::vector<std::size_t>& new_tree) {
    MonodromySpec out;
    out.graph = spec.graph;
    out.graph.spanning_tree = new_tree;
    check_skeleton(out.graph);
    out.lattice = spec.lattice;
    for (std::size_t e : generators(out.graph))
        out.values.push_back(monodromy_of_loop(spec, fundamental_cycle(out.graph, e)));
    return out;
}

/// Corank-2 hyperbolic-hyperbolic point: the 4-edge loop around it.
struct M1Point {
    Walk loop;
};

/// Twisted point: a loop around it and the half element w (2w in L).
struct M2Point {
    Walk loop;
    RatVec w;
};

/// Point data accompanying a spec for the M1 / M2 conditions.
struct PointData {
    std::vector<M1Point> m1;
    std::vector<M2Point> m2;
};

/// Checks M1 (each 4-edge loop evaluates to zero) and M2 (each twisted-point
/// loop evaluates to w modulo L). A twist element with 2w outside L is a
/// malformed datum and throws.
inline ValidationReport check_M1_M2(const MonodromySpec& spec, const PointData& points) {
    check_spec(spec);
    ValidationReport report;
    for (std::size_t i = 0; i < points.m1.size(); ++i) {
        const M1Point& p = points.m1[i];
        if (p.loop.size() != 4) {
            report.add("M1-structure",
                       "point " + std::to_string(i) + " has " + std::to_string(p.loop.size()) +
                           " adjacent edges, expected 4");
            continue;
        }
        const QuotientElement v = monodromy_of_loop(spec, p.loop);
        if (!v.is_zero())
            report.add("M1", "loop around point " + std::to_string(i) + " has nonzero monodromy",
                       vec_to_string(v.rep));
    }
    for (std::size_t i = 0; i < points.m2.size(); ++i) {
        const M2Point& p = points.m2[i];
        const RatVec double_w = add(p.w, p.w);
        if (!in_lattice(spec.lattice, double_w))
            throw std::invalid_argument("check_M1_M2: twist element with 2w outside the lattice");
        const QuotientElement got = monodromy_of_loop(spec, p.loop);
        const QuotientElement want = reduce_mod_lattice(p.w, spec.lattice);
        if (!(got == want))
            report.add("M2",
                       "loop around twisted point " + std::to_string(i) +
                           " does not evaluate to its half element",
                       vec_to_string(got.rep) + " != " + vec_to_string(want.rep));
    }
    return report;
}

/// True iff every twist class lies in the subgroup of R^n / L generated by
/// the spec's generator values.
inline bool check_twisting_in_image(const MonodromySpec& spec,
                                    const std::vector<QuotientElement>& twist_classes) {
    check_spec(spec);
    std::vector<RatVec> value_reps;
    for (const QuotientElement& v : spec.values) value_reps.push_back(v.rep);
    for (const QuotientElement& t : twist_classes) {
        if (!(t.lattice == spec.lattice))
            throw std::invalid_argument("check_twisting_in_image: lattice mismatch");
        if (!in_quotient_subgroup(value_reps, spec.lattice, t)) return false;
    }
    return true;
}

}  // namespace hyperfan
