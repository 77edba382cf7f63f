// Tests for skeleton graphs and monodromy: loop evaluation, tree
// independence, backtracking invariance, M1/M2, and twisting-image checks.

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "hyperfan/monodromy.hpp"

using namespace hyperfan;

namespace {

// Two vertices joined by three parallel edges; tree = first edge.
SkeletonGraph theta_graph() {
    SkeletonGraph g;
    g.vertex_count = 2;
    g.edges = {{{0, 1}, false}, {{0, 1}, false}, {{0, 1}, false}};
    g.spanning_tree = {0};
    return g;
}

// Cycle on m vertices; tree = all but the closing edge.
SkeletonGraph circle_graph(std::size_t m) {
    SkeletonGraph g;
    g.vertex_count = m;
    for (std::size_t i = 0; i < m; ++i) g.edges.push_back({{i, (i + 1) % m}, false});
    g.spanning_tree.resize(m - 1);
    std::iota(g.spanning_tree.begin(), g.spanning_tree.end(), 0);
    return g;
}

MonodromySpec spec_with(SkeletonGraph g, Lattice L, std::vector<RatVec> reps) {
    MonodromySpec spec;
    spec.graph = std::move(g);
    spec.lattice = std::move(L);
    for (RatVec& r : reps) spec.values.push_back(reduce_mod_lattice(r, spec.lattice));
    return spec;
}

}  // namespace

TEST_CASE("skeleton structural checks") {
    SkeletonGraph g = theta_graph();
    CHECK_NOTHROW(check_skeleton(g));

    SECTION("twisted edges must be loops") {
        g.edges[2].twisted = true;  // ends differ
        CHECK_THROWS_AS(check_skeleton(g), std::invalid_argument);
    }
    SECTION("the tree must span") {
        SkeletonGraph h;
        h.vertex_count = 3;
        h.edges = {{{0, 1}, false}, {{0, 1}, false}};
        h.spanning_tree = {0, 1};  // both edges join the same two vertices
        CHECK_THROWS_AS(check_skeleton(h), std::invalid_argument);
    }
    SECTION("loops cannot be tree edges") {
        SkeletonGraph h;
        h.vertex_count = 2;
        h.edges = {{{0, 0}, false}, {{0, 1}, false}};
        h.spanning_tree = {0};
        CHECK_THROWS_AS(check_skeleton(h), std::invalid_argument);
    }
    SECTION("generators are the non-tree edges") {
        CHECK(generators(theta_graph()) == std::vector<std::size_t>{1, 2});
        CHECK(generators(circle_graph(4)) == std::vector<std::size_t>{3});
    }
}

TEST_CASE("monodromy of loops") {
    const Lattice L(2, {vec({1, 0}), vec({0, 1})});

    SECTION("zero values give zero on every loop") {
        const MonodromySpec spec =
            spec_with(theta_graph(), L, {vec({0, 0}), vec({0, 0})});
        const Walk loop{{1, +1}, {0, -1}, {2, +1}, {0, -1}};
        CHECK(monodromy_of_loop(spec, loop).is_zero());
        CHECK(monodromy_of_loop(spec, {}).is_zero());
    }
    SECTION("additivity: a loop crossing both generators sums their values") {
        const MonodromySpec spec =
            spec_with(theta_graph(), L, {{rat(1, 3), rat(0)}, {rat(0), rat(1, 4)}});
        const Walk loop{{1, +1}, {0, -1}, {2, +1}, {0, -1}};
        const QuotientElement got = monodromy_of_loop(spec, loop);
        CHECK(got == quotient_add(spec.values[0], spec.values[1]));
        CHECK(got.rep == RatVec{rat(1, 3), rat(1, 4)});
    }
    SECTION("reversed traversal negates a generator") {
        const MonodromySpec spec =
            spec_with(theta_graph(), L, {{rat(1, 3), rat(0)}, {rat(0), rat(0)}});
        const Walk loop{{0, +1}, {1, -1}};  // forward on the tree edge, back on g1
        CHECK(monodromy_of_loop(spec, loop) == quotient_neg(spec.values[0]));
    }
    SECTION("a circle traversal evaluates to the declared element") {
        const Lattice L1(2, {vec({0, 1})});
        const RatVec mu{rat(2, 5), rat(1, 3)};
        const MonodromySpec spec = spec_with(circle_graph(4), L1, {mu});
        const Walk around{{0, +1}, {1, +1}, {2, +1}, {3, +1}};
        CHECK(monodromy_of_loop(spec, around) == reduce_mod_lattice(mu, L1));
    }
    SECTION("non-closed or non-chaining walks are rejected") {
        const MonodromySpec spec =
            spec_with(theta_graph(), L, {vec({0, 0}), vec({0, 0})});
        CHECK_THROWS_AS(monodromy_of_loop(spec, Walk{{0, +1}}), std::invalid_argument);
        CHECK_THROWS_AS(monodromy_of_loop(spec, Walk{{0, +1}, {1, +1}}),
                        std::invalid_argument);
    }
}

TEST_CASE("monodromy is independent of the spanning tree") {
    std::mt19937_64 rng(987654u);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);

    for (int trial = 0; trial < 40; ++trial) {
        // Random connected graph: a tree on V vertices plus extra edges.
        const std::size_t V = 3 + rng() % 4;
        SkeletonGraph g;
        g.vertex_count = V;
        for (std::size_t v = 1; v < V; ++v)
            g.edges.push_back({{rng() % v, v}, false});
        g.spanning_tree.resize(V - 1);
        std::iota(g.spanning_tree.begin(), g.spanning_tree.end(), 0);
        const std::size_t extras = 1 + rng() % 3;
        for (std::size_t k = 0; k < extras; ++k) {
            const std::size_t a = rng() % V, b = rng() % V;
            g.edges.push_back({{a, b}, false});
        }

        const Lattice L(2, {vec({1, 0})});
        std::vector<RatVec> reps;
        for (std::size_t k = 0; k < generators(g).size(); ++k)
            reps.push_back({rat(num(rng), den(rng)), rat(num(rng), den(rng))});
        const MonodromySpec spec = spec_with(g, L, reps);

        // A second spanning tree by randomized Kruskal over non-loop edges.
        std::vector<std::size_t> order(g.edges.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> comp(V);
        std::iota(comp.begin(), comp.end(), 0);
        std::vector<std::size_t> tree2;
        for (std::size_t e : order) {
            const auto [a, b] = std::pair(g.edges[e].ends[0], g.edges[e].ends[1]);
            if (comp[a] == comp[b]) continue;
            const std::size_t from = comp[b], to = comp[a];
            for (auto& c : comp)
                if (c == from) c = to;
            tree2.push_back(e);
        }
        std::sort(tree2.begin(), tree2.end());
        const MonodromySpec rebased = rebase_spec(spec, tree2);

        // Random closed walk: wander, then return through the tree.
        Walk walk;
        std::size_t start = rng() % V, at = start;
        for (int s = 0; s < 6; ++s) {
            const std::size_t e = rng() % g.edges.size();
            const SkeletonEdge& edge = g.edges[e];
            if (edge.ends[0] == at) {
                walk.push_back({e, +1});
                at = edge.ends[1];
            } else if (edge.ends[1] == at) {
                walk.push_back({e, -1});
                at = edge.ends[0];
            }
        }
        const Walk back = tree_path(g, at, start);
        walk.insert(walk.end(), back.begin(), back.end());

        CHECK(monodromy_of_loop(spec, walk) == monodromy_of_loop(rebased, walk));

        // Backtracking invariance: insert an edge and its immediate reverse.
        if (!walk.empty()) {
            Walk padded;
            const std::size_t cut = rng() % walk.size();
            for (std::size_t i = 0; i < walk.size(); ++i) {
                if (i == cut) {
                    // Detour over any edge touching the current position.
                    const std::size_t here = step_source(g, walk[i]);
                    for (std::size_t e = 0; e < g.edges.size(); ++e) {
                        if (g.edges[e].ends[0] == here) {
                            padded.push_back({e, +1});
                            padded.push_back({e, -1});
                            break;
                        }
                        if (g.edges[e].ends[1] == here) {
                            padded.push_back({e, -1});
                            padded.push_back({e, +1});
                            break;
                        }
                    }
                }
                padded.push_back(walk[i]);
            }
            CHECK(monodromy_of_loop(spec, padded) == monodromy_of_loop(spec, walk));
        }
    }
}

TEST_CASE("conditions M1 and M2") {
    const Lattice L(2, {vec({1, 0}), vec({0, 1})});

    SECTION("a 4-edge loop with values summing to zero passes M1") {
        const MonodromySpec spec = spec_with(
            theta_graph(), L, {{rat(1, 3), rat(0)}, {rat(-1, 3), rat(0)}});
        PointData pts;
        pts.m1.push_back({Walk{{1, +1}, {0, -1}, {2, +1}, {0, -1}}});
        CHECK(check_M1_M2(spec, pts).valid());
    }
    SECTION("a loop with torsion-free remainder fails M1") {
        const MonodromySpec spec = spec_with(
            theta_graph(), L, {{rat(1, 3), rat(0)}, vec({0, 0})});
        PointData pts;
        pts.m1.push_back({Walk{{1, +1}, {0, -1}, {2, +1}, {0, -1}}});
        const auto report = check_M1_M2(spec, pts);
        REQUIRE_FALSE(report.valid());
        CHECK(report.violations[0].condition == "M1");
    }
    SECTION("M1 points must list exactly 4 edges") {
        const MonodromySpec spec = spec_with(
            theta_graph(), L, {vec({0, 0}), vec({0, 0})});
        PointData pts;
        pts.m1.push_back({Walk{{1, +1}, {0, -1}}});
        const auto report = check_M1_M2(spec, pts);
        REQUIRE_FALSE(report.valid());
        CHECK(report.violations[0].condition == "M1-structure");
    }
    SECTION("a twisted point with loop value w passes M2 when 2w is integral") {
        const Lattice Lx(2, {vec({1, 0})});
        const MonodromySpec spec = spec_with(
            theta_graph(), Lx, {{rat(1, 2), rat(0)}, vec({0, 0})});
        PointData pts;
        pts.m2.push_back({Walk{{1, +1}, {0, -1}}, {rat(1, 2), rat(0)}});
        CHECK(check_M1_M2(spec, pts).valid());
    }
    SECTION("a mismatched twisted-point value fails M2") {
        const Lattice Lx(2, {vec({1, 0})});
        const MonodromySpec spec = spec_with(
            theta_graph(), Lx, {vec({0, 0}), vec({0, 0})});
        PointData pts;
        pts.m2.push_back({Walk{{1, +1}, {0, -1}}, {rat(1, 2), rat(0)}});
        const auto report = check_M1_M2(spec, pts);
        REQUIRE_FALSE(report.valid());
        CHECK(report.violations[0].condition == "M2");
    }
    SECTION("a twist element with 2w outside L is malformed") {
        const Lattice Lx(2, {vec({1, 0})});
        const MonodromySpec spec = spec_with(
            theta_graph(), Lx, {vec({0, 0}), vec({0, 0})});
        PointData pts;
        pts.m2.push_back({Walk{{1, +1}, {0, -1}}, {rat(1, 3), rat(0)}});
        CHECK_THROWS_AS(check_M1_M2(spec, pts), std::invalid_argument);
    }
}

TEST_CASE("twisting classes against the monodromy image") {
    const Lattice L(2, {vec({1, 0})});
    const QuotientElement half = reduce_mod_lattice({rat(1, 2), rat(0)}, L);

    SECTION("no twists is vacuously fine") {
        const MonodromySpec spec = spec_with(theta_graph(), L, {vec({1, 0}), vec({0, 0})});
        CHECK(check_twisting_in_image(spec, {}));
    }
    SECTION("a generator carrying the twist value suffices") {
        const MonodromySpec spec = spec_with(
            theta_graph(), L, {{rat(1, 2), rat(0)}, vec({0, 0})});
        CHECK(check_twisting_in_image(spec, {half}));
    }
    SECTION("integer-point values cannot produce a half twist") {
        const MonodromySpec spec = spec_with(theta_graph(), L, {vec({1, 0}), vec({2, 0})});
        CHECK_FALSE(check_twisting_in_image(spec, {half}));
    }
    SECTION("twist classes always have order at most 2") {
        // 2w in L means w + w reduces to zero in the quotient.
        CHECK(quotient_add(half, half).is_zero());
    }
}
