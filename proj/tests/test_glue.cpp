// Tests for the 2^m reflection gluing: cell counts, the two Euler oracles,
// hypercube top-cell adjacency, and collapse back to the domain.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hyperfan/glue.hpp"

using namespace hyperfan;

namespace {

Fan line_fan() {
    Fan f;
    f.ambient_dim = 1;
    f.rays = {vec({1}), vec({-1})};
    f.maximal_cones = {{0}, {1}};
    return f;
}

Fan octant_fan() {
    Fan f;
    f.ambient_dim = 3;
    f.rays = {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}),
              vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})};
    for (int sx : {0, 1})
        for (int sy : {0, 1})
            for (int sz : {0, 1}) {
                ConeId id{sx ? 3u : 0u, sy ? 4u : 1u, sz ? 5u : 2u};
                std::sort(id.begin(), id.end());
                f.maximal_cones.push_back(id);
            }
    return f;
}

}  // namespace

TEST_CASE("triangle fan glues to a sphere with 8 domains") {
    const ClosedComplex c = reflection_glue(polygon_fan_2d(3));
    CHECK(closed_cell_counts(c) == std::vector<std::size_t>{6, 12, 8});
    CHECK(euler_closed(c) == 2);
    CHECK(euler_closed_formula(polygon_fan_2d(3)) == 2);
    CHECK(glued_connected(c));
}

TEST_CASE("line fan glues to a circle") {
    const ClosedComplex c = reflection_glue(line_fan());
    CHECK(closed_cell_counts(c) == std::vector<std::size_t>{4, 4});
    CHECK(euler_closed(c) == 0);
    CHECK(glued_connected(c));
}

TEST_CASE("square fan glues to a torus") {
    const ClosedComplex c = reflection_glue(polygon_fan_2d(4));
    CHECK(closed_cell_counts(c) == std::vector<std::size_t>{16, 32, 16});
    CHECK(euler_closed(c) == 0);
}

TEST_CASE("octant fan glues to a closed 3-complex with Euler number zero") {
    const ClosedComplex c = reflection_glue(octant_fan());
    CHECK(euler_closed(c) == 0);
    CHECK(euler_closed_formula(octant_fan()) == 0);
    CHECK(closed_cell_counts(c) == std::vector<std::size_t>{64, 192, 192, 64});
}

TEST_CASE("coset counts per cone follow 2^(m - |S|)") {
    const Fan f = polygon_fan_2d(5);
    const ClosedComplex c = reflection_glue(f);
    std::map<ConeId, std::size_t> per_cone;
    for (const GluedCell& cell : c.cells) per_cone[cell.cone]++;
    for (const auto& [cone, count] : per_cone)
        CHECK(count == (std::size_t{1} << (c.m - cone.size())));
    // Canonical representatives have the cone bits cleared.
    for (const GluedCell& cell : c.cells) CHECK((cell.coset & cone_mask(cell.cone)) == 0);
}

TEST_CASE("the two Euler oracles agree for m-gon fans, with the closed form") {
    const long expected[] = {2, 0, -8, -32, -96, -256};
    for (std::size_t m = 3; m <= 8; ++m) {
        const Fan f = polygon_fan_2d(m);
        const long by_enumeration = euler_closed(reflection_glue(f));
        const long by_formula = euler_closed_formula(f);
        CHECK(by_enumeration == by_formula);
        // chi = 2^(m-2) * (4 - m) for the m-gon gluing.
        CHECK(by_enumeration == expected[m - 3]);
        CHECK(by_enumeration == (1l << (m - 2)) * (4 - static_cast<long>(m)));
    }
}

TEST_CASE("oracle agreement on random fans") {
    for (std::uint64_t seed = 40; seed < 48; ++seed) {
        const Fan f = random_complete_fan_2d(seed, 3 + seed % 6);
        CHECK(euler_closed(reflection_glue(f)) == euler_closed_formula(f));
    }
}

TEST_CASE("top-cell adjacency is the m-hypercube graph") {
    const ClosedComplex c = reflection_glue(polygon_fan_2d(3));
    const auto edges = top_cell_adjacency(c);
    // The 3-cube has 12 edges: every pair at Hamming distance one.
    std::set<std::pair<GroupElement, GroupElement>> expected;
    for (GroupElement g = 0; g < 8; ++g)
        for (std::size_t b = 0; b < 3; ++b)
            if (!(g & (GroupElement{1} << b))) expected.insert({g, g | (GroupElement{1} << b)});
    CHECK(std::set<std::pair<GroupElement, GroupElement>>(edges.begin(), edges.end()) ==
          expected);
    CHECK(edges.size() == 12);
    CHECK(glued_connected(c));
}

TEST_CASE("collapsing all cosets reproduces the domain complex") {
    for (const Fan& f :
         {polygon_fan_2d(3), polygon_fan_2d(4), line_fan(), octant_fan(),
          random_complete_fan_2d(321u, 6)}) {
        const DomainComplex direct = domain_from_fan(f);
        const DomainComplex collapsed = collapse_cosets(reflection_glue(f));
        REQUIRE(collapsed.cells.size() == direct.cells.size());
        for (std::size_t i = 0; i < direct.cells.size(); ++i) {
            CHECK(collapsed.cells[i].cone == direct.cells[i].cone);
            CHECK(collapsed.cells[i].dim == direct.cells[i].dim);
        }
    }
}

TEST_CASE("invalid fans are rejected by reflection_glue") {
    Fan bad = polygon_fan_2d(3);
    bad.maximal_cones.pop_back();
    CHECK_THROWS_AS(reflection_glue(bad), std::invalid_argument);
}
