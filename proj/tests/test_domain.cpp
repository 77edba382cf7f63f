// Tests for the dual domain complex: cell counts, incidence, Euler
// characteristic 1, and per-cell orbit invariants.

#include <catch2/catch_amalgamated.hpp>

#include "hyperfan/domain.hpp"

using namespace hyperfan;

namespace {

Fan triangle_fan() {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
    f.maximal_cones = {{0, 1}, {1, 2}, {0, 2}};
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

Fan orthant_fan_4d() {
    Fan f;
    f.ambient_dim = 4;
    for (std::size_t j = 0; j < 4; ++j) {
        RatVec plus(4, Rat(0)), minus(4, Rat(0));
        plus[j] = 1;
        minus[j] = -1;
        f.rays.push_back(plus);
        f.rays.push_back(minus);
    }
    for (int pattern = 0; pattern < 16; ++pattern) {
        ConeId id;
        for (std::size_t j = 0; j < 4; ++j)
            id.push_back(2 * j + ((pattern >> j) & 1));  // ray 2j = +e_j, 2j+1 = -e_j
        f.maximal_cones.push_back(id);
    }
    return f;
}

}  // namespace

TEST_CASE("domain cell counts dualize the f-vector") {
    CHECK(domain_cell_counts(domain_from_fan(triangle_fan())) ==
          std::vector<std::size_t>{3, 3, 1});
    CHECK(domain_cell_counts(domain_from_fan(octant_fan())) ==
          std::vector<std::size_t>{8, 12, 6, 1});  // the combinatorial cube

    Fan square;
    square.ambient_dim = 2;
    square.rays = {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})};
    square.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    CHECK(domain_cell_counts(domain_from_fan(square)) == std::vector<std::size_t>{4, 4, 1});

    SECTION("duality holds cone by cone on random fans") {
        for (std::uint64_t seed : {5u, 6u, 7u}) {
            const Fan f = random_complete_fan_2d(seed, 4 + seed % 5);
            const auto fv = f_vector(f);
            const auto counts = domain_cell_counts(domain_from_fan(f));
            for (std::size_t k = 0; k <= f.ambient_dim; ++k)
                CHECK(counts[k] == fv[f.ambient_dim - k]);
        }
    }
}

TEST_CASE("euler_domain equals 1 on every valid fan domain") {
    CHECK(euler_domain(domain_from_fan(triangle_fan())) == 1);
    CHECK(euler_domain(domain_from_fan(octant_fan())) == 1);
    CHECK(euler_domain(domain_from_fan(orthant_fan_4d())) == 1);
    for (std::uint64_t seed = 100; seed < 110; ++seed)
        CHECK(euler_domain(domain_from_fan(random_complete_fan_2d(seed, 3 + seed % 8))) == 1);
}

TEST_CASE("invalid fans are rejected by domain_from_fan") {
    Fan bad = triangle_fan();
    bad.maximal_cones.pop_back();
    CHECK_THROWS_AS(domain_from_fan(bad), std::invalid_argument);
}

TEST_CASE("incidence poset: graded, dual to inclusion, unique open cell") {
    const DomainComplex d = domain_from_fan(triangle_fan());

    std::size_t open_cells = 0, open_index = 0;
    for (std::size_t i = 0; i < d.cells.size(); ++i)
        if (d.cells[i].dim == d.n) {
            ++open_cells;
            open_index = i;
        }
    CHECK(open_cells == 1);
    CHECK(d.cells[open_index].cone.empty());

    for (std::size_t a = 0; a < d.cells.size(); ++a) {
        // Every cell lies in the closure of the open cell.
        CHECK(lies_in_closure(d, a, open_index));
        for (std::size_t b = 0; b < d.cells.size(); ++b)
            if (lies_in_closure(d, a, b) && a != b)
                CHECK(d.cells[a].dim < d.cells[b].dim);  // grading
    }
    // Dimension bookkeeping: cell dim + cone dim = n.
    for (const DomainCell& c : d.cells) CHECK(c.dim + c.cone.size() == d.n);
}

TEST_CASE("cells of a fan domain are totally hyperbolic") {
    const DomainComplex d2 = domain_from_fan(triangle_fan());
    for (std::size_t i = 0; i < d2.cells.size(); ++i) {
        const HERT q = hert_of_cell(d2, i);
        CHECK(validate_hert(q, 2));
        CHECK(q.e + q.t == 0);  // toric degree zero everywhere
        if (d2.cells[i].dim == 1) CHECK(q == HERT{1, 0, 1, 0});
        if (d2.cells[i].dim == 2) CHECK(q == HERT{0, 0, 2, 0});
    }
    const DomainComplex d3 = domain_from_fan(octant_fan());
    for (std::size_t i = 0; i < d3.cells.size(); ++i)
        if (d3.cells[i].dim == 0) CHECK(hert_of_cell(d3, i) == HERT{3, 0, 0, 0});
}

TEST_CASE("polytopality flag by dimension") {
    CHECK(domain_from_fan(triangle_fan()).polytopality == Polytopality::yes);
    CHECK(domain_from_fan(octant_fan()).polytopality == Polytopality::yes);
    CHECK(domain_from_fan(orthant_fan_4d()).polytopality == Polytopality::unknown);
}
