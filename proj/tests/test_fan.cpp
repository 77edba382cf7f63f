// Tests for complete-fan validation, point location, dual complexes, and
// f-vectors, including the two-oracle completeness cross-check.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperfan/fan.hpp"

using namespace hyperfan;

namespace {

Fan triangle_fan() {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
    f.maximal_cones = {{0, 1}, {1, 2}, {0, 2}};
    return f;
}

Fan square_fan() {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})};
    f.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return f;
}

Fan octant_fan() {
    Fan f;
    f.ambient_dim = 3;
    f.rays = {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}),
              vec({-1, 0, 0}), vec({0, -1, 0}), vec({0, 0, -1})};
    // One maximal cone per sign pattern.
    for (int sx : {0, 1})
        for (int sy : {0, 1})
            for (int sz : {0, 1}) {
                ConeId id{sx ? 3u : 0u, sy ? 4u : 1u, sz ? 5u : 2u};
                std::sort(id.begin(), id.end());
                f.maximal_cones.push_back(id);
            }
    return f;
}

bool has_condition(const ValidationReport& r, const std::string& cond) {
    for (const Violation& v : r.violations)
        if (v.condition == cond) return true;
    return false;
}

}  // namespace

TEST_CASE("the standard complete fans validate") {
    CHECK(validate_fan(triangle_fan()).valid());
    CHECK(validate_fan(square_fan()).valid());
    CHECK(validate_fan(octant_fan()).valid());

    Fan line;
    line.ambient_dim = 1;
    line.rays = {vec({1}), vec({-1})};
    line.maximal_cones = {{0}, {1}};
    CHECK(validate_fan(line).valid());
}

TEST_CASE("incomplete fans fail both completeness oracles") {
    Fan f = triangle_fan();
    f.maximal_cones = {{0, 1}, {1, 2}};  // drop the cone covering the lower wedge
    const ValidationReport report = validate_fan(f);
    CHECK_FALSE(report.valid());
    CHECK(has_condition(report, "completeness"));
    // The uncovered ridges are the rays 0 and 2, each in only one cone.
    bool saw_r0 = false, saw_r2 = false;
    for (const Violation& v : report.violations) {
        if (v.condition != "completeness") continue;
        if (v.witness == "{0}") saw_r0 = true;
        if (v.witness == "{2}") saw_r2 = true;
    }
    CHECK(saw_r0);
    CHECK(saw_r2);
    // The sampling oracle agrees: some direction lies in no interior.
    CHECK(has_condition(report, "completeness-sampling"));
}

TEST_CASE("overlapping cones fail the partition condition") {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({0, 1}), vec({1, 1})};
    f.maximal_cones = {{0, 1}, {0, 2}};
    const ValidationReport report = validate_fan(f);
    CHECK_FALSE(report.valid());
    CHECK(has_condition(report, "partition"));
    // (2,1) witnesses the overlap of the two maximal cones' interiors.
    CHECK(in_relative_interior(cone_of(f, {0, 1}), vec({2, 1})));
    CHECK(in_relative_interior(cone_of(f, {0, 2}), vec({2, 1})));
}

TEST_CASE("ray conditions: nonzero and no duplicate directions") {
    Fan f = triangle_fan();
    f.rays.push_back(vec({2, 0}));  // same direction as ray 0
    f.maximal_cones = {{0, 1}, {1, 2}, {2, 3}};
    CHECK(has_condition(validate_fan(f), "rays"));

    Fan z = triangle_fan();
    z.rays[1] = vec({0, 0});
    CHECK(has_condition(validate_fan(z), "rays"));
}

TEST_CASE("dependent maximal-cone rays fail simpliciality") {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({-1, 0}), vec({0, 1})};
    f.maximal_cones = {{0, 1}, {1, 2}, {0, 2}};  // {0,1} spans a line, not a cone
    CHECK(has_condition(validate_fan(f), "simplicial"));
}

TEST_CASE("structural defects are reported before geometry") {
    Fan f = triangle_fan();
    f.maximal_cones[0] = {0, 7};
    CHECK(has_condition(validate_fan(f), "structure"));

    Fan g = triangle_fan();
    g.maximal_cones[0] = {1, 0};  // unsorted
    CHECK(has_condition(validate_fan(g), "structure"));

    Fan h = triangle_fan();
    h.maximal_cones[0] = {1};  // wrong cardinality
    CHECK(has_condition(validate_fan(h), "structure"));
}

TEST_CASE("point location in the triangle fan") {
    const Fan f = triangle_fan();
    CHECK(locate(f, vec({0, 0})) == ConeId{});        // the origin names the zero cone
    CHECK(locate(f, vec({1, 0})) == ConeId{0});       // on a ray
    CHECK(locate(f, vec({-1, -2})) == ConeId{0, 2});  // 2*(-1,-1) + 1*(1,0)
    CHECK(locate(f, vec({3, 5})) == ConeId{0, 1});

    SECTION("location is homogeneous under positive scaling") {
        std::mt19937_64 rng(1411u);
        std::uniform_int_distribution<long> coord(-8, 8);
        std::uniform_int_distribution<long> num(1, 7);
        for (int trial = 0; trial < 40; ++trial) {
            const RatVec w = vec({coord(rng), coord(rng)});
            const Rat lambda = rat(num(rng), num(rng));
            CHECK(locate_in_valid(f, w) == locate_in_valid(f, scale(lambda, w)));
        }
    }
    SECTION("invalid fans are rejected as a precondition") {
        Fan bad = triangle_fan();
        bad.maximal_cones.pop_back();
        CHECK_THROWS_AS(locate(bad, vec({1, 1})), std::invalid_argument);
    }
}

TEST_CASE("partition uniqueness: every direction lands in exactly one cone") {
    std::mt19937_64 rng(86753u);
    std::uniform_int_distribution<long> coord(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    for (const Fan& f : {triangle_fan(), square_fan(), random_complete_fan_2d(99u, 7)}) {
        REQUIRE(validate_fan(f).valid());
        const std::vector<ConeId> cones = derived_cones(f);
        for (int trial = 0; trial < 80; ++trial) {
            RatVec w{rat(coord(rng), den(rng)), rat(coord(rng), den(rng))};
            std::size_t hits = 0;
            ConeId located;
            for (const ConeId& id : cones)
                if (in_relative_interior(cone_of(f, id), w)) {
                    ++hits;
                    located = id;
                }
            REQUIRE(hits == 1);
            CHECK(locate_in_valid(f, w) == located);
        }
    }
}

TEST_CASE("dual complexes of the standard fans") {
    SECTION("triangle fan gives the boundary of a 2-simplex") {
        const auto faces = dual_complex(triangle_fan());
        CHECK(faces == std::vector<ConeId>{{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}});
    }
    SECTION("square fan gives a 4-cycle") {
        const auto faces = dual_complex(square_fan());
        CHECK(faces.size() == 8);  // 4 vertices + 4 edges
        CHECK(std::find(faces.begin(), faces.end(), ConeId{0, 2}) == faces.end());
        CHECK(std::find(faces.begin(), faces.end(), ConeId{1, 3}) == faces.end());
    }
    SECTION("octant fan gives the octahedron boundary") {
        const auto faces = dual_complex(octant_fan());
        std::size_t verts = 0, edges = 0, tris = 0;
        for (const ConeId& id : faces) {
            if (id.size() == 1) ++verts;
            if (id.size() == 2) ++edges;
            if (id.size() == 3) ++tris;
        }
        CHECK(verts == 6);
        CHECK(edges == 12);
        CHECK(tris == 8);
    }
}

TEST_CASE("f-vectors count derived cones by dimension") {
    CHECK(f_vector(triangle_fan()) == std::vector<std::size_t>{1, 3, 3});
    CHECK(f_vector(square_fan()) == std::vector<std::size_t>{1, 4, 4});
    CHECK(f_vector(octant_fan()) == std::vector<std::size_t>{1, 6, 12, 8});

    SECTION("ends of the f-vector on random fans") {
        for (std::uint64_t seed : {11u, 22u, 33u}) {
            const Fan f = random_complete_fan_2d(seed, 5 + seed % 4);
            const auto fv = f_vector(f);
            CHECK(fv[0] == 1);
            CHECK(fv[f.ambient_dim] == f.maximal_cones.size());
        }
    }
}

TEST_CASE("generated fans: deterministic m-gons and random fans validate") {
    for (std::size_t m = 3; m <= 8; ++m) {
        const Fan f = polygon_fan_2d(m);
        REQUIRE(f.rays.size() == m);
        CHECK(validate_fan(f).valid());
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Fan f = random_complete_fan_2d(seed, 3 + seed % 8);
        CHECK(validate_fan(f).valid());
    }
}
