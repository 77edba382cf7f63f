/**
 * @file test_tiling.cpp
 * @brief Surface tilings: validation, realization search, isomorphism.
 */

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "hyperfan/tiling.hpp"

using namespace hyperfan;

namespace {

bool has_condition(const ValidationReport& r, const std::string& cond) {
    for (const Violation& v : r.violations)
        if (v.condition == cond) return true;
    return false;
}

std::size_t count_condition(const ValidationReport& r, const std::string& cond) {
    std::size_t n = 0;
    for (const Violation& v : r.violations)
        if (v.condition == cond) ++n;
    return n;
}

/// Octant sphere with the classic spanning triple attached.
Tiling2D realized_octant() {
    Tiling2D t = octant_tiling();
    t.curve_vectors[0] = vec({1, 0});
    t.curve_vectors[1] = vec({0, 1});
    t.curve_vectors[2] = vec({-1, -1});
    return t;
}

IsoCandidate identity_candidate(const Tiling2D& t) {
    IsoCandidate cand;
    for (std::size_t f = 0; f < t.faces.size(); ++f) cand.face_map.push_back(f);
    for (std::size_t e = 0; e < t.edges.size(); ++e) cand.edge_map.push_back(e);
    for (std::size_t c = 0; c < t.curve_count; ++c) cand.curve_map.push_back(c);
    cand.linear = {vec({1, 0}), vec({0, 1})};
    return cand;
}

/// Quarter turn of the plane, as rows.
RatMat quarter_turn() { return {vec({0, -1}), vec({1, 0})}; }

Tiling2D apply_linear_to_curves(const Tiling2D& t, const RatMat& m) {
    Tiling2D out = t;
    for (auto& v : out.curve_vectors)
        if (v) v = mat_vec(m, *v);
    return out;
}

MonodromySpec torus_spec(const RatVec& w0, const RatVec& w1) {
    MonodromySpec spec;
    SkeletonGraph g;
    g.vertex_count = 1;
    g.edges.push_back({{0, 0}, false});
    g.edges.push_back({{0, 0}, false});
    // one vertex: the empty tree spans, both loops generate
    spec.graph = g;
    spec.lattice = Lattice(2, {vec({1, 0}), vec({0, 1})});
    spec.values = {reduce_mod_lattice(w0, spec.lattice), reduce_mod_lattice(w1, spec.lattice)};
    return spec;
}

}  // namespace

TEST_CASE("cyclic ray sequences are screened exactly") {
    // Determinant signs and winding counts for all cases checked by hand.
    SECTION("spanning triples pass in either orientation") {
        CHECK_FALSE(complete_fan_defect({vec({1, 0}), vec({0, 1}), vec({-1, -1})}).has_value());
        CHECK_FALSE(complete_fan_defect({vec({-1, -1}), vec({0, 1}), vec({1, 0})}).has_value());
    }
    SECTION("four coordinate rays pass") {
        CHECK_FALSE(
            complete_fan_defect({vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})}).has_value());
    }
    SECTION("fewer than three rays never complete the plane") {
        const auto defect = complete_fan_defect({vec({1, 0}), vec({-1, 0})});
        REQUIRE(defect.has_value());
        CHECK(defect->find("3 rays") != std::string::npos);
    }
    SECTION("a half-plane triple fails the winding count") {
        // all rays in the upper half plane: turns agree but never wrap
        const auto defect = complete_fan_defect({vec({1, 0}), vec({1, 1}), vec({1, 2})});
        REQUIRE(defect.has_value());
    }
    SECTION("collinear consecutive rays are rejected") {
        const auto defect = complete_fan_defect({vec({1, 0}), vec({2, 0}), vec({0, 1})});
        REQUIRE(defect.has_value());
        CHECK(defect->find("collinear") != std::string::npos);
    }
    SECTION("consistent turns winding twice are rejected") {
        // Five rays at roughly 0, 143, 288, 72, 217 degrees: every
        // turn is counterclockwise and short, but the walk laps twice.
        const auto defect = complete_fan_defect(
            {vec({1, 0}), vec({-4, 3}), vec({2, -6}), vec({1, 3}), vec({-4, -3})});
        REQUIRE(defect.has_value());
        CHECK(defect->find("wind 2") != std::string::npos);
    }
    SECTION("mixed turn senses are rejected") {
        const auto defect =
            complete_fan_defect({vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({-1, -1})});
        REQUIRE(defect.has_value());
        CHECK(defect->find("sense") != std::string::npos);
    }
}

TEST_CASE("globe tilings are combinatorial surfaces") {
    SECTION("one tropic: the eight-trigone sphere") {
        const Tiling2D t = octant_tiling();
        CHECK(t.vertex_count == 6);
        CHECK(t.curve_count == 3);
        CHECK(t.edges.size() == 12);
        CHECK(t.faces.size() == 8);
        for (const auto& f : t.faces) CHECK(f.boundary.size() == 3);
        CHECK(validate_tiling_surface(t).valid());
    }
    SECTION("two tropics: four trigone pairs and four quads") {
        const Tiling2D t = globe_tiling(2);
        CHECK(t.vertex_count == 10);
        CHECK(t.curve_count == 4);
        CHECK(t.edges.size() == 20);
        CHECK(t.faces.size() == 12);
        std::size_t trigones = 0, quads = 0;
        for (const auto& f : t.faces) {
            if (f.boundary.size() == 3) ++trigones;
            if (f.boundary.size() == 4) ++quads;
        }
        CHECK(trigones == 8);
        CHECK(quads == 4);
        CHECK(validate_tiling_surface(t).valid());
    }
    SECTION("looped globe: loop around a meridian segment") {
        const Tiling2D t = looped_globe_tiling();
        CHECK(t.vertex_count == 16);
        CHECK(t.curve_count == 5);
        CHECK(t.edges.size() == 32);
        CHECK(t.faces.size() == 18);
        CHECK(validate_tiling_surface(t).valid());
        // Euler characteristic of the sphere survives the subdivision.
        CHECK(16 - 32 + 18 == 2);
    }
    SECTION("bigon and quad torus") {
        CHECK(validate_tiling_surface(bigon_tiling()).valid());
        CHECK(validate_tiling_surface(quad_torus_tiling()).valid());
    }
}

TEST_CASE("octant tiling validates with a spanning triple") {
    SECTION("classic witness passes") {
        CHECK(validate_tiling2d(realized_octant()).valid());
    }
    SECTION("half-plane triple breaks every face fan") {
        Tiling2D t = realized_octant();
        t.curve_vectors[2] = vec({1, 1});
        const ValidationReport r = validate_tiling2d(t);
        CHECK_FALSE(r.valid());
        CHECK(count_condition(r, "face-fan") == 8);
        CHECK_FALSE(has_condition(r, "surface"));
    }
    SECTION("collinear crossing directions violate the vertex rule") {
        Tiling2D t = realized_octant();
        t.curve_vectors[1] = vec({2, 0});  // now parallel to curve 0
        const ValidationReport r = validate_tiling2d(t);
        CHECK(has_condition(r, "vertex-rule"));
        CHECK(has_condition(r, "face-fan"));
    }
}

TEST_CASE("missing or zero curve vectors are precondition errors") {
    CHECK_THROWS_AS(validate_tiling2d(octant_tiling()), std::invalid_argument);
    Tiling2D t = realized_octant();
    t.curve_vectors[1] = vec({0, 0});
    CHECK_THROWS_AS(validate_tiling2d(t), std::invalid_argument);
}

TEST_CASE("structure and surface defects are reported") {
    SECTION("broken boundary chaining") {
        Tiling2D t = realized_octant();
        t.faces[0].boundary[1].dir = -t.faces[0].boundary[1].dir;
        const ValidationReport r = validate_tiling2d(t);
        CHECK(has_condition(r, "structure"));
    }
    SECTION("step direction outside +1/-1") {
        Tiling2D t = realized_octant();
        t.faces[0].boundary[0].dir = 0;
        CHECK(has_condition(validate_tiling2d(t), "structure"));
    }
    SECTION("edge referencing a missing curve") {
        Tiling2D t = realized_octant();
        t.edges[0].curve = 17;
        CHECK(has_condition(validate_tiling2d(t), "structure"));
    }
    SECTION("dropping a face unbalances edges and corners") {
        Tiling2D t = realized_octant();
        t.faces.pop_back();
        const ValidationReport r = validate_tiling2d(t);
        CHECK(has_condition(r, "surface"));
    }
    SECTION("every bigon face is rejected by the fan rule") {
        Tiling2D t = bigon_tiling();
        t.curve_vectors[0] = vec({1, 0});
        t.curve_vectors[1] = vec({0, 1});
        const ValidationReport r = validate_tiling2d(t);
        CHECK(count_condition(r, "face-fan") == 4);
        CHECK_FALSE(has_condition(r, "surface"));
    }
}

TEST_CASE("quad torus tiling is valid") {
    const Tiling2D t = quad_torus_tiling();
    CHECK(t.vertex_count == 4);
    CHECK(t.edges.size() == 8);
    CHECK(t.faces.size() == 4);
    CHECK(validate_tiling2d(t).valid());
}

TEST_CASE("realization search finds the octant witness") {
    // Candidates are enumerated with curve 0 pinned to +slot 0;
    // the first two sign patterns leave a half plane uncovered, the third
    // (curve 1 negative, curve 2 positive) spans.  Slot directions for three
    // curves are (3,0), (2,1), (1,2).
    const auto witness = realizable_2d(octant_tiling());
    REQUIRE(witness.has_value());
    REQUIRE(witness->size() == 3);
    CHECK((*witness)[0] == vec({3, 0}));
    CHECK((*witness)[1] == vec({-2, -1}));
    CHECK((*witness)[2] == vec({1, 2}));

    Tiling2D t = octant_tiling();
    for (std::size_t c = 0; c < 3; ++c) t.curve_vectors[c] = (*witness)[c];
    CHECK(validate_tiling2d(t).valid());
}

TEST_CASE("realization search agrees with the validator") {
    SECTION("quad torus, vectors stripped") {
        Tiling2D t = quad_torus_tiling();
        t.curve_vectors.assign(t.curve_count, std::nullopt);
        const auto witness = realizable_2d(t);
        REQUIRE(witness.has_value());
        CHECK((*witness)[0] == vec({4, 0}));  // curve 0 always takes +slot 0
        for (std::size_t c = 0; c < t.curve_count; ++c) t.curve_vectors[c] = (*witness)[c];
        CHECK(validate_tiling2d(t).valid());
    }
    SECTION("the search is deterministic") {
        CHECK(realizable_2d(octant_tiling()) == realizable_2d(octant_tiling()));
    }
}

TEST_CASE("globe tilings with two or more tropics admit no vectors") {
    // The twelve-face globe pattern cannot be realized: the two polar
    // trigones of a sector force both tropic directions into the same open
    // arc opposite the meridian pair, while the quad between them needs the
    // meridian directions to separate them.
    CHECK_FALSE(realizable_2d(globe_tiling(2)).has_value());
}

TEST_CASE("looped globe admits no vectors") {
    // Same separation argument, run against the loop curve and the
    // meridian it encircles.
    CHECK_FALSE(realizable_2d(looped_globe_tiling()).has_value());
}

TEST_CASE("bigon tiling is never realizable") {
    CHECK_FALSE(realizable_2d(bigon_tiling()).has_value());
}

TEST_CASE("realization capacity and preconditions") {
    SECTION("more than ten curves exceed the search capacity") {
        CHECK_THROWS_AS(realizable_2d(globe_tiling(9)), std::length_error);
    }
    SECTION("non-surfaces are rejected up front") {
        Tiling2D t = octant_tiling();
        t.faces[0].boundary[1].dir = -t.faces[0].boundary[1].dir;
        CHECK_THROWS_AS(realizable_2d(t), std::invalid_argument);
    }
}

TEST_CASE("single-face winding defect reaches the face report") {
    // One pentagon whose boundary directions lap twice; the complex is not a
    // closed surface (each edge on one face only), but the fan defect must
    // still be reported alongside the surface violations.
    Tiling2D t;
    t.vertex_count = 5;
    t.curve_count = 5;
    t.curve_vectors = {vec({1, 0}), vec({-4, 3}), vec({2, -6}), vec({1, 3}), vec({-4, -3})};
    for (std::size_t i = 0; i < 5; ++i) t.edges.push_back({i, {i, (i + 1) % 5}});
    Tiling2D::Face f;
    for (std::size_t i = 0; i < 5; ++i) f.boundary.push_back({i, +1});
    t.faces.push_back(f);
    const ValidationReport r = validate_tiling2d(t);
    CHECK(has_condition(r, "surface"));
    REQUIRE(has_condition(r, "face-fan"));
    for (const Violation& v : r.violations)
        if (v.condition == "face-fan") CHECK(v.detail.find("wind 2") != std::string::npos);
}

TEST_CASE("isomorphism verification accepts rotated copies") {
    const Tiling2D a = realized_octant();
    SECTION("identity") {
        CHECK(verify_isomorphism(a, a, identity_candidate(a)));
    }
    SECTION("quarter turn") {
        const Tiling2D b = apply_linear_to_curves(a, quarter_turn());
        IsoCandidate cand = identity_candidate(a);
        cand.linear = quarter_turn();
        CHECK(verify_isomorphism(a, b, cand));
    }
}

TEST_CASE("isomorphism verification rejects mismatches") {
    const Tiling2D a = realized_octant();
    SECTION("wrong linear part") {
        const Tiling2D b = apply_linear_to_curves(a, quarter_turn());
        CHECK_FALSE(verify_isomorphism(a, b, identity_candidate(a)));
    }
    SECTION("tampered curve vector") {
        Tiling2D b = a;
        b.curve_vectors[2] = vec({-2, -1});  // still valid, no longer the image
        CHECK(validate_tiling2d(b).valid());
        CHECK_FALSE(verify_isomorphism(a, b, identity_candidate(a)));
    }
    SECTION("face map breaking boundary structure") {
        IsoCandidate cand = identity_candidate(a);
        std::swap(cand.face_map[0], cand.face_map[1]);
        CHECK_FALSE(verify_isomorphism(a, a, cand));
    }
    SECTION("malformed candidates throw") {
        IsoCandidate cand = identity_candidate(a);
        cand.face_map[0] = 1;  // repeated image
        CHECK_THROWS_AS(verify_isomorphism(a, a, cand), std::invalid_argument);
        cand = identity_candidate(a);
        cand.edge_map.pop_back();
        CHECK_THROWS_AS(verify_isomorphism(a, a, cand), std::invalid_argument);
        cand = identity_candidate(a);
        cand.linear = {vec({1, 1}), vec({2, 2})};  // singular
        CHECK_THROWS_AS(verify_isomorphism(a, a, cand), std::invalid_argument);
    }
    SECTION("invalid tilings are precondition errors") {
        Tiling2D broken = a;
        broken.curve_vectors[2] = vec({1, 1});
        CHECK_THROWS_AS(verify_isomorphism(broken, a, identity_candidate(a)),
                        std::invalid_argument);
    }
}

TEST_CASE("isomorphism transports monodromy") {
    const Tiling2D a = quad_torus_tiling();
    const Tiling2D b = apply_linear_to_curves(a, quarter_turn());
    IsoCandidate cand = identity_candidate(a);
    cand.linear = quarter_turn();

    const MonodromySpec mono_a = torus_spec(RatVec{rat(1, 2), rat(0)}, RatVec{rat(0), rat(1, 2)});
    SECTION("matching transported values pass") {
        // quarter turn sends (1/2,0) to (0,1/2) and (0,1/2) to (-1/2,0) = (1/2,0) mod Z^2
        const MonodromySpec mono_b =
            torus_spec(RatVec{rat(0), rat(1, 2)}, RatVec{rat(1, 2), rat(0)});
        CHECK(verify_isomorphism(a, b, cand, mono_a, mono_b));
    }
    SECTION("swapped values fail") {
        const MonodromySpec mono_b =
            torus_spec(RatVec{rat(1, 2), rat(0)}, RatVec{rat(0), rat(1, 2)});
        CHECK_FALSE(verify_isomorphism(a, b, cand, mono_a, mono_b));
    }
    SECTION("lattice mismatch fails") {
        MonodromySpec mono_b =
            torus_spec(RatVec{rat(0), rat(1, 2)}, RatVec{rat(1, 2), rat(0)});
        mono_b.lattice = Lattice(2, {vec({2, 0}), vec({0, 2})});
        mono_b.values = {reduce_mod_lattice(RatVec{rat(0), rat(1, 2)}, mono_b.lattice),
                         reduce_mod_lattice(RatVec{rat(1, 2), rat(0)}, mono_b.lattice)};
        CHECK_FALSE(verify_isomorphism(a, b, cand, mono_a, mono_b));
    }
    SECTION("generator count mismatch fails") {
        MonodromySpec mono_b = torus_spec(RatVec{rat(0), rat(1, 2)}, RatVec{rat(1, 2), rat(0)});
        mono_b.graph.edges.pop_back();
        mono_b.values.pop_back();
        CHECK_FALSE(verify_isomorphism(a, b, cand, mono_a, mono_b));
    }
}
