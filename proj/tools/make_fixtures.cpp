/**
 * @file make_fixtures.cpp
 * @brief Regenerates the canonical fixture documents and golden SVGs.
 *
 * Usage: make_fixtures [fixture-dir] [golden-dir]
 * (defaults: "fixtures" and "tests/golden" relative to the working directory)
 *
 * Every document is checked against its intended verdict before it is
 * written, so a successful run guarantees the fixtures mean what their
 * names say.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "hyperfan/io.hpp"
#include "hyperfan/svg.hpp"

namespace {

using namespace hyperfan;
namespace fs = std::filesystem;

fs::path g_fixture_dir;
fs::path g_golden_dir;

void emit(const fs::path& dir, const std::string& name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
    std::cout << "wrote " << (dir / name).string() << "\n";
}

void emit_doc(const std::string& name, const json& doc) {
    emit(g_fixture_dir, name, dump_document(doc));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("fixture self-check failed: " + what);
}

// ---------------------------------------------------------------------------
// Fans
// ---------------------------------------------------------------------------

Fan octant3_fan() {
    Fan f;
    f.ambient_dim = 3;
    // Rays axis-major (+x, -x, +y, -y, +z, -z) so every octant cone's ray
    // indices come out ascending.
    f.rays = {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}),
              vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})};
    for (std::size_t sx : {0u, 1u})
        for (std::size_t sy : {0u, 1u})
            for (std::size_t sz : {0u, 1u}) f.maximal_cones.push_back({sx, 2 + sy, 4 + sz});
    return f;
}

Fan line_fan() {
    Fan f;
    f.ambient_dim = 1;
    f.rays = {vec({1}), vec({-1})};
    f.maximal_cones = {{0}, {1}};
    return f;
}

// Two cones covering only the upper half plane: fails completeness.
Fan halfplane_fan() {
    Fan f;
    f.ambient_dim = 2;
    f.rays = {vec({1, 0}), vec({0, 1}), vec({-1, 0})};
    f.maximal_cones = {{0, 1}, {1, 2}};
    return f;
}

void write_fans() {
    const Fan triangle = polygon_fan_2d(3);
    const Fan square = polygon_fan_2d(4);
    const Fan octant3 = octant3_fan();
    const Fan line = line_fan();
    const Fan halfplane = halfplane_fan();
    require(validate_fan(triangle).valid(), "triangle fan must validate");
    require(validate_fan(square).valid(), "square fan must validate");
    require(validate_fan(octant3).valid(), "octant fan must validate");
    require(validate_fan(line).valid(), "line fan must validate");
    require(!validate_fan(halfplane).valid(), "half-plane fan must fail validation");
    emit_doc("triangle.fan.json", fan_to_json(triangle));
    emit_doc("square.fan.json", fan_to_json(square));
    emit_doc("octant3.fan.json", fan_to_json(octant3));
    emit_doc("line.fan.json", fan_to_json(line));
    emit_doc("halfplane.fan.json", fan_to_json(halfplane));
}

// ---------------------------------------------------------------------------
// Tilings and isomorphism documents
// ---------------------------------------------------------------------------

Tiling2D realized_octant() {
    Tiling2D t = octant_tiling();
    t.curve_vectors = {vec({1, 0}), vec({0, 1}), vec({-1, -1})};
    return t;
}

Tiling2D rotated_octant() {
    Tiling2D t = octant_tiling();
    // The quarter-turn image of the realized octant's vectors.
    t.curve_vectors = {vec({0, 1}), vec({-1, 0}), vec({1, -1})};
    return t;
}

Tiling2D rotated_quad_torus() {
    Tiling2D t = quad_torus_tiling();
    t.curve_vectors = {vec({-1, 0}), vec({1, 0}), vec({0, -1}), vec({0, 1})};
    return t;
}

IsoCandidate identity_candidate(const Tiling2D& t, RatMat linear) {
    IsoCandidate c;
    for (std::size_t i = 0; i < t.faces.size(); ++i) c.face_map.push_back(i);
    for (std::size_t i = 0; i < t.edges.size(); ++i) c.edge_map.push_back(i);
    for (std::size_t i = 0; i < t.curve_count; ++i) c.curve_map.push_back(i);
    c.linear = std::move(linear);
    return c;
}

RatMat quarter_turn() { return {vec({0, -1}), vec({1, 0})}; }
RatMat identity_2d() { return {vec({1, 0}), vec({0, 1})}; }

// One regular vertex, two untwisted loop edges, empty spanning tree: the
// skeleton of the quad torus with the two curve classes as generators.
MonodromySpec torus_spec(const RatVec& w0, const RatVec& w1) {
    MonodromySpec spec;
    spec.graph.vertex_count = 1;
    spec.graph.edges = {{{0, 0}, false}, {{0, 0}, false}};
    spec.lattice = Lattice(2, {vec({1, 0}), vec({0, 1})});
    spec.values = {reduce_mod_lattice(w0, spec.lattice), reduce_mod_lattice(w1, spec.lattice)};
    return spec;
}

void write_tilings() {
    const Tiling2D octant = realized_octant();
    const Tiling2D octant_rot = rotated_octant();
    const Tiling2D torus = quad_torus_tiling();
    const Tiling2D torus_rot = rotated_quad_torus();
    require(validate_tiling2d(octant).valid(), "realized octant must validate");
    require(validate_tiling2d(octant_rot).valid(), "rotated octant must validate");
    require(validate_tiling2d(torus).valid(), "quad torus must validate");
    require(validate_tiling2d(torus_rot).valid(), "rotated quad torus must validate");
    require(realizable_2d(octant_tiling()).has_value(), "blank octant must be realizable");
    require(!realizable_2d(globe_tiling(2)).has_value(), "double globe must be infeasible");
    require(!realizable_2d(looped_globe_tiling()).has_value(),
            "looped globe must be infeasible");
    require(!realizable_2d(bigon_tiling()).has_value(), "bigon must be infeasible");

    emit_doc("octant.tiling.json", tiling_to_json(octant));
    emit_doc("octant_rot.tiling.json", tiling_to_json(octant_rot));
    emit_doc("octant_blank.tiling.json", tiling_to_json(octant_tiling()));
    emit_doc("globe2.tiling.json", tiling_to_json(globe_tiling(2)));
    emit_doc("looped_globe.tiling.json", tiling_to_json(looped_globe_tiling()));
    emit_doc("bigon.tiling.json", tiling_to_json(bigon_tiling()));
    emit_doc("quad_torus.tiling.json", tiling_to_json(torus));
    emit_doc("quad_torus_rot.tiling.json", tiling_to_json(torus_rot));

    IsoDocument rot;
    rot.candidate = identity_candidate(octant, quarter_turn());
    require(verify_isomorphism(octant, octant_rot, rot.candidate),
            "quarter-turn octant candidate must verify");
    emit_doc("octant_rot.iso.json", iso_to_json(rot));

    IsoDocument bad;
    bad.candidate = identity_candidate(octant, identity_2d());
    require(!verify_isomorphism(octant, octant_rot, bad.candidate),
            "identity-linear octant candidate must fail");
    emit_doc("octant_bad.iso.json", iso_to_json(bad));

    IsoDocument torus_iso;
    torus_iso.candidate = identity_candidate(torus, quarter_turn());
    torus_iso.mono_a = torus_spec(RatVec{Rat(1, 2), Rat(0)}, RatVec{Rat(0), Rat(1, 2)});
    torus_iso.mono_b = torus_spec(RatVec{Rat(0), Rat(1, 2)}, RatVec{Rat(1, 2), Rat(0)});
    require(verify_isomorphism(torus, torus_rot, torus_iso.candidate, *torus_iso.mono_a,
                               *torus_iso.mono_b),
            "quad torus monodromy candidate must verify");
    emit_doc("torus_mono.iso.json", iso_to_json(torus_iso));
}

// ---------------------------------------------------------------------------
// Monodromy specifications
// ---------------------------------------------------------------------------

// Square skeleton with one twisted loop at vertex 0; generators are the
// closing edge 3 and the loop 4.
MonodromySpec square_skeleton_spec(const RatVec& closing, const RatVec& loop) {
    MonodromySpec spec;
    spec.graph.vertex_count = 4;
    spec.graph.edges = {{{0, 1}, false}, {{1, 2}, false}, {{2, 3}, false},
                        {{3, 0}, false}, {{0, 0}, true}};
    spec.graph.spanning_tree = {0, 1, 2};
    spec.lattice = Lattice(2, {vec({1, 0}), vec({0, 1})});
    spec.values = {reduce_mod_lattice(closing, spec.lattice),
                   reduce_mod_lattice(loop, spec.lattice)};
    return spec;
}

void write_monodromy() {
    const Walk square_loop = {{0, +1}, {1, +1}, {2, +1}, {3, +1}};
    const Walk twist_loop = {{4, +1}};

    PointData points;
    points.m1 = {{square_loop}};
    points.m2 = {{twist_loop, RatVec{Rat(1, 2), Rat(0)}}};

    const MonodromySpec pass =
        square_skeleton_spec(RatVec{Rat(0), Rat(0)}, RatVec{Rat(1, 2), Rat(0)});
    require(check_M1_M2(pass, points).valid(), "m1 pass spec must satisfy M1 and M2");
    emit_doc("m1_pass.mono.json", monodromy_to_json(pass, points));

    const MonodromySpec fail =
        square_skeleton_spec(RatVec{Rat(1, 3), Rat(0)}, RatVec{Rat(1, 2), Rat(1, 2)});
    const ValidationReport fail_report = check_M1_M2(fail, points);
    bool has_m1 = false, has_m2 = false;
    for (const Violation& v : fail_report.violations) {
        if (v.condition == "M1") has_m1 = true;
        if (v.condition == "M2") has_m2 = true;
    }
    require(has_m1 && has_m2, "m1 fail spec must violate both M1 and M2");
    emit_doc("m1_fail.mono.json", monodromy_to_json(fail, points));
}

// ---------------------------------------------------------------------------
// Marked graphs
// ---------------------------------------------------------------------------

Mark single_mark(RatVec v) {
    Mark m;
    m.v = std::move(v);
    return m;
}

Mark couple_mark(RatVec v, RatVec w) {
    Mark m;
    m.is_couple = true;
    m.v = std::move(v);
    m.w = std::move(w);
    return m;
}

void check_class(const MarkedGraph& g, int n, char letter, const std::string& manifold,
                 const std::string& what) {
    const GraphClass got = classify_marked_graph(g, n);
    require(got.case_letter == letter && got.manifold == manifold,
            what + " must classify as case " + std::string(1, letter) + " (" + manifold + ")");
}

void write_marked_graphs() {
    const Lattice vertical_2d(2, {vec({0, 1})});
    const Lattice plane_3d(3, {vec({0, 1, 0}), vec({0, 0, 1})});

    MarkedGraph a;
    a.shape = GraphShape::circle;
    a.vertices = {single_mark(vec({1, 0})), single_mark(vec({-1, 0}))};
    a.lattice = vertical_2d;
    a.monodromy = vec({0, 0});
    check_class(a, 2, 'a', "T^2", "graph a");
    emit_doc("graph_a.graph.json", marked_graph_to_json(a, 2));

    MarkedGraph b;
    b.shape = GraphShape::interval;
    b.vertices = {couple_mark(vec({1, 0}), vec({0, 1})),
                  couple_mark(vec({-1, 0}), vec({0, 1}))};
    b.lattice = vertical_2d;
    check_class(b, 2, 'b', "S^2", "graph b");
    emit_doc("graph_b.graph.json", marked_graph_to_json(b, 2));

    MarkedGraph c;
    c.shape = GraphShape::interval;
    c.vertices = {couple_mark(vec({1, 0}), vec({0, 1})), single_mark(vec({-1, 0}))};
    c.lattice = vertical_2d;
    check_class(c, 2, 'c', "RP^2", "graph c");
    emit_doc("graph_c.graph.json", marked_graph_to_json(c, 2));

    MarkedGraph d;
    d.shape = GraphShape::interval;
    d.vertices = {single_mark(vec({1, 0})), single_mark(vec({-1, 0}))};
    d.lattice = vertical_2d;
    check_class(d, 2, 'd', "Klein bottle", "graph d");
    emit_doc("graph_d.graph.json", marked_graph_to_json(d, 2));

    MarkedGraph b3_product;
    b3_product.shape = GraphShape::interval;
    b3_product.vertices = {couple_mark(vec({1, 0, 0}), vec({0, 1, 0})),
                           couple_mark(vec({-1, 0, 0}), vec({0, 1, 0}))};
    b3_product.lattice = plane_3d;
    check_class(b3_product, 3, 'b', "S^2 x S^1", "graph b (3d, product)");
    emit_doc("graph_b3_product.graph.json", marked_graph_to_json(b3_product, 3));

    MarkedGraph b3_lens = b3_product;
    b3_lens.vertices[1] = couple_mark(vec({-1, 0, 0}), vec({0, 0, 1}));
    check_class(b3_lens, 3, 'b', "lens", "graph b (3d, lens)");
    emit_doc("graph_b3_lens.graph.json", marked_graph_to_json(b3_lens, 3));

    MarkedGraph odd = a;
    odd.vertices.push_back(single_mark(vec({1, 0})));
    require(!validate_marked_graph(odd, 2).valid(), "odd circle must fail validation");
    emit_doc("graph_bad_odd.graph.json", marked_graph_to_json(odd, 2));

    MarkedGraph in_span = a;
    in_span.vertices[1] = single_mark(vec({0, 1}));
    require(!validate_marked_graph(in_span, 2).valid(), "in-span mark must fail validation");
    emit_doc("graph_bad_span.graph.json", marked_graph_to_json(in_span, 2));
}

// ---------------------------------------------------------------------------
// Typed quotients and reduction data
// ---------------------------------------------------------------------------

TypedQuotient::Edge quotient_edge(EdgeLetter letter, bool boundary,
                                  std::vector<std::size_t> sides,
                                  std::optional<std::size_t> a = std::nullopt,
                                  std::optional<std::size_t> b = std::nullopt) {
    TypedQuotient::Edge e;
    e.letter = letter;
    e.boundary = boundary;
    e.face_sides = std::move(sides);
    e.ends[0] = a;
    e.ends[1] = b;
    return e;
}

// Disk whose whole boundary is one closed e-curve; no vertices.
TypedQuotient e_disk(int n) {
    TypedQuotient q;
    q.n = n;
    q.face_count = 1;
    q.edges = {quotient_edge(EdgeLetter::e, true, {0})};
    return q;
}

// Disk split by an interior h-diameter; the boundary circle is two h_t arcs
// meeting at two type-V vertices.
TypedQuotient v_disk(int n) {
    TypedQuotient q;
    q.n = n;
    q.face_count = 2;
    q.edges = {quotient_edge(EdgeLetter::h_t, true, {0}, 0, 1),
               quotient_edge(EdgeLetter::h_t, true, {1}, 0, 1),
               quotient_edge(EdgeLetter::h, false, {0, 1}, 0, 1)};
    q.vertices = {{"V"}, {"V"}};
    return q;
}

// Sphere cut by four interior h-meridians between two type-IV poles.
TypedQuotient iv_sphere(int n) {
    TypedQuotient q;
    q.n = n;
    q.face_count = 4;
    for (std::size_t i = 0; i < 4; ++i)
        q.edges.push_back(quotient_edge(EdgeLetter::h, false, {i, (i + 1) % 4}, 0, 1));
    q.vertices = {{"IV"}, {"IV"}};
    return q;
}

// Bigon bounded by two h_t arcs meeting at two type-VIII corners;
// legal from ambient dimension 4 on.
TypedQuotient viii_bigon(int n) {
    TypedQuotient q;
    q.n = n;
    q.face_count = 1;
    q.edges = {quotient_edge(EdgeLetter::h_t, true, {0}, 0, 1),
               quotient_edge(EdgeLetter::h_t, true, {0}, 0, 1)};
    q.vertices = {{"VIII"}, {"VIII"}};
    return q;
}

void write_quotients() {
    require(validate_typed_quotient(e_disk(3)).valid(), "e-disk must validate");
    require(validate_typed_quotient(v_disk(3)).valid(), "v-disk must validate");
    require(validate_typed_quotient(iv_sphere(4)).valid(), "iv-sphere must validate");
    require(validate_typed_quotient(viii_bigon(4)).valid(), "viii-bigon must validate at n=4");
    require(!validate_typed_quotient(viii_bigon(3)).valid(),
            "viii-bigon must fail validation at n=3");
    emit_doc("e_disk.quotient.json", typed_quotient_to_json(e_disk(3)));
    emit_doc("v_disk.quotient.json", typed_quotient_to_json(v_disk(3)));
    emit_doc("iv_sphere.quotient.json", typed_quotient_to_json(iv_sphere(4)));
    emit_doc("viii_bigon_n4.quotient.json", typed_quotient_to_json(viii_bigon(4)));
    emit_doc("viii_bigon_n3.quotient.json", typed_quotient_to_json(viii_bigon(3)));

    const Lattice z_axis(3, {vec({0, 0, 1})});

    ReductionData disk_data;
    disk_data.lattice = z_axis;
    disk_data.edge_data.resize(1);
    disk_data.edge_data[0].couple = {vec({1, 0, 0}), vec({0, 0, 1})};
    disk_data.monodromy_lift = {
        {RatVec{Rat(1, 2), Rat(0), Rat(1, 3)}, RatVec{Rat(1, 2), Rat(0), Rat(0)}}};
    require(validate_reduction_data(e_disk(3), disk_data).valid(),
            "e-disk reduction data must validate");
    emit_doc("e_disk.reduce.json", reduction_to_json(e_disk(3), disk_data));

    const RatVec half{Rat(0), Rat(0), Rat(1, 2)};
    ReductionData v_data;
    v_data.lattice = z_axis;
    v_data.edge_data.resize(3);
    v_data.edge_data[0].v = vec({1, 0, 0});
    v_data.edge_data[0].isotropy_extras = {half};
    v_data.edge_data[1].v = vec({0, 1, 0});
    v_data.edge_data[1].isotropy_extras = {half};
    v_data.edge_data[2].v = vec({1, 1, 0});
    v_data.vertex_isotropy = {{half}, {half}};
    require(validate_reduction_data(v_disk(3), v_data).valid(),
            "v-disk reduction data must validate");
    emit_doc("v_disk.reduce.json", reduction_to_json(v_disk(3), v_data));

    ReductionData bad_lift = disk_data;
    bad_lift.monodromy_lift[0].reduced = RatVec{Rat(1, 2), Rat(1, 4), Rat(0)};
    require(!validate_reduction_data(e_disk(3), bad_lift).valid(),
            "broken lift must fail validation");
    emit_doc("bad_lift.reduce.json", reduction_to_json(e_disk(3), bad_lift));
}

// ---------------------------------------------------------------------------
// Golden SVGs
// ---------------------------------------------------------------------------

void write_goldens() {
    emit(g_golden_dir, "triangle_fan.svg", fan_svg(polygon_fan_2d(3)));
    emit(g_golden_dir, "octant_tiling.svg", tiling_svg(realized_octant()));
}

}  // namespace

int main(int argc, char** argv) {
    g_fixture_dir = argc > 1 ? fs::path(argv[1]) : fs::path("fixtures");
    g_golden_dir = argc > 2 ? fs::path(argv[2]) : fs::path("tests/golden");
    try {
        fs::create_directories(g_fixture_dir);
        fs::create_directories(g_golden_dir);
        write_fans();
        write_tilings();
        write_monodromy();
        write_marked_graphs();
        write_quotients();
        write_goldens();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
