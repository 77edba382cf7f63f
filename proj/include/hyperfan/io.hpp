#pragma once

/**
 * @file io.hpp
 * @brief Canonical JSON document format ("hyperfan/1") for every data kind.
 *
 * Every document is a JSON object with a "format" header and a "kind" tag.
 * Rationals are serialized as strings "p/q" (or "p") so that exactness
 * survives the round trip; JSON numbers in rational positions are rejected
 * at parse time.  All indices are 0-based unsigned integers.  Serialization
 * is canonical: keys are emitted in sorted order with two-space indentation,
 * so serialize(parse(serialize(x))) == serialize(x) byte for byte.
 *
 * Malformed documents throw std::invalid_argument with a description of the
 * offending field.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fan.hpp"
#include "lattice.hpp"
#include "marked_graph.hpp"
#include "monodromy.hpp"
#include "rational.hpp"
#include "tiling.hpp"
#include "typed_quotient.hpp"

namespace hyperfan {

using json = nlohmann::json;

inline constexpr const char* kFormatTag = "hyperfan/1";

// ---------------------------------------------------------------------------
// Strict field access
// ---------------------------------------------------------------------------

namespace io_detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("document: missing field \"") + key + "\"");
    return j.at(key);
}

inline std::size_t get_index(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw std::invalid_argument(std::string(what) + " must be an unsigned integer");
    return j.get<std::size_t>();
}

inline int get_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<int>();
}

inline bool get_bool(const json& j, const char* what) {
    if (!j.is_boolean()) throw std::invalid_argument(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

inline std::string get_string(const json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline const json& get_array(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    return j;
}

}  // namespace io_detail

// ---------------------------------------------------------------------------
// Rationals, vectors, lattices, walks
// ---------------------------------------------------------------------------

inline json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument(
            "rationals must be strings like \"3/4\"; JSON numbers are not accepted");
    return parse_rat(j.get<std::string>());
}

inline json rat_vec_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(rat_to_json(r));
    return out;
}

inline RatVec rat_vec_from_json(const json& j, const char* what = "vector") {
    io_detail::get_array(j, what);
    RatVec out;
    for (const json& e : j) out.push_back(rat_from_json(e));
    return out;
}

inline json lattice_to_json(const Lattice& L) {
    json out;
    out["ambient_dim"] = L.ambient_dim;
    json basis = json::array();
    for (const RatVec& b : L.basis) basis.push_back(rat_vec_to_json(b));
    out["basis"] = basis;
    return out;
}

inline Lattice lattice_from_json(const json& j) {
    const std::size_t n = io_detail::get_index(io_detail::field(j, "ambient_dim"), "ambient_dim");
    std::vector<RatVec> basis;
    for (const json& b : io_detail::get_array(io_detail::field(j, "basis"), "basis"))
        basis.push_back(rat_vec_from_json(b, "basis vector"));
    return Lattice(n, basis);
}

inline json walk_to_json(const Walk& walk) {
    json out = json::array();
    for (const Step& s : walk) {
        json step;
        step["edge"] = s.edge;
        step["dir"] = s.dir;
        out.push_back(step);
    }
    return out;
}

inline Walk walk_from_json(const json& j, const char* what = "walk") {
    io_detail::get_array(j, what);
    Walk out;
    for (const json& e : j) {
        Step s;
        s.edge = io_detail::get_index(io_detail::field(e, "edge"), "step edge");
        s.dir = io_detail::get_int(io_detail::field(e, "dir"), "step dir");
        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Document envelope
// ---------------------------------------------------------------------------

inline json make_document(const std::string& kind) {
    json j;
    j["format"] = kFormatTag;
    j["kind"] = kind;
    return j;
}

/// Verifies the format header and the document kind.
inline void check_document(const json& j, const std::string& expected_kind) {
    if (!j.is_object()) throw std::invalid_argument("document: top level must be an object");
    const std::string fmt = io_detail::get_string(io_detail::field(j, "format"), "format");
    if (fmt != kFormatTag)
        throw std::invalid_argument("document: unsupported format \"" + fmt + "\", expected \"" +
                                    kFormatTag + "\"");
    const std::string kind = io_detail::get_string(io_detail::field(j, "kind"), "kind");
    if (kind != expected_kind)
        throw std::invalid_argument("document: kind \"" + kind + "\" where \"" + expected_kind +
                                    "\" was expected");
}

/// Kind tag of a parsed document (for dispatching, e.g. by the plotter).
inline std::string document_kind(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("document: top level must be an object");
    return io_detail::get_string(io_detail::field(j, "kind"), "kind");
}

/// Canonical text of a document: sorted keys, two-space indent, newline.
inline std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

/// Parses document text; malformed JSON throws std::invalid_argument.
inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("document: not valid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Fans
// ---------------------------------------------------------------------------

inline json fan_to_json(const Fan& fan) {
    json j = make_document("fan");
    j["ambient_dim"] = fan.ambient_dim;
    json rays = json::array();
    for (const RatVec& r : fan.rays) rays.push_back(rat_vec_to_json(r));
    j["rays"] = rays;
    json cones = json::array();
    for (const auto& c : fan.maximal_cones) {
        json cone = json::array();
        for (std::size_t i : c) cone.push_back(i);
        cones.push_back(cone);
    }
    j["maximal_cones"] = cones;
    return j;
}

inline Fan fan_from_json(const json& j) {
    check_document(j, "fan");
    Fan fan;
    fan.ambient_dim = io_detail::get_index(io_detail::field(j, "ambient_dim"), "ambient_dim");
    for (const json& r : io_detail::get_array(io_detail::field(j, "rays"), "rays"))
        fan.rays.push_back(rat_vec_from_json(r, "ray"));
    for (const json& c :
         io_detail::get_array(io_detail::field(j, "maximal_cones"), "maximal_cones")) {
        std::vector<std::size_t> cone;
        for (const json& i : io_detail::get_array(c, "cone"))
            cone.push_back(io_detail::get_index(i, "cone ray index"));
        fan.maximal_cones.push_back(cone);
    }
    return fan;
}

// ---------------------------------------------------------------------------
// Tilings
// ---------------------------------------------------------------------------

inline json tiling_to_json(const Tiling2D& t) {
    json j = make_document("tiling2d");
    j["vertex_count"] = t.vertex_count;
    json curves = json::array();
    for (std::size_t c = 0; c < t.curve_count; ++c) {
        json curve;
        if (c < t.curve_vectors.size() && t.curve_vectors[c].has_value())
            curve["vector"] = rat_vec_to_json(*t.curve_vectors[c]);
        else
            curve["vector"] = nullptr;
        curves.push_back(curve);
    }
    j["curves"] = curves;
    json edges = json::array();
    for (const Tiling2D::Edge& e : t.edges) {
        json edge;
        edge["curve"] = e.curve;
        edge["ends"] = json::array({e.ends[0], e.ends[1]});
        edges.push_back(edge);
    }
    j["edges"] = edges;
    json faces = json::array();
    for (const Tiling2D::Face& f : t.faces) {
        json face;
        face["boundary"] = walk_to_json(f.boundary);
        faces.push_back(face);
    }
    j["faces"] = faces;
    return j;
}

inline Tiling2D tiling_from_json(const json& j) {
    check_document(j, "tiling2d");
    Tiling2D t;
    t.vertex_count = io_detail::get_index(io_detail::field(j, "vertex_count"), "vertex_count");
    for (const json& c : io_detail::get_array(io_detail::field(j, "curves"), "curves")) {
        const json& v = io_detail::field(c, "vector");
        if (v.is_null())
            t.curve_vectors.push_back(std::nullopt);
        else
            t.curve_vectors.push_back(rat_vec_from_json(v, "curve vector"));
    }
    t.curve_count = t.curve_vectors.size();
    for (const json& e : io_detail::get_array(io_detail::field(j, "edges"), "edges")) {
        Tiling2D::Edge edge;
        edge.curve = io_detail::get_index(io_detail::field(e, "curve"), "edge curve");
        const json& ends = io_detail::get_array(io_detail::field(e, "ends"), "edge ends");
        if (ends.size() != 2) throw std::invalid_argument("edge ends must list 2 vertices");
        edge.ends[0] = io_detail::get_index(ends[0], "edge end");
        edge.ends[1] = io_detail::get_index(ends[1], "edge end");
        t.edges.push_back(edge);
    }
    for (const json& f : io_detail::get_array(io_detail::field(j, "faces"), "faces")) {
        Tiling2D::Face face;
        face.boundary = walk_from_json(io_detail::field(f, "boundary"), "face boundary");
        t.faces.push_back(face);
    }
    return t;
}

// ---------------------------------------------------------------------------
// Monodromy specifications
// ---------------------------------------------------------------------------

inline json monodromy_to_json(const MonodromySpec& spec, const PointData& points = {}) {
    json j = make_document("monodromy-spec");
    j["vertex_count"] = spec.graph.vertex_count;
    json edges = json::array();
    for (const SkeletonEdge& e : spec.graph.edges) {
        json edge;
        edge["ends"] = json::array({e.ends[0], e.ends[1]});
        edge["twisted"] = e.twisted;
        edges.push_back(edge);
    }
    j["edges"] = edges;
    json tree = json::array();
    for (std::size_t t : spec.graph.spanning_tree) tree.push_back(t);
    j["spanning_tree"] = tree;
    j["lattice"] = lattice_to_json(spec.lattice);
    json values = json::array();
    for (const QuotientElement& v : spec.values) values.push_back(rat_vec_to_json(v.rep));
    j["values"] = values;
    json m1 = json::array();
    for (const M1Point& p : points.m1) {
        json point;
        point["loop"] = walk_to_json(p.loop);
        m1.push_back(point);
    }
    json m2 = json::array();
    for (const M2Point& p : points.m2) {
        json point;
        point["loop"] = walk_to_json(p.loop);
        point["w"] = rat_vec_to_json(p.w);
        m2.push_back(point);
    }
    j["points"] = json{{"m1", m1}, {"m2", m2}};
    return j;
}

inline std::pair<MonodromySpec, PointData> monodromy_from_json(const json& j) {
    check_document(j, "monodromy-spec");
    MonodromySpec spec;
    spec.graph.vertex_count =
        io_detail::get_index(io_detail::field(j, "vertex_count"), "vertex_count");
    for (const json& e : io_detail::get_array(io_detail::field(j, "edges"), "edges")) {
        SkeletonEdge edge;
        const json& ends = io_detail::get_array(io_detail::field(e, "ends"), "edge ends");
        if (ends.size() != 2) throw std::invalid_argument("edge ends must list 2 vertices");
        edge.ends[0] = io_detail::get_index(ends[0], "edge end");
        edge.ends[1] = io_detail::get_index(ends[1], "edge end");
        edge.twisted = io_detail::get_bool(io_detail::field(e, "twisted"), "edge twisted");
        spec.graph.edges.push_back(edge);
    }
    for (const json& t :
         io_detail::get_array(io_detail::field(j, "spanning_tree"), "spanning_tree"))
        spec.graph.spanning_tree.push_back(io_detail::get_index(t, "tree edge"));
    spec.lattice = lattice_from_json(io_detail::field(j, "lattice"));
    for (const json& v : io_detail::get_array(io_detail::field(j, "values"), "values"))
        spec.values.push_back(reduce_mod_lattice(rat_vec_from_json(v, "value"), spec.lattice));
    PointData points;
    if (j.contains("points")) {
        const json& p = j.at("points");
        if (p.contains("m1"))
            for (const json& q : io_detail::get_array(p.at("m1"), "m1 points")) {
                M1Point point;
                point.loop = walk_from_json(io_detail::field(q, "loop"), "m1 loop");
                points.m1.push_back(point);
            }
        if (p.contains("m2"))
            for (const json& q : io_detail::get_array(p.at("m2"), "m2 points")) {
                M2Point point;
                point.loop = walk_from_json(io_detail::field(q, "loop"), "m2 loop");
                point.w = rat_vec_from_json(io_detail::field(q, "w"), "m2 twist element");
                points.m2.push_back(point);
            }
    }
    return {spec, points};
}

// ---------------------------------------------------------------------------
// Marked graphs
// ---------------------------------------------------------------------------

inline json marked_graph_to_json(const MarkedGraph& g, int ambient_dim) {
    json j = make_document("marked-graph");
    j["ambient_dim"] = ambient_dim;
    j["shape"] = g.shape == GraphShape::circle ? "circle" : "interval";
    j["lattice"] = lattice_to_json(g.lattice);
    if (g.monodromy.has_value())
        j["monodromy"] = rat_vec_to_json(*g.monodromy);
    else
        j["monodromy"] = nullptr;
    json vertices = json::array();
    for (const Mark& m : g.vertices) {
        json mark;
        mark["v"] = rat_vec_to_json(m.v);
        if (m.is_couple)
            mark["w"] = rat_vec_to_json(m.w);
        else
            mark["w"] = nullptr;
        vertices.push_back(mark);
    }
    j["vertices"] = vertices;
    return j;
}

inline std::pair<MarkedGraph, int> marked_graph_from_json(const json& j) {
    check_document(j, "marked-graph");
    MarkedGraph g;
    const int n = io_detail::get_int(io_detail::field(j, "ambient_dim"), "ambient_dim");
    const std::string shape = io_detail::get_string(io_detail::field(j, "shape"), "shape");
    if (shape == "circle")
        g.shape = GraphShape::circle;
    else if (shape == "interval")
        g.shape = GraphShape::interval;
    else
        throw std::invalid_argument("shape must be \"circle\" or \"interval\", got \"" + shape +
                                    "\"");
    g.lattice = lattice_from_json(io_detail::field(j, "lattice"));
    const json& mono = io_detail::field(j, "monodromy");
    if (!mono.is_null()) g.monodromy = rat_vec_from_json(mono, "monodromy");
    for (const json& m : io_detail::get_array(io_detail::field(j, "vertices"), "vertices")) {
        Mark mark;
        mark.v = rat_vec_from_json(io_detail::field(m, "v"), "mark vector");
        const json& w = io_detail::field(m, "w");
        if (!w.is_null()) {
            mark.is_couple = true;
            mark.w = rat_vec_from_json(w, "mark couple vector");
        }
        g.vertices.push_back(mark);
    }
    return {g, n};
}

// ---------------------------------------------------------------------------
// Typed quotients and reduction data
// ---------------------------------------------------------------------------

namespace io_detail {

inline json typed_quotient_body(const TypedQuotient& q) {
    json j;
    j["n"] = q.n;
    j["face_count"] = q.face_count;
    json edges = json::array();
    for (const TypedQuotient::Edge& e : q.edges) {
        json edge;
        edge["letter"] = edge_letter_name(e.letter);
        edge["boundary"] = e.boundary;
        json sides = json::array();
        for (std::size_t f : e.face_sides) sides.push_back(f);
        edge["face_sides"] = sides;
        json ends = json::array();
        for (int i : {0, 1}) {
            if (e.ends[i].has_value())
                ends.push_back(*e.ends[i]);
            else
                ends.push_back(nullptr);
        }
        edge["ends"] = ends;
        edges.push_back(edge);
    }
    j["edges"] = edges;
    json vertices = json::array();
    for (const TypedQuotient::Vertex& v : q.vertices) {
        json vert;
        vert["type"] = v.type;
        vertices.push_back(vert);
    }
    j["vertices"] = vertices;
    return j;
}

inline TypedQuotient typed_quotient_from_body(const json& j) {
    TypedQuotient q;
    q.n = get_int(field(j, "n"), "n");
    q.face_count = get_index(field(j, "face_count"), "face_count");
    for (const json& e : get_array(field(j, "edges"), "edges")) {
        TypedQuotient::Edge edge;
        const std::string letter = get_string(field(e, "letter"), "edge letter");
        if (letter == "h")
            edge.letter = EdgeLetter::h;
        else if (letter == "h_t")
            edge.letter = EdgeLetter::h_t;
        else if (letter == "e")
            edge.letter = EdgeLetter::e;
        else
            throw std::invalid_argument("edge letter must be h, h_t or e, got \"" + letter + "\"");
        edge.boundary = get_bool(field(e, "boundary"), "edge boundary");
        for (const json& f : get_array(field(e, "face_sides"), "face_sides"))
            edge.face_sides.push_back(get_index(f, "face side"));
        const json& ends = get_array(field(e, "ends"), "edge ends");
        if (ends.size() != 2) throw std::invalid_argument("edge ends must list 2 entries");
        for (int i : {0, 1})
            if (!ends[i].is_null()) edge.ends[i] = get_index(ends[i], "edge end");
        q.edges.push_back(edge);
    }
    for (const json& v : get_array(field(j, "vertices"), "vertices")) {
        TypedQuotient::Vertex vert;
        vert.type = get_string(field(v, "type"), "vertex type");
        q.vertices.push_back(vert);
    }
    return q;
}

}  // namespace io_detail

inline json typed_quotient_to_json(const TypedQuotient& q) {
    json j = make_document("typed-quotient");
    j.update(io_detail::typed_quotient_body(q));
    return j;
}

inline TypedQuotient typed_quotient_from_json(const json& j) {
    check_document(j, "typed-quotient");
    return io_detail::typed_quotient_from_body(j);
}

inline json reduction_to_json(const TypedQuotient& q, const ReductionData& d) {
    json j = make_document("reduction-data");
    j["quotient"] = io_detail::typed_quotient_body(q);
    j["lattice"] = lattice_to_json(d.lattice);
    json edge_data = json::array();
    for (const ReductionData::EdgeDatum& e : d.edge_data) {
        json datum;
        if (e.v.has_value())
            datum["v"] = rat_vec_to_json(*e.v);
        else
            datum["v"] = nullptr;
        if (e.couple.has_value())
            datum["couple"] = json{{"v", rat_vec_to_json(e.couple->first)},
                                   {"w", rat_vec_to_json(e.couple->second)}};
        else
            datum["couple"] = nullptr;
        json extras = json::array();
        for (const RatVec& x : e.isotropy_extras) extras.push_back(rat_vec_to_json(x));
        datum["isotropy"] = extras;
        edge_data.push_back(datum);
    }
    j["edge_data"] = edge_data;
    json vertex_isotropy = json::array();
    for (const auto& vi : d.vertex_isotropy) {
        json extras = json::array();
        for (const RatVec& x : vi) extras.push_back(rat_vec_to_json(x));
        vertex_isotropy.push_back(extras);
    }
    j["vertex_isotropy"] = vertex_isotropy;
    json lifts = json::array();
    for (const ReductionData::LiftPair& p : d.monodromy_lift) {
        json lift;
        lift["lifted"] = rat_vec_to_json(p.lifted);
        lift["reduced"] = rat_vec_to_json(p.reduced);
        lifts.push_back(lift);
    }
    j["monodromy_lift"] = lifts;
    return j;
}

inline std::pair<TypedQuotient, ReductionData> reduction_from_json(const json& j) {
    check_document(j, "reduction-data");
    TypedQuotient q = io_detail::typed_quotient_from_body(io_detail::field(j, "quotient"));
    ReductionData d;
    d.lattice = lattice_from_json(io_detail::field(j, "lattice"));
    for (const json& e : io_detail::get_array(io_detail::field(j, "edge_data"), "edge_data")) {
        ReductionData::EdgeDatum datum;
        const json& v = io_detail::field(e, "v");
        if (!v.is_null()) datum.v = rat_vec_from_json(v, "edge vector");
        const json& couple = io_detail::field(e, "couple");
        if (!couple.is_null())
            datum.couple = std::make_pair(
                rat_vec_from_json(io_detail::field(couple, "v"), "couple vector"),
                rat_vec_from_json(io_detail::field(couple, "w"), "couple vector"));
        for (const json& x : io_detail::get_array(io_detail::field(e, "isotropy"), "isotropy"))
            datum.isotropy_extras.push_back(rat_vec_from_json(x, "isotropy generator"));
        d.edge_data.push_back(datum);
    }
    for (const json& vi :
         io_detail::get_array(io_detail::field(j, "vertex_isotropy"), "vertex_isotropy")) {
        std::vector<RatVec> extras;
        for (const json& x : io_detail::get_array(vi, "vertex isotropy"))
            extras.push_back(rat_vec_from_json(x, "isotropy generator"));
        d.vertex_isotropy.push_back(extras);
    }
    for (const json& p :
         io_detail::get_array(io_detail::field(j, "monodromy_lift"), "monodromy_lift")) {
        ReductionData::LiftPair lift;
        lift.lifted = rat_vec_from_json(io_detail::field(p, "lifted"), "lifted value");
        lift.reduced = rat_vec_from_json(io_detail::field(p, "reduced"), "reduced value");
        d.monodromy_lift.push_back(lift);
    }
    return {q, d};
}

// ---------------------------------------------------------------------------
// Isomorphism candidates
// ---------------------------------------------------------------------------

/// The contents of a tiling-iso document: the candidate identification plus
/// optional monodromy specifications for both sides.
struct IsoDocument {
    IsoCandidate candidate;
    std::optional<MonodromySpec> mono_a;
    std::optional<MonodromySpec> mono_b;
};

inline json iso_to_json(const IsoDocument& doc) {
    json j = make_document("tiling-iso");
    const auto index_array = [](const std::vector<std::size_t>& v) {
        json a = json::array();
        for (std::size_t i : v) a.push_back(i);
        return a;
    };
    j["face_map"] = index_array(doc.candidate.face_map);
    j["edge_map"] = index_array(doc.candidate.edge_map);
    j["curve_map"] = index_array(doc.candidate.curve_map);
    json linear = json::array();
    for (const RatVec& row : doc.candidate.linear) linear.push_back(rat_vec_to_json(row));
    j["linear"] = linear;
    if (doc.mono_a.has_value())
        j["monodromy_a"] = monodromy_to_json(*doc.mono_a);
    else
        j["monodromy_a"] = nullptr;
    if (doc.mono_b.has_value())
        j["monodromy_b"] = monodromy_to_json(*doc.mono_b);
    else
        j["monodromy_b"] = nullptr;
    return j;
}

inline IsoDocument iso_from_json(const json& j) {
    check_document(j, "tiling-iso");
    IsoDocument doc;
    const auto index_vector = [&](const char* key) {
        std::vector<std::size_t> out;
        for (const json& i : io_detail::get_array(io_detail::field(j, key), key))
            out.push_back(io_detail::get_index(i, key));
        return out;
    };
    doc.candidate.face_map = index_vector("face_map");
    doc.candidate.edge_map = index_vector("edge_map");
    doc.candidate.curve_map = index_vector("curve_map");
    for (const json& row : io_detail::get_array(io_detail::field(j, "linear"), "linear"))
        doc.candidate.linear.push_back(rat_vec_from_json(row, "linear row"));
    const json& ma = io_detail::field(j, "monodromy_a");
    if (!ma.is_null()) doc.mono_a = monodromy_from_json(ma).first;
    const json& mb = io_detail::field(j, "monodromy_b");
    if (!mb.is_null()) doc.mono_b = monodromy_from_json(mb).first;
    return doc;
}

}  // namespace hyperfan
