#pragma once

// JSON interchange: embeddings, cycle lists, crossing diagrams, freeness
// certificates and generation metadata. Rationals always travel as strings.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linfree/constructions.hpp"
#include "linfree/error.hpp"
#include "linfree/freeness.hpp"
#include "linfree/knotlink.hpp"
#include "linfree/spatialgraph.hpp"

namespace linfree {

using json = nlohmann::json;

namespace detail {

inline VertexId id_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<VertexId>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            int v = std::stoi(s, &pos);
            if (pos == s.size()) return v;
        } catch (...) {
        }
    }
    throw parse_error("vertex id must be an integer, got " + j.dump());
}

inline Point3 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw parse_error("point must be an array of 3 rationals, got " + j.dump());
    Point3 p;
    for (int c = 0; c < 3; ++c) {
        const auto& x = j[static_cast<std::size_t>(c)];
        if (x.is_string()) p[c] = parse_rational(x.get_ref<const std::string&>());
        else if (x.is_number_integer()) p[c] = Rational(x.get<long>());
        else throw parse_error("coordinate must be a rational string, got " + x.dump());
    }
    return p;
}

inline json point_to_json(const Point3& p) {
    return json::array({format_rational(p.x), format_rational(p.y), format_rational(p.z)});
}

inline Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw parse_error("edge must be a pair of ids, got " + j.dump());
    return {id_from_json(j[0]), id_from_json(j[1])};
}

inline json edge_to_json(const Edge& e) { return json::array({e.first, e.second}); }

}  // namespace detail

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw parse_error(std::string("malformed JSON: ") + ex.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << text;
}

// {"vertices": {"<id>": ["<num>/<den>", x3], ...}, "edges": [[id, id], ...]}
inline json embedding_to_json(const LinearEmbedding& e) {
    json verts = json::object();
    for (const auto& [v, p] : e.coords) verts[std::to_string(v)] = detail::point_to_json(p);
    json edges = json::array();
    for (const auto& ed : e.graph.edges()) edges.push_back(detail::edge_to_json(ed));
    return {{"vertices", verts}, {"edges", edges}};
}

inline LinearEmbedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw parse_error("embedding must be an object with \"vertices\" and \"edges\"");
    const auto& jv = j.at("vertices");
    const auto& je = j.at("edges");
    if (!jv.is_object()) throw parse_error("\"vertices\" must be an object keyed by vertex id");
    if (!je.is_array()) throw parse_error("\"edges\" must be an array");
    LinearEmbedding e;
    std::vector<VertexId> ids;
    for (auto it = jv.begin(); it != jv.end(); ++it) {
        VertexId v = detail::id_from_json(json(it.key()));
        ids.push_back(v);
        e.coords[v] = detail::point_from_json(it.value());
    }
    std::vector<Edge> edges;
    for (const auto& x : je) edges.push_back(detail::edge_from_json(x));
    e.graph = AbstractGraph(ids, edges);
    return e;
}

inline LinearEmbedding load_embedding(const std::string& path) {
    return embedding_from_json(parse_json_text(read_file(path)));
}

// {"cycles": [[[x, y, z], ...], ...]}
inline json cycles_to_json(const std::vector<PolygonalCycle>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) {
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back(detail::point_to_json(p));
        arr.push_back(pts);
    }
    return {{"cycles", arr}};
}

inline std::vector<PolygonalCycle> cycles_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array())
        throw parse_error("cycle file must be an object with a \"cycles\" array");
    std::vector<PolygonalCycle> out;
    for (const auto& c : j.at("cycles")) {
        if (!c.is_array()) throw parse_error("each cycle must be an array of points");
        PolygonalCycle pc;
        for (const auto& p : c) pc.points.push_back(detail::point_from_json(p));
        if (pc.size() < 3) throw parse_error("a cycle needs at least 3 points");
        out.push_back(std::move(pc));
    }
    return out;
}

inline json diagram_to_json(const Diagram& d) {
    json xs = json::array();
    for (const auto& c : d.crossings)
        xs.push_back({{"segments", {c.seg_a, c.seg_b}},
                      {"point", {format_rational(c.point.x), format_rational(c.point.y)}},
                      {"over", c.over},
                      {"sign", c.sign}});
    return {{"direction", {d.direction.v[0], d.direction.v[1], d.direction.v[2]}},
            {"cycle_offsets", d.offsets},
            {"cycle_sizes", d.sizes},
            {"crossings", xs}};
}

inline json certificate_to_json(const FreenessCertificate& c) {
    json adds = json::array();
    for (const auto& a : c.additions) {
        json tri = json::array();
        for (const auto& t : a.triangles) tri.push_back({t[0], t[1], t[2]});
        json x = {{"chord", detail::edge_to_json(a.chord)}, {"witness_kind", to_string(a.kind)},
                  {"witness_triangles", tri}};
        if (a.neighbor) x["neighbor"] = detail::edge_to_json(*a.neighbor);
        adds.push_back(x);
    }
    json bridges = json::array();
    for (const auto& b : c.bridges) bridges.push_back(detail::edge_to_json(b));
    json out = {{"verdict", "free"},         {"labeling", c.labeling}, {"cycle", c.cycle},
                {"bridges", bridges},        {"additions", adds},      {"justification", c.justification}};
    if (c.classification) {
        json ds = json::array();
        for (const auto& d : c.classification->descriptors) {
            json pe = json::array();
            for (const auto& e : d.piercing_edges) pe.push_back(detail::edge_to_json(e));
            ds.push_back({{"apex", d.apex}, {"hull", d.hull}, {"type", to_string(d.type)}, {"piercing_edges", pe}});
        }
        out["classification"] = {{"graph_class", c.classification->graph_class}, {"descriptors", ds}};
    }
    return out;
}

inline FreenessCertificate certificate_from_json(const json& j) {
    try {
        FreenessCertificate c;
        if (j.value("verdict", std::string("free")) != "free") throw parse_error("certificate verdict is not \"free\"");
        for (const auto& v : j.at("labeling")) c.labeling.push_back(detail::id_from_json(v));
        for (const auto& v : j.at("cycle")) c.cycle.push_back(detail::id_from_json(v));
        for (const auto& b : j.at("bridges")) c.bridges.push_back(detail::edge_from_json(b));
        for (const auto& a : j.at("additions")) {
            ChordAddition add;
            add.chord = detail::edge_from_json(a.at("chord"));
            auto kind = a.at("witness_kind").get<std::string>();
            if (kind == "rescue") add.kind = WitnessKind::Rescue;
            else if (kind == "slide_m1") add.kind = WitnessKind::SlideM1;
            else if (kind == "slide_m2") add.kind = WitnessKind::SlideM2;
            else throw parse_error("unknown witness kind " + kind);
            for (const auto& t : a.at("witness_triangles")) {
                if (!t.is_array() || t.size() != 3) throw parse_error("witness triangle must list 3 ids");
                add.triangles.push_back({detail::id_from_json(t[0]), detail::id_from_json(t[1]), detail::id_from_json(t[2])});
            }
            if (a.contains("neighbor")) add.neighbor = detail::edge_from_json(a.at("neighbor"));
            c.additions.push_back(std::move(add));
        }
        c.justification = j.at("justification").get<std::string>();
        if (j.contains("classification")) {
            SmallClassification cls;
            const auto& jc = j.at("classification");
            cls.graph_class = jc.at("graph_class").get<std::string>();
            for (const auto& d : jc.at("descriptors")) {
                HullDescriptor hd;
                hd.apex = detail::id_from_json(d.at("apex"));
                const auto& h = d.at("hull");
                if (!h.is_array() || h.size() != 4) throw parse_error("hull must list 4 ids");
                for (std::size_t k = 0; k < 4; ++k) hd.hull[k] = detail::id_from_json(h[k]);
                auto type = d.at("type").get<std::string>();
                if (type == to_string(HullType::ApexInside)) hd.type = HullType::ApexInside;
                else if (type == to_string(HullType::OutsideNoEdgeMeets)) hd.type = HullType::OutsideNoEdgeMeets;
                else if (type == to_string(HullType::OutsideOneEdgeMeets)) hd.type = HullType::OutsideOneEdgeMeets;
                else throw parse_error("unknown hull type " + type);
                for (const auto& e : d.at("piercing_edges")) hd.piercing_edges.push_back(detail::edge_from_json(e));
                cls.descriptors.push_back(std::move(hd));
            }
            c.classification = std::move(cls);
        }
        return c;
    } catch (const json::exception& ex) {
        throw parse_error(std::string("malformed certificate: ") + ex.what());
    }
}

inline json generation_to_json(const std::string& family, const GeneratedInstance& g) {
    json out = embedding_to_json(g.embedding);
    const auto& r = g.report;
    json ver = {{"valid", r.valid},
                {"vertex_count", r.vertex_count},
                {"edge_count", r.edge_count},
                {"designated_cycle", r.designated_cycle},
                {"determinant", r.determinant.get_str()}};
    if (r.min_valency) ver["min_valency"] = *r.min_valency;
    if (r.vertex_connectivity) ver["vertex_connectivity"] = *r.vertex_connectivity;
    out["metadata"] = {{"family", family}, {"params", r.params}, {"verification", ver}};
    return out;
}

}  // namespace linfree
