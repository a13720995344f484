#pragma once

// Independent certificate checker. It shares only parsing and embedding
// validation with the certifier; every geometric fact is recomputed here by
// solving the linear systems directly (Cramer's rule) instead of through the
// orientation predicates the certifier uses.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linfree/freeness.hpp"
#include "linfree/spatialgraph.hpp"

namespace linfree {

struct RecheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

namespace recheck_detail {

inline Rational det3(const Point3& a, const Point3& b, const Point3& c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) + a.z * (b.x * c.y - b.y * c.x);
}

// Solve s*u + t*v + w*x = rhs for (s, t, w); nullopt when singular.
inline std::optional<std::array<Rational, 3>> solve3(const Point3& u, const Point3& v, const Point3& x,
                                                     const Point3& rhs) {
    Rational d = det3(u, v, x);
    if (d == 0) return std::nullopt;
    return std::array<Rational, 3>{det3(rhs, v, x) / d, det3(u, rhs, x) / d, det3(u, v, rhs) / d};
}

// Closed contact of the segment ab with the closed triangle pqr, excluding
// contact at the segment's own endpoints. Counts boundary touches too.
inline bool segment_meets_triangle(const Point3& a, const Point3& b, const Point3& p, const Point3& q,
                                   const Point3& r) {
    Point3 nq = p - q, nr = p - r;  // -(q - p), -(r - p)
    auto sol = solve3(b - a, nq, nr, p - a);
    if (!sol) return false;
    const auto& [s, u, v] = *sol;
    return s > 0 && s < 1 && u >= 0 && v >= 0 && u + v <= 1;
}

// Open-interior crossing only (used for descriptor recomputation).
inline bool segment_crosses_open_triangle(const Point3& a, const Point3& b, const Point3& p, const Point3& q,
                                          const Point3& r) {
    auto sol = solve3(b - a, p - q, p - r, p - a);
    if (!sol) return false;
    const auto& [s, u, v] = *sol;
    return s > 0 && s < 1 && u > 0 && v > 0 && u + v < 1;
}

inline bool strictly_inside_tetrahedron(const Point3& x, const Point3& a, const Point3& b, const Point3& c,
                                        const Point3& d) {
    auto sol = solve3(b - a, c - a, d - a, x - a);
    if (!sol) return false;
    const auto& [l1, l2, l3] = *sol;
    return l1 > 0 && l2 > 0 && l3 > 0 && l1 + l2 + l3 < 1;
}

// Trivial: no segment between two of the given points, other than the
// triangle's own sides, touches the closed triangle away from its endpoints.
inline bool triangle_trivial(const std::map<VertexId, Point3>& pts, const VertexTriple& t) {
    const Point3 &p = pts.at(t[0]), &q = pts.at(t[1]), &r = pts.at(t[2]);
    std::vector<VertexId> ids;
    for (const auto& [v, _] : pts) ids.push_back(v);
    auto in_t = [&](VertexId v) { return v == t[0] || v == t[1] || v == t[2]; };
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (in_t(ids[i]) && in_t(ids[j])) continue;
            if (segment_meets_triangle(pts.at(ids[i]), pts.at(ids[j]), p, q, r)) return false;
        }
    return true;
}

// Linking number of two triangles as the signed count of the second's sides
// crossing the first's disk.
inline long triangle_linking(const std::array<Point3, 3>& t1, const std::array<Point3, 3>& t2) {
    Point3 normal = cross(t1[1] - t1[0], t1[2] - t1[1]);
    long lk = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        const Point3& a = t2[k];
        const Point3& b = t2[(k + 1) % 3];
        if (segment_crosses_open_triangle(a, b, t1[0], t1[1], t1[2])) lk += sign(dot(b - a, normal));
    }
    return lk;
}

inline int side(const Point3& i, const Point3& j, const Point3& k, const Point3& p) {
    return sign(det3(j - i, k - j, p - j));
}

}  // namespace recheck_detail

inline RecheckReport recheck_certificate(const LinearEmbedding& e, const FreenessCertificate& c) {
    using namespace recheck_detail;
    RecheckReport rep;
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
    const AbstractGraph& g = e.graph;
    auto vr = validate_embedding(e);
    if (!vr.valid()) {
        fail("embedding invalid: " + vr.violations.front());
        return rep;
    }
    const std::size_t n = g.order();
    if (n < 4 || n > 6) {
        fail("vertex count outside 4..6");
        return rep;
    }
    if (!g.is_connected()) fail("graph not connected");
    for (auto v : g.vertices())
        if (g.degree(v) < 3) fail("vertex " + std::to_string(v) + " has valency below 3");
    if (!rep.ok()) return rep;
    const bool complete = g.edges().size() == n * (n - 1) / 2;

    if (n <= 5) {
        if (!c.additions.empty()) fail("small-graph certificate carries chord additions");
        if (complete) {
            if (c.justification != kCompleteGraphAxiom) fail("complete graph must cite the complete-graph axiom");
            return rep;
        }
        if (c.justification != kSmallClassification) fail("non-complete five-vertex graph must carry a classification");
        if (!c.classification || c.classification->descriptors.empty()) {
            fail("classification missing");
            return rep;
        }
        std::size_t d3 = 0;
        for (auto v : g.vertices()) d3 += g.degree(v) == 3;
        std::string expect = d3 == 2 ? "K5-minus-edge" : (d3 == 4 ? "wheel-W4" : "?");
        if (c.classification->graph_class != expect)
            fail("graph class " + c.classification->graph_class + " does not match valencies");
        for (const auto& d : c.classification->descriptors) {
            if (!g.contains(d.apex)) {
                fail("descriptor apex is not a vertex");
                continue;
            }
            std::vector<VertexId> hull(d.hull.begin(), d.hull.end()), rest;
            std::sort(hull.begin(), hull.end());
            for (auto v : g.vertices())
                if (v != d.apex) rest.push_back(v);
            if (hull != rest) {
                fail("descriptor hull is not the complement of its apex");
                continue;
            }
            std::array<Point3, 4> h{e.at(hull[0]), e.at(hull[1]), e.at(hull[2]), e.at(hull[3])};
            const Point3& v = e.at(d.apex);
            HullType type;
            std::vector<Edge> piercing;
            if (strictly_inside_tetrahedron(v, h[0], h[1], h[2], h[3])) {
                type = HullType::ApexInside;
            } else {
                for (std::size_t k = 0; k < 4; ++k) {
                    if (!g.has_edge(d.apex, hull[k])) continue;
                    std::vector<Point3> f;
                    for (std::size_t j = 0; j < 4; ++j)
                        if (j != k) f.push_back(h[j]);
                    if (segment_crosses_open_triangle(v, h[k], f[0], f[1], f[2]))
                        piercing.push_back(make_edge(d.apex, hull[k]));
                }
                if (piercing.size() > 1) {
                    fail("apex has more than one edge meeting the hull");
                    continue;
                }
                type = piercing.empty() ? HullType::OutsideNoEdgeMeets : HullType::OutsideOneEdgeMeets;
            }
            auto claimed = d.piercing_edges;
            std::sort(claimed.begin(), claimed.end());
            if (type != d.type || piercing != claimed)
                fail(std::string("hull type mismatch at apex ") + std::to_string(d.apex) + ": recomputed " +
                     to_string(type));
        }
        return rep;
    }

    // six vertices
    std::map<VertexId, Point3> pts;
    for (auto v : g.vertices()) pts[v] = e.at(v);
    if (c.justification != kCompleteGraphAxiom) fail("six-vertex certificate must end in the complete-graph axiom");

    {
        auto sorted = c.labeling;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.vertices()) {
            fail("labeling is not a permutation of the vertices");
        } else {
            auto L = [&](int l) -> const Point3& { return pts.at(c.labeling[static_cast<std::size_t>(l - 1)]); };
            if (std::labs(triangle_linking({L(1), L(2), L(3)}, {L(4), L(5), L(6)})) != 1)
                fail("labeling: triangles 123 and 456 are not Hopf linked");
            if (!segment_crosses_open_triangle(L(4), L(5), L(1), L(2), L(3))) fail("labeling: 45 misses triangle 123");
            if (!segment_crosses_open_triangle(L(1), L(3), L(4), L(5), L(6))) fail("labeling: 13 misses triangle 456");
            if (!(side(L(1), L(3), L(2), L(4)) > 0 && side(L(1), L(3), L(2), L(6)) > 0 &&
                  side(L(1), L(3), L(2), L(5)) < 0))
                fail("labeling: half-space condition for 132 fails");
            if (!(side(L(1), L(3), L(4), L(6)) > 0 && side(L(1), L(3), L(4), L(2)) < 0 &&
                  side(L(1), L(3), L(4), L(5)) < 0))
                fail("labeling: half-space condition for 134 fails");
        }
    }

    const auto& cyc = c.cycle;
    {
        auto sorted = cyc;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.vertices()) {
            fail("cycle does not visit every vertex exactly once");
            return rep;
        }
    }
    std::set<Edge> cycle_edges;
    for (std::size_t i = 0; i < 6; ++i) {
        Edge ed = make_edge(cyc[i], cyc[(i + 1) % 6]);
        if (!g.has_edge(ed.first, ed.second)) fail("cycle step is not a graph edge");
        cycle_edges.insert(ed);
    }
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < 6; ++i) pos[cyc[i]] = i;
    auto cdist = [&](VertexId a, VertexId b) {
        std::size_t d = (pos[a] + 6 - pos[b]) % 6;
        return std::min(d, 6 - d);
    };

    std::set<Edge> expected_bridges, present;
    for (const auto& ed : g.edges())
        if (!cycle_edges.count(ed)) expected_bridges.insert(ed);
    for (const auto& b : c.bridges) present.insert(make_edge(b.first, b.second));
    if (present != expected_bridges) fail("bridges are not exactly the graph's chords off the cycle");

    for (std::size_t k = 0; k < c.additions.size(); ++k) {
        const auto& a = c.additions[k];
        std::string where = "addition " + std::to_string(k) + ": ";
        Edge ch = make_edge(a.chord.first, a.chord.second);
        if (!pts.count(ch.first) || !pts.count(ch.second) || ch.first == ch.second) {
            fail(where + "chord endpoints invalid");
            continue;
        }
        if (cycle_edges.count(ch)) fail(where + "chord lies on the cycle");
        if (present.count(ch)) fail(where + "chord already present");
        for (const auto& t : a.triangles)
            if (!pts.count(t[0]) || !pts.count(t[1]) || !pts.count(t[2]) || !triangle_trivial(pts, t))
                fail(where + "witness triangle is not trivial");
        auto tri = [](VertexId x, VertexId y, VertexId z) { return make_vertex_triple(x, y, z); };
        if (a.kind == WitnessKind::Rescue) {
            if (cdist(ch.first, ch.second) != 2 || a.triangles.size() != 1) {
                fail(where + "rescue chord does not span a 2-edge arc");
            } else {
                std::size_t pa = pos[ch.first], pb = pos[ch.second];
                VertexId m = (pa + 2) % 6 == pb ? cyc[(pa + 1) % 6] : cyc[(pb + 1) % 6];
                if (a.triangles[0] != tri(ch.first, m, ch.second)) fail(where + "rescue triangle does not match arc");
            }
        } else {
            if (!a.neighbor) {
                fail(where + "slide without neighbour chord");
                continue;
            }
            Edge nb = make_edge(a.neighbor->first, a.neighbor->second);
            if (!present.count(nb)) fail(where + "neighbour chord not yet present");
            VertexId x;
            if (ch.first == nb.first || ch.first == nb.second) x = ch.first;
            else if (ch.second == nb.first || ch.second == nb.second) x = ch.second;
            else {
                fail(where + "slide chords share no vertex");
                continue;
            }
            VertexId va = ch.first == x ? ch.second : ch.first;
            VertexId vb = nb.first == x ? nb.second : nb.first;
            if (a.kind == WitnessKind::SlideM1) {
                if (cdist(va, vb) != 1) fail(where + "one-edge slide endpoints not adjacent on the cycle");
                if (a.triangles.size() != 1 || a.triangles[0] != tri(va, vb, x))
                    fail(where + "one-edge slide triangle mismatch");
            } else {
                if (cdist(va, vb) != 2) {
                    fail(where + "two-edge slide endpoints not two apart on the cycle");
                } else {
                    std::size_t pa = pos[va], pb = pos[vb];
                    VertexId m = (pa + 2) % 6 == pb ? cyc[(pa + 1) % 6] : cyc[(pb + 1) % 6];
                    if (m == x) fail(where + "two-edge slide apex lies on its own arc");
                    if (a.triangles.size() != 2 || a.triangles[0] != tri(va, m, vb) || a.triangles[1] != tri(va, vb, x))
                        fail(where + "two-edge slide triangles mismatch");
                }
            }
        }
        present.insert(ch);
    }
    std::size_t total = cycle_edges.size() + present.size();
    if (total != 15) fail("additions do not complete the graph to K6");
    return rep;
}

}  // namespace linfree
