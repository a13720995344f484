#pragma once

// Freeness certification for linear embeddings of graphs with at most six
// vertices and minimum valency three.
//
// Six vertices: the embedding is extended to a linear K6, relabeled so that
// a Hopf-linked triangle pair sits in a fixed position, and the triangles
// whose interiors no segment meets ("trivial" triangles) are computed. For a
// Hamiltonian cycle P of the graph the nine chords of K6 off P form the
// isotopy graph: two chords are adjacent when a trivial disk slides one onto
// the other along one or two edges of P. Chords are then added one at a time,
// each boundary-parallel in the current complement, until the graph becomes
// K6, whose linear embeddings have free complement. The recorded additions
// form the certificate.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "linfree/error.hpp"
#include "linfree/exactgeom.hpp"
#include "linfree/knotlink.hpp"
#include "linfree/spatialgraph.hpp"

namespace linfree {

// Terminal justification: linear embeddings of complete graphs are free.
inline constexpr const char* kCompleteGraphAxiom = "axiom:linear-complete-graph-free";
inline constexpr const char* kSmallClassification = "classification:five-vertex-hull-type";

using LabelTriple = std::array<int, 3>;  // sorted labels in 1..6
using LabelPair = std::pair<int, int>;   // a < b

inline LabelTriple make_triple(int a, int b, int c) {
    LabelTriple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

inline LabelPair make_pair_sorted(int a, int b) { return a < b ? LabelPair{a, b} : LabelPair{b, a}; }

// vertex_of[label - 1] is the vertex id carrying that label.
struct CanonicalLabeling {
    std::array<VertexId, 6> vertex_of{};

    VertexId vertex(int label) const { return vertex_of[static_cast<std::size_t>(label - 1)]; }
    int label_of(VertexId v) const {
        for (int l = 1; l <= 6; ++l)
            if (vertex(l) == v) return l;
        throw precondition_error("vertex " + std::to_string(v) + " carries no label");
    }
    friend bool operator==(const CanonicalLabeling&, const CanonicalLabeling&) = default;
};

// The five configuration conditions, evaluated for points listed in label
// order 1..6.
struct LabelingConditions {
    bool hopf = false;             // |lk(boundary 123, boundary 456)| = 1
    bool pierce_45_123 = false;    // segment 45 pierces triangle 123
    bool pierce_13_456 = false;    // segment 13 pierces triangle 456
    bool sides_132 = false;        // 4, 6 in H+_132 and 5 in H-_132
    bool sides_134 = false;        // 6 in H+_134 and 2, 5 in H-_134
    bool all() const { return hopf && pierce_45_123 && pierce_13_456 && sides_132 && sides_134; }
};

inline LabelingConditions evaluate_labeling(const std::array<Point3, 6>& p) {
    auto L = [&](int l) -> const Point3& { return p[static_cast<std::size_t>(l - 1)]; };
    LabelingConditions c;
    c.pierce_45_123 = segment_pierces_triangle({L(4), L(5)}, {L(1), L(2), L(3)});
    c.pierce_13_456 = segment_pierces_triangle({L(1), L(3)}, {L(4), L(5), L(6)});
    c.sides_132 = halfspace_side(L(1), L(3), L(2), L(4)) == Side::Plus &&
                  halfspace_side(L(1), L(3), L(2), L(6)) == Side::Plus &&
                  halfspace_side(L(1), L(3), L(2), L(5)) == Side::Minus;
    c.sides_134 = halfspace_side(L(1), L(3), L(4), L(6)) == Side::Plus &&
                  halfspace_side(L(1), L(3), L(4), L(2)) == Side::Minus &&
                  halfspace_side(L(1), L(3), L(4), L(5)) == Side::Minus;
    c.hopf = std::labs(linking_number(triangle_cycle(L(1), L(2), L(3)), triangle_cycle(L(4), L(5), L(6)))) == 1;
    return c;
}

namespace detail {

inline void require_valid_k6(const LinearEmbedding& e) {
    if (!is_complete_on(e.graph, 6)) throw precondition_error("expected a linear embedding of K6");
    auto report = validate_embedding(e);
    if (!report.valid()) throw general_position_error("invalid embedding: " + report.violations.front());
}

inline std::array<Point3, 6> labeled_points(const LinearEmbedding& e, const CanonicalLabeling& lab) {
    std::array<Point3, 6> p;
    for (int l = 1; l <= 6; ++l) p[static_cast<std::size_t>(l - 1)] = e.at(lab.vertex(l));
    return p;
}

}  // namespace detail

// Lexicographically least labeling (as the sequence vertex_of) satisfying
// all five conditions.
inline CanonicalLabeling canonical_labeling(const LinearEmbedding& e) {
    detail::require_valid_k6(e);
    const auto& ids = e.graph.vertices();
    auto pts = e.points();
    // |lk| for each split into two triples, keyed by the bitmask of the
    // triple holding index 0
    std::map<unsigned, long> lk;
    for (const auto& [t, u] : disjoint_triangle_pairs()) {
        unsigned mask = (1u << t[0]) | (1u << t[1]) | (1u << t[2]);
        lk[mask] = std::labs(linking_number(triangle_cycle(pts[t[0]], pts[t[1]], pts[t[2]]),
                                            triangle_cycle(pts[u[0]], pts[u[1]], pts[u[2]])));
    }
    std::array<std::size_t, 6> perm{0, 1, 2, 3, 4, 5};
    do {
        unsigned m = (1u << perm[0]) | (1u << perm[1]) | (1u << perm[2]);
        if (!(m & 1u)) m = 63u & ~m;
        if (lk[m] != 1) continue;
        auto P = [&](int l) -> const Point3& { return pts[perm[static_cast<std::size_t>(l - 1)]]; };
        if (!segment_pierces_triangle({P(4), P(5)}, {P(1), P(2), P(3)})) continue;
        if (!segment_pierces_triangle({P(1), P(3)}, {P(4), P(5), P(6)})) continue;
        if (halfspace_side(P(1), P(3), P(2), P(4)) != Side::Plus) continue;
        if (halfspace_side(P(1), P(3), P(2), P(6)) != Side::Plus) continue;
        if (halfspace_side(P(1), P(3), P(2), P(5)) != Side::Minus) continue;
        if (halfspace_side(P(1), P(3), P(4), P(6)) != Side::Plus) continue;
        if (halfspace_side(P(1), P(3), P(4), P(2)) != Side::Minus) continue;
        if (halfspace_side(P(1), P(3), P(4), P(5)) != Side::Minus) continue;
        CanonicalLabeling lab;
        for (std::size_t l = 0; l < 6; ++l) lab.vertex_of[l] = ids[perm[l]];
        return lab;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw error("no canonical labeling: internal consistency failure (every linear K6 contains a Hopf link)");
}

struct TrivialHullSet {
    std::set<LabelTriple> triangles;

    bool contains(int a, int b, int c) const { return triangles.count(make_triple(a, b, c)) != 0; }
    bool contains(const LabelTriple& t) const { return triangles.count(make_triple(t[0], t[1], t[2])) != 0; }
};

// Triangles that every canonically labeled linear K6 leaves trivial.
inline const std::vector<LabelTriple>& guaranteed_trivial_triangles() {
    static const std::vector<LabelTriple> list{{1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 3, 6}, {1, 4, 6}, {1, 5, 6},
                                               {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
    return list;
}

inline TrivialHullSet guaranteed_hull_set() {
    TrivialHullSet h;
    for (const auto& t : guaranteed_trivial_triangles()) h.triangles.insert(t);
    return h;
}

// A triangle on three of the six points is trivial when none of the three
// segments among the other three points pierces it. Segments with an
// endpoint on the triangle meet its plane only at that endpoint.
inline TrivialHullSet trivial_hulls(const LinearEmbedding& e, const CanonicalLabeling& lab) {
    detail::require_valid_k6(e);
    auto p = detail::labeled_points(e, lab);
    TrivialHullSet out;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                std::vector<int> rest;
                for (int x = 1; x <= 6; ++x)
                    if (x != a && x != b && x != c) rest.push_back(x);
                Triangle t{p[a - 1], p[b - 1], p[c - 1]};
                bool pierced = false;
                for (std::size_t i = 0; i < 3 && !pierced; ++i)
                    for (std::size_t j = i + 1; j < 3 && !pierced; ++j)
                        pierced = segment_pierces_triangle({p[rest[i] - 1], p[rest[j] - 1]}, t);
                if (!pierced) out.triangles.insert({a, b, c});
            }
    return out;
}

enum class SlideKind { M1, M2 };

struct SlideEdge {
    LabelPair u, v;  // u < v
    SlideKind kind;
    std::vector<LabelTriple> witnesses;  // M1: {abx}; M2: {amb, abx}
};

struct IsotopyGraph {
    std::vector<int> cycle;                 // labels, cyclic order
    std::vector<LabelPair> nodes;           // the 9 chords, sorted
    std::vector<SlideEdge> edges;           // sorted by (u, v)
    std::map<LabelPair, LabelTriple> rescue;  // chord -> trivial triangle with a 2-edge arc

    std::vector<LabelPair> neighbours(const LabelPair& c) const {
        std::vector<LabelPair> out;
        for (const auto& e : edges) {
            if (e.u == c) out.push_back(e.v);
            if (e.v == c) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    const SlideEdge* edge_between(const LabelPair& a, const LabelPair& b) const {
        for (const auto& e : edges)
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return &e;
        return nullptr;
    }

    // connected components as sorted chord lists, ordered by first chord
    std::vector<std::vector<LabelPair>> components() const {
        std::map<LabelPair, int> comp;
        std::vector<std::vector<LabelPair>> out;
        for (const auto& s : nodes) {
            if (comp.count(s)) continue;
            std::vector<LabelPair> cur{s}, stack{s};
            comp[s] = static_cast<int>(out.size());
            while (!stack.empty()) {
                auto c = stack.back();
                stack.pop_back();
                for (const auto& w : neighbours(c))
                    if (!comp.count(w)) {
                        comp[w] = static_cast<int>(out.size());
                        cur.push_back(w);
                        stack.push_back(w);
                    }
            }
            std::sort(cur.begin(), cur.end());
            out.push_back(std::move(cur));
        }
        return out;
    }

    bool connected() const { return components().size() == 1; }

    // I connected, or each component holds a rescue chord
    bool closes() const {
        if (connected()) return true;
        for (const auto& comp : components()) {
            bool has = std::any_of(comp.begin(), comp.end(), [&](const LabelPair& c) { return rescue.count(c) != 0; });
            if (!has) return false;
        }
        return true;
    }
};

namespace detail {

struct CyclePositions {
    std::vector<int> cycle;
    std::map<int, std::size_t> pos;

    explicit CyclePositions(std::vector<int> c) : cycle(std::move(c)) {
        for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = i;
    }
    std::size_t n() const { return cycle.size(); }
    std::size_t distance(int a, int b) const {
        std::size_t d = (pos.at(a) + n() - pos.at(b)) % n();
        return std::min(d, n() - d);
    }
    // vertex between a and b when they are two steps apart
    int middle(int a, int b) const {
        std::size_t pa = pos.at(a), pb = pos.at(b);
        if ((pa + 2) % n() == pb) return cycle[(pa + 1) % n()];
        return cycle[(pb + 1) % n()];
    }
};

}  // namespace detail

inline IsotopyGraph build_isotopy_graph(const std::vector<int>& cycle, const TrivialHullSet& hulls) {
    if (cycle.size() != 6) throw precondition_error("isotopy graph needs a Hamiltonian cycle on 6 labels");
    {
        auto s = cycle;
        std::sort(s.begin(), s.end());
        for (int l = 1; l <= 6; ++l)
            if (s[static_cast<std::size_t>(l - 1)] != l) throw precondition_error("cycle must span labels 1..6");
    }
    detail::CyclePositions cp(cycle);
    IsotopyGraph g;
    g.cycle = cycle;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            if (cp.distance(a, b) >= 2) g.nodes.emplace_back(a, b);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
            auto [p, q] = g.nodes[i];
            auto [r, s] = g.nodes[j];
            int x;
            if (p == r || p == s) x = p;
            else if (q == r || q == s) x = q;
            else continue;
            int a = p == x ? q : p;
            int b = r == x ? s : r;
            std::size_t d = cp.distance(a, b);
            if (d == 1 && hulls.contains(a, b, x)) {
                g.edges.push_back({g.nodes[i], g.nodes[j], SlideKind::M1, {make_triple(a, b, x)}});
            } else if (d == 2) {
                int m = cp.middle(a, b);
                if (m != x && hulls.contains(a, m, b) && hulls.contains(a, b, x))
                    g.edges.push_back(
                        {g.nodes[i], g.nodes[j], SlideKind::M2, {make_triple(a, m, b), make_triple(a, b, x)}});
            }
        }
    for (const auto& c : g.nodes)
        if (cp.distance(c.first, c.second) == 2) {
            int m = cp.middle(c.first, c.second);
            if (hulls.contains(c.first, m, c.second)) g.rescue[c] = make_triple(c.first, m, c.second);
        }
    return g;
}

enum class WitnessKind { Rescue, SlideM1, SlideM2 };

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Rescue: return "rescue";
        case WitnessKind::SlideM1: return "slide_m1";
        case WitnessKind::SlideM2: return "slide_m2";
    }
    return "?";
}

using VertexTriple = std::array<VertexId, 3>;

inline VertexTriple make_vertex_triple(VertexId a, VertexId b, VertexId c) {
    VertexTriple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

struct ChordAddition {
    Edge chord;
    WitnessKind kind;
    std::vector<VertexTriple> triangles;
    std::optional<Edge> neighbor;  // slides only
};

// Position of the extra vertex of a five-vertex graph relative to the
// tetrahedron spanned by the other four.
enum class HullType { ApexInside, OutsideNoEdgeMeets, OutsideOneEdgeMeets };

inline const char* to_string(HullType t) {
    switch (t) {
        case HullType::ApexInside: return "apex_inside_hull";
        case HullType::OutsideNoEdgeMeets: return "apex_outside_no_edge_meets_hull";
        case HullType::OutsideOneEdgeMeets: return "apex_outside_one_edge_meets_hull";
    }
    return "?";
}

struct HullDescriptor {
    VertexId apex;
    std::array<VertexId, 4> hull;
    HullType type;
    std::vector<Edge> piercing_edges;  // apex edges meeting the open hull
};

struct SmallClassification {
    std::string graph_class;               // "K4", "K5", "K5-minus-edge", "wheel-W4"
    std::vector<HullDescriptor> descriptors;  // first entry is the primary one
};

struct FreenessCertificate {
    std::vector<VertexId> labeling;  // vertex of label 1..6; empty below six vertices
    std::vector<VertexId> cycle;
    std::vector<Edge> bridges;
    std::vector<ChordAddition> additions;
    std::string justification = kCompleteGraphAxiom;
    std::optional<SmallClassification> classification;
};

struct Inconclusive {
    std::string reason;
};

using CertifyResult = std::variant<FreenessCertificate, Inconclusive>;

inline bool is_free(const CertifyResult& r) { return std::holds_alternative<FreenessCertificate>(r); }

namespace detail {

inline LinearEmbedding restrict_to(const AbstractGraph& g, const LinearEmbedding& e) {
    LinearEmbedding out{g, {}};
    for (auto v : g.vertices()) out.coords[v] = e.at(v);
    return out;
}

inline void require_certifiable(const AbstractGraph& g, const LinearEmbedding& e, std::size_t lo, std::size_t hi) {
    if (g.order() < lo || g.order() > hi)
        throw precondition_error("graph has " + std::to_string(g.order()) + " vertices; expected " +
                                 std::to_string(lo) + ".." + std::to_string(hi));
    if (!g.is_simple()) throw precondition_error("graph is not simple");
    if (!g.is_connected()) throw precondition_error("graph is not connected");
    auto dv = min_valency(g);
    if (dv < 3) throw precondition_error("min valency " + std::to_string(dv) + " < 3");
    auto report = validate_embedding(restrict_to(g, e));
    if (!report.valid()) throw general_position_error("invalid embedding: " + report.violations.front());
}

inline Edge to_vertex_edge(const CanonicalLabeling& lab, const LabelPair& c) {
    return make_edge(lab.vertex(c.first), lab.vertex(c.second));
}

inline VertexTriple to_vertex_triple(const CanonicalLabeling& lab, const LabelTriple& t) {
    return make_vertex_triple(lab.vertex(t[0]), lab.vertex(t[1]), lab.vertex(t[2]));
}

}  // namespace detail

// Greedy chord closure for one cycle. Rescue additions are tried before
// slides; within each kind the lexicographically smallest chord (in labels)
// goes first, and a slide uses its smallest present neighbour.
inline std::optional<std::vector<ChordAddition>> close_chords(const IsotopyGraph& ig, std::set<LabelPair> present,
                                                              const CanonicalLabeling& lab) {
    std::vector<ChordAddition> out;
    while (present.size() < ig.nodes.size()) {
        bool added = false;
        for (const auto& c : ig.nodes) {
            if (present.count(c)) continue;
            auto r = ig.rescue.find(c);
            if (r == ig.rescue.end()) continue;
            out.push_back({detail::to_vertex_edge(lab, c), WitnessKind::Rescue,
                           {detail::to_vertex_triple(lab, r->second)}, std::nullopt});
            present.insert(c);
            added = true;
            break;
        }
        if (added) continue;
        for (const auto& c : ig.nodes) {
            if (present.count(c)) continue;
            for (const auto& nb : ig.neighbours(c)) {
                if (!present.count(nb)) continue;
                const SlideEdge* se = ig.edge_between(c, nb);
                ChordAddition add{detail::to_vertex_edge(lab, c),
                                  se->kind == SlideKind::M1 ? WitnessKind::SlideM1 : WitnessKind::SlideM2,
                                  {},
                                  detail::to_vertex_edge(lab, nb)};
                for (const auto& w : se->witnesses) add.triangles.push_back(detail::to_vertex_triple(lab, w));
                out.push_back(std::move(add));
                present.insert(c);
                added = true;
                break;
            }
            if (added) break;
        }
        if (!added) return std::nullopt;
    }
    return out;
}

inline CertifyResult certify_six(const AbstractGraph& g, const LinearEmbedding& e) {
    detail::require_certifiable(g, e, 6, 6);
    LinearEmbedding k6{complete_graph(6), {}};
    {
        // complete graph on g's own ids
        std::vector<Edge> es;
        const auto& ids = g.vertices();
        for (std::size_t a = 0; a < 6; ++a)
            for (std::size_t b = a + 1; b < 6; ++b) es.emplace_back(ids[a], ids[b]);
        k6.graph = AbstractGraph(ids, es);
        for (auto v : ids) k6.coords[v] = e.at(v);
    }
    CanonicalLabeling lab = canonical_labeling(k6);
    TrivialHullSet hulls = trivial_hulls(k6, lab);

    // g relabeled onto 1..6
    std::vector<Edge> labeled_edges;
    for (auto [a, b] : g.edges()) labeled_edges.push_back(make_edge(lab.label_of(a), lab.label_of(b)));
    AbstractGraph gl({1, 2, 3, 4, 5, 6}, labeled_edges);
    auto cycles = hamiltonian_cycles(gl);
    if (cycles.empty()) return Inconclusive{"graph has no Hamiltonian cycle"};

    for (const auto& cyc : cycles) {
        IsotopyGraph ig = build_isotopy_graph(cyc, hulls);
        std::set<LabelPair> bridges;
        for (const auto& c : ig.nodes)
            if (gl.has_edge(c.first, c.second)) bridges.insert(c);
        auto additions = close_chords(ig, bridges, lab);
        if (!additions) continue;
        FreenessCertificate cert;
        cert.labeling.assign(lab.vertex_of.begin(), lab.vertex_of.end());
        for (int l : cyc) cert.cycle.push_back(lab.vertex(l));
        for (const auto& b : bridges) cert.bridges.push_back(detail::to_vertex_edge(lab, b));
        std::sort(cert.bridges.begin(), cert.bridges.end());
        cert.additions = std::move(*additions);
        cert.justification = kCompleteGraphAxiom;
        return cert;
    }
    return Inconclusive{"no Hamiltonian cycle of the graph closes under rescue and slide additions"};
}

namespace detail {

// Strictly inside the tetrahedron abcd.
inline bool inside_tetrahedron(const Point3& p, const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    int s = orient3d(a, b, c, d);
    return orient3d(p, b, c, d) == s && orient3d(a, p, c, d) == s && orient3d(a, b, p, d) == s &&
           orient3d(a, b, c, p) == s;
}

inline std::optional<HullDescriptor> describe_hull(const AbstractGraph& g, const LinearEmbedding& e, VertexId apex,
                                                   std::array<VertexId, 4> hull) {
    std::sort(hull.begin(), hull.end());
    HullDescriptor d{apex, hull, HullType::ApexInside, {}};
    const Point3& v = e.at(apex);
    std::array<Point3, 4> h{e.at(hull[0]), e.at(hull[1]), e.at(hull[2]), e.at(hull[3])};
    if (inside_tetrahedron(v, h[0], h[1], h[2], h[3])) return d;
    // outside: edge apex-x meets the open hull iff it pierces the face opposite x
    for (std::size_t k = 0; k < 4; ++k) {
        if (!g.has_edge(apex, hull[k])) continue;
        std::array<Point3, 3> face;
        std::size_t f = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != k) face[f++] = h[j];
        if (segment_pierces_triangle({v, h[k]}, {face[0], face[1], face[2]}))
            d.piercing_edges.push_back(make_edge(apex, hull[k]));
    }
    if (d.piercing_edges.empty()) d.type = HullType::OutsideNoEdgeMeets;
    else if (d.piercing_edges.size() == 1) d.type = HullType::OutsideOneEdgeMeets;
    else return std::nullopt;
    return d;
}

}  // namespace detail

// Four or five vertices. K4 and K5 are complete; the two non-complete
// five-vertex graphs get a hull classification of their extra vertex.
inline CertifyResult certify_small(const AbstractGraph& g, const LinearEmbedding& e) {
    detail::require_certifiable(g, e, 4, 5);
    auto le = detail::restrict_to(g, e);
    FreenessCertificate cert;
    const std::size_t n = g.order();
    if (g.edges().size() == n * (n - 1) / 2) {
        cert.justification = kCompleteGraphAxiom;
        cert.classification = SmallClassification{n == 4 ? "K4" : "K5", {}};
        return cert;
    }
    // n == 5 and not complete; min valency 3 leaves two shapes
    std::vector<VertexId> deg3, deg4;
    for (auto v : g.vertices()) (g.degree(v) == 3 ? deg3 : deg4).push_back(v);
    SmallClassification cls;
    auto others = [&](VertexId apex) {
        std::array<VertexId, 4> h{};
        std::size_t k = 0;
        for (auto v : g.vertices())
            if (v != apex) h[k++] = v;
        return h;
    };
    if (deg3.size() == 2 && deg4.size() == 3) {
        cls.graph_class = "K5-minus-edge";
        auto d = detail::describe_hull(g, le, deg3.front(), others(deg3.front()));
        if (!d) return Inconclusive{"apex configuration outside the three hull types"};
        cls.descriptors.push_back(*d);
    } else if (deg3.size() == 4 && deg4.size() == 1) {
        cls.graph_class = "wheel-W4";
        // primary: the hub against the hull of its rim, then every other apex
        std::vector<VertexId> order{deg4.front()};
        for (auto v : g.vertices())
            if (v != deg4.front()) order.push_back(v);
        for (auto apex : order) {
            auto d = detail::describe_hull(g, le, apex, others(apex));
            if (!d) return Inconclusive{"apex configuration outside the three hull types"};
            cls.descriptors.push_back(*d);
        }
    } else {
        return Inconclusive{"unexpected five-vertex valency distribution"};
    }
    cert.justification = kSmallClassification;
    cert.classification = std::move(cls);
    return cert;
}

// Dispatches on the vertex count of e's graph.
inline CertifyResult certify(const LinearEmbedding& e) {
    const auto& g = e.graph;
    if (g.order() == 6) return certify_six(g, e);
    if (g.order() == 4 || g.order() == 5) return certify_small(g, e);
    throw precondition_error("graph has " + std::to_string(g.order()) + " vertices; expected 4..6");
}

}  // namespace linfree
