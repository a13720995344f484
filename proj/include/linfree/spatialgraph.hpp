#pragma once

// Abstract graphs, linear embeddings and the combinatorial services the
// freeness checker and the generators lean on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linfree/error.hpp"
#include "linfree/exactgeom.hpp"
#include "linfree/rng.hpp"

namespace linfree {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Vertex ids are kept sorted; edges are kept as given (normalized a <= b) so
// that loops and repeated edges read from files survive long enough for
// validate_embedding to report them.
class AbstractGraph {
public:
    AbstractGraph() = default;

    AbstractGraph(std::vector<VertexId> vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) edges_.push_back(a <= b ? Edge{a, b} : Edge{b, a});
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = i;
        adj_.assign(vertices_.size(), {});
        for (auto [a, b] : edges_) {
            auto ia = index_.find(a), ib = index_.find(b);
            if (ia == index_.end() || ib == index_.end() || a == b) continue;
            adj_[ia->second].push_back(ib->second);
            adj_[ib->second].push_back(ia->second);
        }
        for (auto& l : adj_) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t order() const { return vertices_.size(); }

    bool contains(VertexId v) const { return index_.count(v) != 0; }
    std::size_t index_of(VertexId v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw precondition_error("unknown vertex id " + std::to_string(v));
        return it->second;
    }

    bool has_edge(VertexId a, VertexId b) const {
        return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
    }

    // neighbours by index, sorted, deduplicated
    const std::vector<std::size_t>& adjacent(std::size_t i) const { return adj_[i]; }
    std::size_t degree(VertexId v) const { return adj_[index_of(v)].size(); }

    bool is_simple() const {
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].first == edges_[i].second) return false;
            if (i > 0 && edges_[i] == edges_[i - 1]) return false;
            if (!contains(edges_[i].first) || !contains(edges_[i].second)) return false;
        }
        return true;
    }

    bool is_connected() const {
        if (vertices_.empty()) return false;
        std::vector<char> seen(order(), 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == order();
    }

    friend bool operator==(const AbstractGraph& a, const AbstractGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::map<VertexId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
};

inline AbstractGraph complete_graph(int n) {
    std::vector<VertexId> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
    return {vs, es};
}

inline AbstractGraph cycle_graph(int n) {
    std::vector<VertexId> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a) es.push_back(make_edge(a, (a + 1) % n));
    return {vs, es};
}

inline AbstractGraph path_graph(int n) {
    std::vector<VertexId> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
    return {vs, es};
}

struct LinearEmbedding {
    AbstractGraph graph;
    std::map<VertexId, Point3> coords;

    const Point3& at(VertexId v) const {
        auto it = coords.find(v);
        if (it == coords.end()) throw precondition_error("no coordinates for vertex " + std::to_string(v));
        return it->second;
    }

    // coordinates in graph vertex order
    std::vector<Point3> points() const {
        std::vector<Point3> out;
        out.reserve(graph.order());
        for (auto v : graph.vertices()) out.push_back(at(v));
        return out;
    }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

namespace detail {

// Closed 3D segments intersect (any shared point).
inline bool segments_intersect_3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
    if (orient3d(a, b, c, d) != 0) return false;
    if (a == b && c == d) return a == c;
    if (a == b) return segments_intersect_3d(c, d, a, b);
    Point3 n = cross(b - a, d - c);
    if (n.x == 0 && n.y == 0 && n.z == 0) {
        n = cross(b - a, c - a);
        if (n.x == 0 && n.y == 0 && n.z == 0) {
            // all four collinear: overlap of parameter intervals
            Point3 u = b - a;
            Rational tc = dot(c - a, u) / norm2(u), td = dot(d - a, u) / norm2(u);
            if (tc > td) std::swap(tc, td);
            return !(td < 0 || tc > 1);
        }
    }
    // drop the axis with the largest |normal| component and test in 2D
    int axis = 0;
    Rational best = abs(n.x);
    if (abs(n.y) > best) best = abs(n.y), axis = 1;
    if (abs(n.z) > best) axis = 2;
    auto to2 = [axis](const Point3& p) -> Point2 {
        if (axis == 0) return {p.y, p.z};
        if (axis == 1) return {p.x, p.z};
        return {p.x, p.y};
    };
    Point2 p1 = to2(a), p2 = to2(b), q1 = to2(c), q2 = to2(d);
    int o1 = orient2d(p1, p2, q1), o2 = orient2d(p1, p2, q2);
    int o3 = orient2d(q1, q2, p1), o4 = orient2d(q1, q2, p2);
    auto on_seg = [](const Point2& p, const Point2& q, const Point2& r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
               r.y <= std::max(p.y, q.y);
    };
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_seg(p1, p2, q1)) return true;
    if (o2 == 0 && on_seg(p1, p2, q2)) return true;
    if (o3 == 0 && on_seg(q1, q2, p1)) return true;
    if (o4 == 0 && on_seg(q1, q2, p2)) return true;
    return false;
}

inline std::string describe(const std::vector<VertexId>& ids) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
    return os.str();
}

}  // namespace detail

// Lists every violated invariant with a witness; empty means valid.
inline ValidationReport validate_embedding(const LinearEmbedding& e) {
    ValidationReport r;
    const auto& g = e.graph;
    for (auto [a, b] : g.edges()) {
        if (a == b) r.violations.push_back("loop edge at vertex " + std::to_string(a));
        if (!g.contains(a) || !g.contains(b))
            r.violations.push_back("edge " + std::to_string(a) + "-" + std::to_string(b) + " has an unknown endpoint");
    }
    for (std::size_t i = 1; i < g.edges().size(); ++i)
        if (g.edges()[i] == g.edges()[i - 1] && g.edges()[i].first != g.edges()[i].second)
            r.violations.push_back("multiple edge " + std::to_string(g.edges()[i].first) + "-" +
                                   std::to_string(g.edges()[i].second));
    bool coords_ok = true;
    for (auto v : g.vertices())
        if (!e.coords.count(v)) {
            r.violations.push_back("missing coordinates for vertex " + std::to_string(v));
            coords_ok = false;
        }
    for (const auto& [v, p] : e.coords)
        if (!g.contains(v)) {
            r.violations.push_back("coordinates given for unknown vertex " + std::to_string(v));
            coords_ok = false;
        }
    if (!coords_ok) return r;

    auto pts = e.points();
    const auto& ids = g.vertices();
    auto ip = to_integer_frame(pts);
    const std::size_t n = pts.size();
    std::vector<char> dup(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (pts[a] == pts[b]) {
                r.violations.push_back("duplicate coordinate: vertices " + detail::describe({ids[a], ids[b]}));
                dup[b] = 1;
            }
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
        for (std::size_t b = a + 1; b < n && !found; ++b)
            for (std::size_t c = b + 1; c < n && !found; ++c) {
                if (dup[a] || dup[b] || dup[c]) continue;
                if (detail::collinear_int(ip[a], ip[b], ip[c])) {
                    r.violations.push_back("collinear triple: vertices " + detail::describe({ids[a], ids[b], ids[c]}));
                    found = true;
                }
            }
    found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
        for (std::size_t b = a + 1; b < n && !found; ++b)
            for (std::size_t c = b + 1; c < n && !found; ++c)
                for (std::size_t d = c + 1; d < n && !found; ++d) {
                    if (dup[a] || dup[b] || dup[c] || dup[d]) continue;
                    if (detail::orient3d_int(ip[a], ip[b], ip[c], ip[d]) == 0) {
                        r.violations.push_back("coplanar quadruple: vertices " +
                                               detail::describe({ids[a], ids[b], ids[c], ids[d]}));
                        found = true;
                    }
                }
    if (!g.is_simple()) return r;

    // redundant with general position, asserted anyway
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            bool shared = a == c || a == d || b == c || b == d;
            const Point3 &pa = e.at(a), &pb = e.at(b), &pc = e.at(c), &pd = e.at(d);
            bool bad;
            if (shared) {
                VertexId s = (a == c || a == d) ? a : b;
                VertexId x = s == a ? b : a;
                VertexId y = (s == c) ? d : c;
                const Point3& ps = e.at(s);
                const Point3& px = e.at(x);
                const Point3& py = e.at(y);
                bad = collinear(ps, px, py) && sign(dot(px - ps, py - ps)) > 0;
            } else {
                bad = detail::segments_intersect_3d(pa, pb, pc, pd);
            }
            if (bad)
                r.violations.push_back("edge segments " + detail::describe({a, b}) + " and " +
                                       detail::describe({c, d}) + " intersect");
        }
    return r;
}

inline std::size_t min_valency(const AbstractGraph& g) {
    if (g.order() == 0) throw precondition_error("min valency of the empty graph");
    std::size_t m = g.adjacent(0).size();
    for (std::size_t i = 1; i < g.order(); ++i) m = std::min(m, g.adjacent(i).size());
    return m;
}

using HamiltonianCycle = std::vector<VertexId>;

// All Hamiltonian cycles, each starting at the smallest id with its second
// vertex smaller than its last; lexicographic order.
inline std::vector<HamiltonianCycle> hamiltonian_cycles(const AbstractGraph& g) {
    std::vector<HamiltonianCycle> out;
    const std::size_t n = g.order();
    if (n < 3) return out;
    std::vector<std::size_t> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    auto rec = [&](auto&& self) -> void {
        std::size_t v = path.back();
        if (path.size() == n) {
            if (std::binary_search(g.adjacent(v).begin(), g.adjacent(v).end(), std::size_t{0}) && path[1] < path.back()) {
                HamiltonianCycle c;
                for (auto i : path) c.push_back(g.vertices()[i]);
                out.push_back(std::move(c));
            }
            return;
        }
        for (auto w : g.adjacent(v)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    rec(rec);
    return out;
}

namespace detail {

// Unit-capacity max flow on the split-vertex network: number of internally
// vertex-disjoint s-t paths for non-adjacent s, t.
inline int vertex_disjoint_paths(const AbstractGraph& g, std::size_t s, std::size_t t) {
    const std::size_t n = g.order();
    // node v_in = 2v, v_out = 2v+1
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> net(2 * n);
    auto add = [&](std::size_t a, std::size_t b, int cap) {
        net[a].push_back({b, cap, net[b].size()});
        net[b].push_back({a, 0, net[a].size() - 1});
    };
    const int inf = static_cast<int>(n) + 1;
    for (std::size_t v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (std::size_t v = 0; v < n; ++v)
        for (auto w : g.adjacent(v)) add(2 * v + 1, 2 * w, inf);
    const std::size_t src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> parent(2 * n, {SIZE_MAX, 0});
        std::queue<std::size_t> q;
        q.push(src);
        parent[src] = {src, 0};
        while (!q.empty() && parent[dst].first == SIZE_MAX) {
            auto v = q.front();
            q.pop();
            for (std::size_t k = 0; k < net[v].size(); ++k) {
                const auto& a = net[v][k];
                if (a.cap > 0 && parent[a.to].first == SIZE_MAX) {
                    parent[a.to] = {v, k};
                    q.push(a.to);
                }
            }
        }
        if (parent[dst].first == SIZE_MAX) break;
        for (std::size_t v = dst; v != src;) {
            auto [u, k] = parent[v];
            net[u][k].cap -= 1;
            net[v][net[u][k].rev].cap += 1;
            v = u;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Minimum number of vertices whose removal disconnects g; |V|-1 for complete
// graphs and 0 for disconnected input.
inline int vertex_connectivity(const AbstractGraph& g) {
    const std::size_t n = g.order();
    if (n < 2) throw precondition_error("vertex connectivity needs at least 2 vertices");
    if (!g.is_connected()) return 0;
    int best = static_cast<int>(n) - 1;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            if (std::binary_search(g.adjacent(s).begin(), g.adjacent(s).end(), t)) continue;
            best = std::min(best, detail::vertex_disjoint_paths(g, s, t));
        }
    return best;
}

namespace detail {

// Edge bitmask over pairs (a<b) of 0..n-1, bit index by row-major pair order.
inline int pair_bit(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

inline std::uint32_t relabel_mask(std::uint32_t mask, const std::vector<int>& perm, int n) {
    std::uint32_t out = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mask >> pair_bit(a, b, n) & 1u) out |= 1u << pair_bit(perm[a], perm[b], n);
    return out;
}

inline std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
        best = std::min(best, relabel_mask(mask, perm, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline AbstractGraph graph_from_mask(std::uint32_t mask, int n) {
    std::vector<VertexId> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (mask >> pair_bit(a, b, n) & 1u) es.emplace_back(a, b);
    return {vs, es};
}

}  // namespace detail

// Brute force over all bijections; meant for graphs of at most ~8 vertices.
inline bool isomorphic(const AbstractGraph& g, const AbstractGraph& h) {
    if (g.order() != h.order() || g.edges().size() != h.edges().size()) return false;
    const std::size_t n = g.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (auto j : g.adjacent(i))
                if (!std::binary_search(h.adjacent(perm[i]).begin(), h.adjacent(perm[i]).end(), perm[j])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Connected simple graphs on vertices 0..n-1 with minimum valency >= min_val,
// one canonical representative per isomorphism class, ordered by canonical
// edge mask.
inline std::vector<AbstractGraph> enumerate_graphs(int num_vertices, int min_val) {
    if (num_vertices < 1 || num_vertices > 6) throw precondition_error("enumerate_graphs supports 1..6 vertices");
    const int n = num_vertices;
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mask >> detail::pair_bit(a, b, n) & 1u) ++deg[a], ++deg[b];
        if (*std::min_element(deg.begin(), deg.end()) < min_val) continue;
        if (!detail::graph_from_mask(mask, n).is_connected()) continue;
        classes.insert(detail::canonical_mask(mask, n));
    }
    std::vector<AbstractGraph> out;
    for (auto m : classes) out.push_back(detail::graph_from_mask(m, n));
    return out;
}

// Integer grid coordinates in [0, bound]^3 drawn vertex by vertex in id
// order; a draw that breaks general position with the earlier vertices is
// rejected and redrawn.
inline LinearEmbedding sample_embedding(const AbstractGraph& g, long coordinate_bound, std::uint64_t seed) {
    if (coordinate_bound < 1) throw precondition_error("coordinate bound must be positive");
    SplitMix64 rng(seed);
    const long budget = retry_budget(10000);
    struct P {
        __int128 x, y, z;
    };
    std::vector<P> placed;
    auto collinear3 = [](const P& a, const P& b, const P& c) {
        __int128 ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
        __int128 vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
        return uy * vz == uz * vy && uz * vx == ux * vz && ux * vy == uy * vx;
    };
    auto coplanar4 = [](const P& p, const P& q, const P& r, const P& s) {
        __int128 ax = q.x - p.x, ay = q.y - p.y, az = q.z - p.z;
        __int128 bx = r.x - p.x, by = r.y - p.y, bz = r.z - p.z;
        __int128 cx = s.x - p.x, cy = s.y - p.y, cz = s.z - p.z;
        return ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx) == 0;
    };
    LinearEmbedding e{g, {}};
    for (auto v : g.vertices()) {
        bool ok = false;
        for (long attempt = 0; attempt < budget && !ok; ++attempt) {
            P p{rng.between(0, coordinate_bound), rng.between(0, coordinate_bound), rng.between(0, coordinate_bound)};
            ok = true;
            const std::size_t k = placed.size();
            for (std::size_t a = 0; a < k && ok; ++a) {
                if (placed[a].x == p.x && placed[a].y == p.y && placed[a].z == p.z) ok = false;
                for (std::size_t b = a + 1; b < k && ok; ++b) {
                    if (collinear3(placed[a], placed[b], p)) ok = false;
                    for (std::size_t c = b + 1; c < k && ok; ++c)
                        if (coplanar4(placed[a], placed[b], placed[c], p)) ok = false;
                }
            }
            if (ok) {
                placed.push_back(p);
                e.coords[v] = Point3{Rational(static_cast<long>(p.x)), Rational(static_cast<long>(p.y)),
                                     Rational(static_cast<long>(p.z))};
            }
        }
        if (!ok)
            throw precondition_error("sample_embedding: retry budget exhausted (coordinate bound " +
                                     std::to_string(coordinate_bound) + " too small)");
    }
    return e;
}

}  // namespace linfree
