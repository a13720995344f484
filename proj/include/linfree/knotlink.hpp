#pragma once

// Crossing diagrams of polygonal curves under exact parallel projection,
// and the invariants read off them: linking number, knot determinant and
// the Conway-Gordon sum of a linear K6.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linfree/error.hpp"
#include "linfree/exactgeom.hpp"
#include "linfree/spatialgraph.hpp"

namespace linfree {

struct PolygonalCycle {
    std::vector<Point3> points;  // closed by wraparound

    std::size_t size() const { return points.size(); }
    const Point3& at(std::size_t k) const { return points[k % points.size()]; }
    PolygonalCycle reversed() const {
        PolygonalCycle r{points};
        std::reverse(r.points.begin(), r.points.end());
        return r;
    }
};

inline PolygonalCycle triangle_cycle(const Point3& a, const Point3& b, const Point3& c) { return {{a, b, c}}; }

// Segments are numbered globally: cycle c's segment k (from point k to point
// k+1) has index offset[c] + k.
struct DiagramCrossing {
    std::size_t seg_a, seg_b;  // seg_a < seg_b
    Point2 point;
    Rational param_a, param_b;  // position along each segment, in (0, 1)
    std::size_t over;           // seg_a or seg_b
    int sign;                   // +1 / -1
};

struct Diagram {
    Direction direction;
    std::vector<std::size_t> offsets;  // first global segment index per cycle
    std::vector<std::size_t> sizes;    // segment count per cycle
    std::vector<DiagramCrossing> crossings;

    std::size_t cycle_of(std::size_t seg) const {
        std::size_t c = 0;
        while (c + 1 < offsets.size() && offsets[c + 1] <= seg) ++c;
        return c;
    }
};

namespace detail {

struct SegRef {
    std::size_t cycle, index;
    const Point3* a;
    const Point3* b;
};

inline std::vector<SegRef> all_segments(const std::vector<PolygonalCycle>& cycles) {
    std::vector<SegRef> segs;
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (std::size_t k = 0; k < cycles[c].size(); ++k)
            segs.push_back({c, k, &cycles[c].points[k], &cycles[c].points[(k + 1) % cycles[c].size()]});
    return segs;
}

inline bool segments_adjacent(const SegRef& s, const SegRef& t, const std::vector<PolygonalCycle>& cycles) {
    if (s.cycle != t.cycle) return false;
    std::size_t n = cycles[s.cycle].size();
    return (s.index + 1) % n == t.index || (t.index + 1) % n == s.index || s.index == t.index;
}

inline bool on_closed_segment_2d(const Point2& p, const Point2& q, const Point2& r) {
    if (orient2d(p, q, r) != 0) return false;
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

}  // namespace detail

// Builds the crossing diagram, or returns the reason dir is not generic.
// Throws general_position_error if two strands meet in space.
inline std::optional<Diagram> try_build_diagram(const std::vector<PolygonalCycle>& cycles, const Direction& dir,
                                                std::string* reason = nullptr) {
    auto fail = [&](std::string why) -> std::optional<Diagram> {
        if (reason) *reason = std::move(why);
        return std::nullopt;
    };
    Diagram d;
    d.direction = dir;
    std::size_t off = 0;
    for (const auto& c : cycles) {
        if (c.size() < 3) throw precondition_error("polygonal cycle needs at least 3 points");
        d.offsets.push_back(off);
        d.sizes.push_back(c.size());
        off += c.size();
    }
    const Point3 dv = dir.as_point();
    auto segs = detail::all_segments(cycles);
    for (const auto& s : segs) {
        if (*s.a == *s.b) throw precondition_error("polygonal cycle has repeated consecutive points");
        Point3 x = cross(*s.b - *s.a, dv);
        if (x.x == 0 && x.y == 0 && x.z == 0) return fail("segment parallel to the direction");
    }
    std::vector<Point2> img;
    std::vector<std::pair<std::size_t, std::size_t>> owner;  // (cycle, point)
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (std::size_t k = 0; k < cycles[c].size(); ++k) {
            img.push_back(project(cycles[c].points[k], dir));
            owner.emplace_back(c, k);
        }
    {
        auto sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail("two vertex images coincide");
    }
    std::vector<std::pair<Point2, Point2>> seg_img;
    for (const auto& s : segs) seg_img.emplace_back(project(*s.a, dir), project(*s.b, dir));
    for (std::size_t v = 0; v < img.size(); ++v)
        for (std::size_t k = 0; k < segs.size(); ++k) {
            const auto& s = segs[k];
            std::size_t n = cycles[s.cycle].size();
            if (s.cycle == owner[v].first && (s.index == owner[v].second || (s.index + 1) % n == owner[v].second))
                continue;
            if (detail::on_closed_segment_2d(seg_img[k].first, seg_img[k].second, img[v]))
                return fail("a vertex image lies on another segment's image");
        }
    std::set<Point2> seen_points;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (detail::segments_adjacent(segs[i], segs[j], cycles)) continue;
            auto x = segments_cross_2d(seg_img[i].first, seg_img[i].second, seg_img[j].first, seg_img[j].second);
            if (!x) continue;
            if (!seen_points.insert(x->point).second) return fail("two crossings share an image point");
            Point3 pi = lerp(*segs[i].a, *segs[i].b, x->t);
            Point3 pj = lerp(*segs[j].a, *segs[j].b, x->u);
            int cmp = sign(dot(pi - pj, dv));
            if (cmp == 0) throw general_position_error("two strands of the curves intersect in space");
            std::size_t over = cmp > 0 ? i : j;
            std::size_t under = cmp > 0 ? j : i;
            Point3 od = *segs[over].b - *segs[over].a;
            Point3 ud = *segs[under].b - *segs[under].a;
            int sg = sign(dot(cross(od, ud), dv));
            d.crossings.push_back({i, j, x->point, x->t, x->u, over, sg});
        }
    return d;
}

inline Diagram build_diagram(const std::vector<PolygonalCycle>& cycles, const Direction& dir) {
    std::string why;
    auto d = try_build_diagram(cycles, dir, &why);
    if (!d) throw general_position_error("projection direction not generic: " + why);
    return *std::move(d);
}

// Primitive integer directions ordered by max-norm, then lexicographically,
// one representative per +/- pair (first nonzero component positive).
inline std::vector<Direction> candidate_directions(long max_norm) {
    std::vector<Direction> out;
    for (long m = 1; m <= max_norm; ++m)
        for (long x = -m; x <= m; ++x)
            for (long y = -m; y <= m; ++y)
                for (long z = -m; z <= m; ++z) {
                    if (std::max({std::labs(x), std::labs(y), std::labs(z)}) != m) continue;
                    if (std::gcd(std::gcd(std::labs(x), std::labs(y)), std::labs(z)) != 1) continue;
                    long first = x != 0 ? x : (y != 0 ? y : z);
                    if (first < 0) continue;
                    out.push_back(Direction{{x, y, z}});
                }
    return out;
}

namespace detail {
inline void require_disjoint_vertices(const std::vector<PolygonalCycle>& cycles) {
    for (std::size_t a = 0; a < cycles.size(); ++a)
        for (std::size_t b = a + 1; b < cycles.size(); ++b)
            for (const auto& p : cycles[a].points)
                for (const auto& q : cycles[b].points)
                    if (p == q) throw precondition_error("cycles share a point");
}
}  // namespace detail

// The first `count` generic directions in enumeration order.
inline std::vector<Direction> generic_directions(const std::vector<PolygonalCycle>& cycles, std::size_t count,
                                                 long max_norm = 8) {
    detail::require_disjoint_vertices(cycles);
    std::vector<Direction> out;
    for (const auto& d : candidate_directions(max_norm)) {
        if (try_build_diagram(cycles, d)) out.push_back(d);
        if (out.size() == count) return out;
    }
    throw general_position_error("no generic projection direction with max-norm <= " + std::to_string(max_norm));
}

inline Direction generic_direction(const std::vector<PolygonalCycle>& cycles, long max_norm = 8) {
    return generic_directions(cycles, 1, max_norm).front();
}

// Half the signed count of crossings between different components.
inline long linking_number(const Diagram& d) {
    long twice = 0;
    for (const auto& c : d.crossings)
        if (d.cycle_of(c.seg_a) != d.cycle_of(c.seg_b)) twice += c.sign;
    if (twice % 2 != 0) throw error("odd inter-component crossing sum; diagram is inconsistent");
    return twice / 2;
}

inline long linking_number(const PolygonalCycle& c1, const PolygonalCycle& c2, std::optional<Direction> dir = {}) {
    std::vector<PolygonalCycle> cs{c1, c2};
    detail::require_disjoint_vertices(cs);
    Direction d = dir ? *dir : generic_direction(cs);
    return linking_number(build_diagram(cs, d));
}

// Exact integer determinant by fraction-free (Bareiss) elimination.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            flip = -flip;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return flip * m[n - 1][n - 1];
}

// Fox coloring matrix of a one-component diagram: one row per crossing,
// 2*over - under_in - under_out, arcs cut at undercrossings in traversal
// order. Empty for a crossingless diagram.
inline std::vector<std::vector<Integer>> coloring_matrix(const Diagram& d) {
    if (d.offsets.size() != 1) throw precondition_error("coloring matrix needs a one-component diagram");
    const std::size_t m = d.crossings.size();
    struct Event {
        std::size_t seg;
        Rational param;
        std::size_t crossing;
    };
    std::vector<Event> unders;
    for (std::size_t c = 0; c < m; ++c) {
        const auto& x = d.crossings[c];
        bool a_over = x.over == x.seg_a;
        unders.push_back({a_over ? x.seg_b : x.seg_a, a_over ? x.param_b : x.param_a, c});
    }
    auto before = [](std::size_t s1, const Rational& p1, std::size_t s2, const Rational& p2) {
        return s1 < s2 || (s1 == s2 && p1 < p2);
    };
    std::sort(unders.begin(), unders.end(),
              [&](const Event& a, const Event& b) { return before(a.seg, a.param, b.seg, b.param); });
    std::vector<std::size_t> rank(m);
    for (std::size_t k = 0; k < m; ++k) rank[unders[k].crossing] = k;
    // arc k runs from undercrossing k to undercrossing k+1
    auto arc_at = [&](std::size_t seg, const Rational& p) {
        std::size_t count = 0;
        for (const auto& e : unders)
            if (before(e.seg, e.param, seg, p)) ++count;
        return (count + m - 1) % m;
    };
    std::vector<std::vector<Integer>> mat(m, std::vector<Integer>(m, 0));
    for (std::size_t c = 0; c < m; ++c) {
        const auto& x = d.crossings[c];
        bool a_over = x.over == x.seg_a;
        std::size_t over_arc = arc_at(a_over ? x.seg_a : x.seg_b, a_over ? x.param_a : x.param_b);
        std::size_t k = rank[c];
        mat[c][over_arc] += 2;
        mat[c][(k + m - 1) % m] -= 1;
        mat[c][k] -= 1;
    }
    return mat;
}

inline Integer knot_determinant(const Diagram& d) {
    auto mat = coloring_matrix(d);
    if (mat.size() <= 1) return 1;
    mat.pop_back();
    for (auto& row : mat) row.pop_back();
    return abs(bareiss_determinant(std::move(mat)));
}

inline Integer knot_determinant(const PolygonalCycle& c, std::optional<Direction> dir = {}) {
    std::vector<PolygonalCycle> cs{c};
    Direction d = dir ? *dir : generic_direction(cs);
    return knot_determinant(build_diagram(cs, d));
}

// The ten ways of splitting six labels into two triples, first triple
// holding label 0.
inline std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> disjoint_triangle_pairs() {
    std::vector<std::pair<std::array<int, 3>, std::array<int, 3>>> out;
    for (int b = 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) {
            std::array<int, 3> t{0, b, c}, u{};
            int k = 0;
            for (int v = 1; v < 6; ++v)
                if (v != b && v != c) u[static_cast<std::size_t>(k++)] = v;
            out.emplace_back(t, u);
        }
    return out;
}

inline bool is_complete_on(const AbstractGraph& g, std::size_t n) {
    return g.order() == n && g.is_simple() && g.edges().size() == n * (n - 1) / 2;
}

// Sum over the 10 pairs of disjoint triangles of lk mod 2, reduced mod 2.
inline int conway_gordon_sum(const LinearEmbedding& e) {
    if (!is_complete_on(e.graph, 6)) throw precondition_error("Conway-Gordon sum needs a linear K6");
    auto report = validate_embedding(e);
    if (!report.valid()) throw general_position_error("invalid embedding: " + report.violations.front());
    auto pts = e.points();
    int total = 0;
    for (const auto& [t, u] : disjoint_triangle_pairs()) {
        long lk = linking_number(triangle_cycle(pts[t[0]], pts[t[1]], pts[t[2]]),
                                 triangle_cycle(pts[u[0]], pts[u[1]], pts[u[2]]));
        total += static_cast<int>(std::labs(lk) % 2);
    }
    return total % 2;
}

}  // namespace linfree
