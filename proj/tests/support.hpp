#pragma once

// Test-only oracles and random generators. None of this calls the library's
// predicates: intersections are solved parametrically, linking numbers are
// counted through spanning disks, colorings are brute-forced.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "linfree/linfree.hpp"

namespace oracle {

using namespace linfree;

inline Point3 pt(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

// Line-plane intersection then same-side tests against the triangle's normal.
// nullopt when the instance is degenerate (endpoint on the plane or hit on
// the boundary).
inline std::optional<bool> pierces(const Point3& a, const Point3& b, const Point3& p, const Point3& q,
                                   const Point3& r) {
    Point3 n = cross(q - p, r - p);
    Rational da = dot(n, a - p), db = dot(n, b - p);
    if (da == 0 || db == 0) return std::nullopt;
    if ((da > 0) == (db > 0)) return false;
    Rational t = da / (da - db);
    Point3 x = a + t * (b - a);
    Rational s0 = dot(n, cross(q - p, x - p));
    Rational s1 = dot(n, cross(r - q, x - q));
    Rational s2 = dot(n, cross(p - r, x - r));
    if (s0 == 0 || s1 == 0 || s2 == 0) {
        if ((s0 >= 0 && s1 >= 0 && s2 >= 0) || (s0 <= 0 && s1 <= 0 && s2 <= 0)) return std::nullopt;
        return false;
    }
    return (s0 > 0) == (s1 > 0) && (s1 > 0) == (s2 > 0);
}

// Signed piercings of cycle through the flat disk bounded by triangle t.
inline long disk_linking(const std::array<Point3, 3>& t, const PolygonalCycle& c) {
    Point3 n = cross(t[1] - t[0], t[2] - t[1]);
    long lk = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Point3& a = c.at(k);
        const Point3& b = c.at(k + 1);
        auto hit = pierces(a, b, t[0], t[1], t[2]);
        if (hit && *hit) lk += sign(dot(b - a, n));
    }
    return lk;
}

inline int conway_gordon_by_disks(const std::array<Point3, 6>& p) {
    int sum = 0;
    for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
        std::vector<Point3> a, b;
        for (int i = 0; i < 6; ++i) ((mask >> i) & 1 ? a : b).push_back(p[static_cast<std::size_t>(i)]);
        long lk = disk_linking({a[0], a[1], a[2]}, PolygonalCycle{b});
        sum += static_cast<int>(std::labs(lk) % 2);
    }
    return sum % 2;
}

// Fox 3-colorings of a single-component diagram counted by brute force over
// arc colors. The arc structure is rebuilt here from the crossing list.
inline long count_three_colorings(const Diagram& d) {
    struct Cross {
        Rational under, over;
    };
    std::vector<Cross> xs;
    for (const auto& c : d.crossings) {
        bool a_over = c.over == c.seg_a;
        Rational pa = Rational(static_cast<long>(c.seg_a)) + c.param_a;
        Rational pb = Rational(static_cast<long>(c.seg_b)) + c.param_b;
        xs.push_back(a_over ? Cross{pb, pa} : Cross{pa, pb});
    }
    std::vector<Rational> unders;
    for (const auto& x : xs) unders.push_back(x.under);
    std::sort(unders.begin(), unders.end());
    const std::size_t m = unders.size();
    if (m == 0) return 3;
    auto arc_of = [&](const Rational& pos) {
        std::size_t k = 0;
        while (k < m && unders[k] < pos) ++k;
        return k % m;
    };
    struct Rel {
        std::size_t in, out, over;
    };
    std::vector<Rel> rels;
    for (const auto& x : xs) {
        std::size_t k = static_cast<std::size_t>(std::lower_bound(unders.begin(), unders.end(), x.under) - unders.begin());
        rels.push_back({k % m, (k + 1) % m, arc_of(x.over)});
    }
    long count = 0;
    std::vector<int> col(m, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            for (const auto& r : rels)
                if ((2 * col[r.over] - col[r.in] - col[r.out]) % 3 != 0) return;
            ++count;
            return;
        }
        for (int c = 0; c < 3; ++c) {
            col[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return count;
}

inline Integer laplace_determinant(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Integer term = m[0][c] * laplace_determinant(minor);
        det += c % 2 == 0 ? term : Integer(-term);
    }
    return det;
}

inline long count_hamiltonian_cycles(const AbstractGraph& g) {
    const auto& v = g.vertices();
    std::vector<std::size_t> perm(v.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    long directed = 0;
    do {
        if (perm[0] != 0) break;
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i)
            ok = g.has_edge(v[perm[i]], v[perm[(i + 1) % perm.size()]]);
        directed += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return directed / 2;
}

inline bool connected_without(const AbstractGraph& g, const std::set<VertexId>& removed) {
    std::vector<VertexId> keep;
    for (auto v : g.vertices())
        if (!removed.count(v)) keep.push_back(v);
    if (keep.size() <= 1) return true;
    std::set<VertexId> seen{keep[0]};
    std::vector<VertexId> stack{keep[0]};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (auto w : keep)
            if (!seen.count(w) && g.has_edge(u, w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == keep.size();
}

// Smallest vertex subset whose removal disconnects g; n - 1 when none does.
inline int brute_force_connectivity(const AbstractGraph& g) {
    const auto& v = g.vertices();
    const int n = static_cast<int>(v.size());
    for (int k = 0; k < n - 1; ++k) {
        std::vector<bool> pick(static_cast<std::size_t>(n), false);
        std::fill(pick.end() - k, pick.end(), true);
        do {
            std::set<VertexId> rm;
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) rm.insert(v[static_cast<std::size_t>(i)]);
            if (!connected_without(g, rm)) return k;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n - 1;
}

inline bool brute_isomorphic(const AbstractGraph& g, const AbstractGraph& h) {
    if (g.order() != h.order() || g.edges().size() != h.edges().size()) return false;
    const auto& gv = g.vertices();
    const auto& hv = h.vertices();
    std::vector<std::size_t> perm(gv.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (const auto& [a, b] : g.edges()) {
            if (!h.has_edge(hv[perm[g.index_of(a)]], hv[perm[g.index_of(b)]])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle

namespace gen {

using namespace linfree;

inline Point3 random_point(SplitMix64& rng, long lo, long hi) {
    return {Rational(rng.between(lo, hi)), Rational(rng.between(lo, hi)), Rational(rng.between(lo, hi))};
}

// k points in general position drawn from [lo, hi]^3.
inline std::vector<Point3> general_points(SplitMix64& rng, std::size_t k, long lo, long hi) {
    GeneralPositionSet s;
    while (s.points().size() < k) s.try_add(random_point(rng, lo, hi));
    return s.points();
}

inline PolygonalCycle random_polygon(SplitMix64& rng, std::size_t k, long bound) {
    return PolygonalCycle{general_points(rng, k, 0, bound)};
}

inline LinearEmbedding embed(const AbstractGraph& g, const std::vector<Point3>& pts) {
    LinearEmbedding e{g, {}};
    for (std::size_t i = 0; i < g.order(); ++i) e.coords[g.vertices()[i]] = pts[i];
    return e;
}

inline LinearEmbedding transformed(const LinearEmbedding& e, const Rational& scale, const Point3& shift) {
    LinearEmbedding out{e.graph, {}};
    for (const auto& [v, p] : e.coords) out.coords[v] = scale * p + shift;
    return out;
}

}  // namespace gen
