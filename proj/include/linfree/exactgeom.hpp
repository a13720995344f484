#pragma once

// Exact rational predicates in 3D and 2D. Nothing here rounds; every
// decision is the sign of an exact determinant.

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "linfree/error.hpp"
#include "linfree/rational.hpp"

namespace linfree {

struct Point3 {
    Rational x, y, z;

    friend bool operator==(const Point3&, const Point3&) = default;
    const Rational& operator[](int c) const { return c == 0 ? x : (c == 1 ? y : z); }
    Rational& operator[](int c) { return c == 0 ? x : (c == 1 ? y : z); }
};

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

inline bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline std::ostream& operator<<(std::ostream& os, const Point3& p) {
    return os << '(' << p.x << ',' << p.y << ',' << p.z << ')';
}

inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rational norm2(const Point3& a) { return dot(a, a); }

// a + t (b - a)
inline Point3 lerp(const Point3& a, const Point3& b, const Rational& t) { return a + t * (b - a); }

struct Segment {
    Point3 a, b;
};

struct Triangle {
    Point3 i, j, k;
};

// Primitive integer 3-vector used as a projection direction.
struct Direction {
    std::array<long, 3> v{0, 0, 1};

    friend bool operator==(const Direction&, const Direction&) = default;
    Point3 as_point() const { return {Rational(v[0]), Rational(v[1]), Rational(v[2])}; }
};

inline std::ostream& operator<<(std::ostream& os, const Direction& d) {
    return os << '(' << d.v[0] << ',' << d.v[1] << ',' << d.v[2] << ')';
}

inline Direction make_direction(long x, long y, long z) {
    if (x == 0 && y == 0 && z == 0) throw degenerate_error("zero projection direction");
    long g = std::gcd(std::gcd(x < 0 ? -x : x, y < 0 ? -y : y), z < 0 ? -z : z);
    return Direction{{x / g, y / g, z / g}};
}

// sign of det[q-p; r-p; s-p]
inline int orient3d(const Point3& p, const Point3& q, const Point3& r, const Point3& s) {
    Point3 a = q - p, b = r - p, c = s - p;
    return sign(dot(cross(a, b), c));
}

enum class Side { Plus, Minus, OnPlane };

inline std::ostream& operator<<(std::ostream& os, Side s) {
    return os << (s == Side::Plus ? "Plus" : (s == Side::Minus ? "Minus" : "OnPlane"));
}

inline bool collinear(const Point3& a, const Point3& b, const Point3& c) {
    Point3 n = cross(b - a, c - a);
    return n.x == 0 && n.y == 0 && n.z == 0;
}

// Side of p relative to H^{+/-}_{ijk}: sign of ((j - i) x (k - j)) . (p - j).
inline Side halfspace_side(const Point3& i, const Point3& j, const Point3& k, const Point3& p) {
    Point3 n = cross(j - i, k - j);
    if (n.x == 0 && n.y == 0 && n.z == 0) throw degenerate_error("halfspace of collinear triangle");
    int s = sign(dot(n, p - j));
    return s > 0 ? Side::Plus : (s < 0 ? Side::Minus : Side::OnPlane);
}

// True iff the open segment crosses the open interior of the triangle at a
// single transverse point. Endpoints on the triangle's plane, or a segment
// passing through the triangle's boundary, are general-position violations.
inline bool segment_pierces_triangle(const Segment& s, const Triangle& t) {
    if (collinear(t.i, t.j, t.k)) throw degenerate_error("collinear triangle");
    int sa = orient3d(t.i, t.j, t.k, s.a);
    int sb = orient3d(t.i, t.j, t.k, s.b);
    if (sa == 0 || sb == 0) throw general_position_error("segment endpoint lies on the triangle's plane");
    if (sa == sb) return false;
    int e0 = orient3d(s.a, s.b, t.i, t.j);
    int e1 = orient3d(s.a, s.b, t.j, t.k);
    int e2 = orient3d(s.a, s.b, t.k, t.i);
    if (e0 == 0 || e1 == 0 || e2 == 0) {
        // the line meets the boundary line of an edge; only a violation when
        // it actually lands on the closed triangle
        bool all_nonneg = e0 >= 0 && e1 >= 0 && e2 >= 0;
        bool all_nonpos = e0 <= 0 && e1 <= 0 && e2 <= 0;
        if (all_nonneg || all_nonpos)
            throw general_position_error("segment passes through the triangle's boundary");
        return false;
    }
    return e0 == e1 && e1 == e2;
}

// Integer coordinates proportional to the input (common denominator cleared).
// All orientation predicates are invariant under this positive scaling.
struct IntPoint3 {
    Integer x, y, z;
};

inline std::vector<IntPoint3> to_integer_frame(std::span<const Point3> pts) {
    Integer l = 1;
    for (const auto& p : pts)
        for (int c = 0; c < 3; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p[c].get_den_mpz_t());
    std::vector<IntPoint3> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        IntPoint3 q;
        q.x = p.x.get_num() * (l / p.x.get_den());
        q.y = p.y.get_num() * (l / p.y.get_den());
        q.z = p.z.get_num() * (l / p.z.get_den());
        out.push_back(std::move(q));
    }
    return out;
}

namespace detail {

inline int orient3d_int(const IntPoint3& p, const IntPoint3& q, const IntPoint3& r, const IntPoint3& s) {
    Integer ax = q.x - p.x, ay = q.y - p.y, az = q.z - p.z;
    Integer bx = r.x - p.x, by = r.y - p.y, bz = r.z - p.z;
    Integer cx = s.x - p.x, cy = s.y - p.y, cz = s.z - p.z;
    Integer d = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
    return sgn(d);
}

inline bool collinear_int(const IntPoint3& a, const IntPoint3& b, const IntPoint3& c) {
    Integer ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    Integer vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    return uy * vz == uz * vy && uz * vx == ux * vz && ux * vy == uy * vx;
}

}  // namespace detail

// A violating index tuple found by the general-position scan.
struct PositionDefect {
    enum class Kind { Duplicate, Collinear, Coplanar } kind;
    std::vector<std::size_t> indices;
};

// First defect in lexicographic index order: duplicates, then collinear
// triples, then coplanar quadruples (quadruples containing a collinear
// triple are reported as the triple).
inline std::optional<PositionDefect> find_position_defect(std::span<const Point3> points) {
    auto ip = to_integer_frame(points);
    const std::size_t n = ip.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (ip[a].x == ip[b].x && ip[a].y == ip[b].y && ip[a].z == ip[b].z)
                return PositionDefect{PositionDefect::Kind::Duplicate, {a, b}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (detail::collinear_int(ip[a], ip[b], ip[c]))
                    return PositionDefect{PositionDefect::Kind::Collinear, {a, b, c}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (detail::orient3d_int(ip[a], ip[b], ip[c], ip[d]) == 0)
                        return PositionDefect{PositionDefect::Kind::Coplanar, {a, b, c, d}};
    return std::nullopt;
}

// No 3 points collinear and no 4 coplanar (duplicates count as collinear).
inline bool general_position(std::span<const Point3> points) { return !find_position_defect(points).has_value(); }

// Grows a point set one point at a time, refusing points that would break
// general position with those already accepted.
class GeneralPositionSet {
public:
    bool try_add(const Point3& p) {
        const std::size_t k = pts_.size();
        for (std::size_t a = 0; a < k; ++a) {
            if (pts_[a] == p) return false;
            for (std::size_t b = a + 1; b < k; ++b) {
                if (collinear(pts_[a], pts_[b], p)) return false;
                for (std::size_t c = b + 1; c < k; ++c)
                    if (orient3d(pts_[a], pts_[b], pts_[c], p) == 0) return false;
            }
        }
        pts_.push_back(p);
        return true;
    }
    const std::vector<Point3>& points() const { return pts_; }

private:
    std::vector<Point3> pts_;
};

// Index of the coordinate dropped by the projection along dir: the smallest
// index with a nonzero component.
inline int dropped_axis(const Direction& dir) {
    for (int c = 0; c < 3; ++c)
        if (dir.v[c] != 0) return c;
    throw degenerate_error("zero projection direction");
}

// Parallel projection along dir onto the coordinate plane of the two
// remaining axes, kept in increasing index order.
inline Point2 project(const Point3& p, const Direction& dir) {
    int c = dropped_axis(dir);
    Rational t = p[c] / Rational(dir.v[c]);
    int a = c == 0 ? 1 : 0;
    int b = c == 2 ? 1 : 2;
    return {p[a] - t * dir.v[a], p[b] - t * dir.v[b]};
}

inline int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

struct Crossing2d {
    Point2 point;
    Rational t;  // parameter along the first segment
    Rational u;  // parameter along the second segment
};

// Transverse crossing of the two open segments, or nullopt. Touching,
// collinear overlap and parallel segments all report no crossing; the
// diagram builder screens those configurations separately.
inline std::optional<Crossing2d> segments_cross_2d(const Point2& p1, const Point2& p2, const Point2& q1,
                                                   const Point2& q2) {
    int o1 = orient2d(p1, p2, q1), o2 = orient2d(p1, p2, q2);
    int o3 = orient2d(q1, q2, p1), o4 = orient2d(q1, q2, p2);
    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return std::nullopt;
    if (o1 == o2 || o3 == o4) return std::nullopt;
    auto cr = [](const Point2& a, const Point2& b, const Point2& c) -> Rational {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    };
    Rational a3 = cr(q1, q2, p1), a4 = cr(q1, q2, p2);
    Rational t = a3 / (a3 - a4);
    Rational b1 = cr(p1, p2, q1), b2 = cr(p1, p2, q2);
    Rational u = b1 / (b1 - b2);
    Point2 x{p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
    return Crossing2d{std::move(x), std::move(t), std::move(u)};
}

}  // namespace linfree
