#pragma once

// Generators for linear embeddings whose complements are not free: a knotted
// polygonal core with extra structure attached along boundary-parallel arcs
// or inside small balls. Non-freeness itself is not decided here; what is
// certified is every checkable ingredient (validity, counts, valency or
// connectivity, and determinant != 1 of the designated knotted cycle).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linfree/error.hpp"
#include "linfree/exactgeom.hpp"
#include "linfree/knotlink.hpp"
#include "linfree/rng.hpp"
#include "linfree/spatialgraph.hpp"

namespace linfree {

namespace detail {
inline Point3 ip3(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }
}  // namespace detail

// Six-stick trefoil with determinant 3. Produced by
// find_hexagonal_trefoil(1, 4) and frozen here.
inline PolygonalCycle hexagonal_trefoil() {
    using detail::ip3;
    return {{ip3(2, 2, 4), ip3(4, 3, 0), ip3(0, 3, 4), ip3(4, 1, 2), ip3(3, 3, 3), ip3(0, 1, 2)}};
}

// Seeded search over [0, grid]^3 for a general-position hexagon with knot
// determinant other than 1; returns the first hit.
inline std::optional<PolygonalCycle> find_hexagonal_trefoil(std::uint64_t seed, long grid, long max_draws = 200000) {
    SplitMix64 rng(seed);
    for (long it = 0; it < max_draws; ++it) {
        PolygonalCycle c;
        for (int k = 0; k < 6; ++k) {
            long x = rng.between(0, grid), y = rng.between(0, grid), z = rng.between(0, grid);
            c.points.push_back(detail::ip3(x, y, z));
        }
        if (!general_position(c.points)) continue;
        if (knot_determinant(c) != 1) return c;
    }
    return std::nullopt;
}

// Verification results attached to every generated instance.
struct GenerationReport {
    bool valid = false;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::optional<std::size_t> min_valency;
    std::optional<int> vertex_connectivity;
    std::vector<VertexId> designated_cycle;
    Integer determinant = 0;
    std::map<std::string, std::string> params;
};

struct GeneratedInstance {
    LinearEmbedding embedding;
    GenerationReport report;
};

inline PolygonalCycle cycle_of(const LinearEmbedding& e, const std::vector<VertexId>& ids) {
    PolygonalCycle c;
    for (auto v : ids) c.points.push_back(e.at(v));
    return c;
}

// ---------------------------------------------------------------- blobs

struct Thm3Params {
    int n = 1;
    PolygonalCycle core = hexagonal_trefoil();
    // ball i is centred at core vertex i pushed outward by blob_radius * u_i,
    // u_i the integer direction away from both neighbouring core vertices;
    // its Euclidean radius is blob_radius * |u_i|
    Rational blob_radius = ratio(1, 20);
    std::uint64_t seed = 0;
};

// Vertex ids: copy i in 0..5 uses i*(n+1) for its core vertex and
// i*(n+1) + r, r = 1..n, for its blob vertices.
inline VertexId thm3_id(int n, int copy, int role) { return copy * (n + 1) + role; }

namespace detail {

struct Ball {
    Point3 center;
    Rational radius2;
};

// squared distance from p to the closed segment ab
inline Rational dist2_point_segment(const Point3& p, const Point3& a, const Point3& b) {
    Point3 d = b - a;
    Rational t = dot(p - a, d) / norm2(d);
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return norm2(p - lerp(a, b, t));
}

inline bool balls_disjoint(const Ball& a, const Ball& b) {
    Rational gap = norm2(a.center - b.center) - a.radius2 - b.radius2;
    return gap > 0 && gap * gap > 4 * a.radius2 * b.radius2;
}

// integer vector with negative dot against both neighbour directions
inline Point3 outward_direction(const Point3& d1, const Point3& d2) {
    Point3 u = Rational(-1) * (d1 + d2);
    if (sign(dot(u, d1)) < 0 && sign(dot(u, d2)) < 0) return u;
    for (long m = 1; m <= 4; ++m)
        for (long x = -m; x <= m; ++x)
            for (long y = -m; y <= m; ++y)
                for (long z = -m; z <= m; ++z) {
                    Point3 c = ip3(x, y, z);
                    if (sign(dot(c, d1)) < 0 && sign(dot(c, d2)) < 0) return c;
                }
    throw degenerate_error("no outward direction at a core vertex");
}

}  // namespace detail

// Hexagonal (or other) knotted core with a K_{n+1} glued at each core
// vertex, each blob inside its own small ball touching the core only at that
// vertex.
inline GeneratedInstance theorem3_graph(const Thm3Params& p) {
    if (p.n < 1) throw precondition_error("theorem3_graph needs n >= 1");
    if (p.core.size() != 6) throw precondition_error("theorem3_graph core must have 6 vertices");
    if (sign(p.blob_radius) <= 0) throw precondition_error("blob radius must be positive");
    if (!general_position(p.core.points)) throw precondition_error("core polygon is not in general position");
    Integer core_det = knot_determinant(p.core);
    if (core_det == 1) throw precondition_error("core polygon has determinant 1; a knotted core is required");

    const int n = p.n;
    const auto& core = p.core.points;
    std::vector<detail::Ball> balls;
    for (std::size_t i = 0; i < 6; ++i) {
        const Point3& v = core[i];
        Point3 u = detail::outward_direction(core[(i + 5) % 6] - v, core[(i + 1) % 6] - v);
        balls.push_back({v + p.blob_radius * u, p.blob_radius * p.blob_radius * norm2(u)});
    }
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j)
            if (!detail::balls_disjoint(balls[i], balls[j]))
                throw precondition_error("blob balls overlap; use a smaller blob_radius");
        for (std::size_t k = 0; k < 6; ++k) {
            if (k == i || (k + 1) % 6 == i) continue;
            if (detail::dist2_point_segment(balls[i].center, core[k], core[(k + 1) % 6]) <= balls[i].radius2)
                throw precondition_error("a blob ball meets a distant core segment; use a smaller blob_radius");
        }
    }

    std::vector<VertexId> ids;
    std::vector<Edge> edges;
    for (int i = 0; i < 6; ++i) {
        for (int r = 0; r <= n; ++r) ids.push_back(thm3_id(n, i, r));
        edges.push_back(make_edge(thm3_id(n, i, 0), thm3_id(n, (i + 1) % 6, 0)));
        for (int r = 0; r <= n; ++r)
            for (int s = r + 1; s <= n; ++s) edges.emplace_back(thm3_id(n, i, r), thm3_id(n, i, s));
    }
    LinearEmbedding e{AbstractGraph(ids, edges), {}};

    GeneralPositionSet gp;
    for (int i = 0; i < 6; ++i) {
        if (!gp.try_add(core[static_cast<std::size_t>(i)])) throw precondition_error("core is degenerate");
        e.coords[thm3_id(n, i, 0)] = core[static_cast<std::size_t>(i)];
    }
    SplitMix64 rng(p.seed);
    const long budget = retry_budget(20000);
    const long M = 64;
    for (int i = 0; i < 6; ++i) {
        const auto& ball = balls[static_cast<std::size_t>(i)];
        // grid half-width in units of blob_radius / M covering the ball
        Rational r_over = ball.radius2 / (p.blob_radius * p.blob_radius);  // |u|^2
        long half = 1;
        while (Rational(half * half) < r_over) ++half;
        half *= M;
        for (int r = 1; r <= n; ++r) {
            bool ok = false;
            for (long attempt = 0; attempt < budget && !ok; ++attempt) {
                Point3 o = detail::ip3(rng.between(-half, half), rng.between(-half, half), rng.between(-half, half));
                Point3 off = (p.blob_radius / M) * o;
                if (!(norm2(off) < ball.radius2)) continue;
                Point3 q = ball.center + off;
                if (gp.try_add(q)) {
                    e.coords[thm3_id(n, i, r)] = q;
                    ok = true;
                }
            }
            if (!ok) throw precondition_error("blob placement retry budget exhausted; use a larger blob_radius");
        }
    }

    GeneratedInstance out{std::move(e), {}};
    auto& rep = out.report;
    rep.valid = validate_embedding(out.embedding).valid();
    rep.vertex_count = out.embedding.graph.order();
    rep.edge_count = out.embedding.graph.edges().size();
    rep.min_valency = min_valency(out.embedding.graph);
    for (int i = 0; i < 6; ++i) rep.designated_cycle.push_back(thm3_id(n, i, 0));
    rep.determinant = knot_determinant(cycle_of(out.embedding, rep.designated_cycle));
    rep.params = {{"n", std::to_string(n)}, {"blob_radius", format_rational(p.blob_radius)},
                  {"seed", std::to_string(p.seed)}};

    // containment: blob vertices strictly inside, core vertex on the sphere
    for (int i = 0; i < 6; ++i) {
        const auto& ball = balls[static_cast<std::size_t>(i)];
        if (norm2(out.embedding.at(thm3_id(n, i, 0)) - ball.center) != ball.radius2)
            throw error("blob ball does not touch its core vertex");
        for (int r = 1; r <= n; ++r)
            if (!(norm2(out.embedding.at(thm3_id(n, i, r)) - ball.center) < ball.radius2))
                throw error("blob vertex escaped its ball");
    }
    if (!rep.valid) throw error("theorem3_graph produced an invalid embedding");
    if (rep.vertex_count != static_cast<std::size_t>(6 * (n + 1))) throw error("theorem3_graph vertex count mismatch");
    if (*rep.min_valency != static_cast<std::size_t>(n)) throw error("theorem3_graph min valency mismatch");
    if (rep.determinant == 1) throw error("theorem3_graph core lost its knottedness");
    return out;
}

// ---------------------------------------------------------------- cubes

enum class CubeVariant { G1, G2 };

// Vertex ids inside one gadget H: a_j -> j-1, b_j -> n+j-1 (j = 1..n).
inline VertexId cube_a([[maybe_unused]] int n, int j) { return j - 1; }
inline VertexId cube_b(int n, int j) { return n + j - 1; }

// K_{n,n} on {a_j}, {b_j} plus the paths a_1..a_n and b_1..b_n.
inline AbstractGraph gadget_graph(int n) {
    std::vector<VertexId> ids;
    std::vector<Edge> es;
    for (int j = 1; j <= n; ++j) ids.push_back(cube_a(n, j)), ids.push_back(cube_b(n, j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) es.emplace_back(cube_a(n, i), cube_b(n, j));
    for (int i = 1; i < n; ++i) {
        es.emplace_back(cube_a(n, i), cube_a(n, i + 1));
        es.emplace_back(cube_b(n, i), cube_b(n, i + 1));
    }
    return {ids, es};
}

// The literal positions in the cube [1,n]^3 before any perturbation:
// G1: a_i = (n/2, i, n), b_i = (i, 1, 1); G2: a_i = (n+1-i, 1, 1), b_i = (n/2, i, n).
inline std::map<VertexId, Point3> cube_literal_coordinates(CubeVariant variant, int n) {
    std::map<VertexId, Point3> c;
    Rational half = ratio(n, 2);
    for (int i = 1; i <= n; ++i) {
        if (variant == CubeVariant::G1) {
            c[cube_a(n, i)] = {half, Rational(i), Rational(n)};
            c[cube_b(n, i)] = {Rational(i), Rational(1), Rational(1)};
        } else {
            c[cube_a(n, i)] = {Rational(n + 1 - i), Rational(1), Rational(1)};
            c[cube_b(n, i)] = {half, Rational(i), Rational(n)};
        }
    }
    return c;
}

// Literal cube positions moved into general position. Vertex k (in id order,
// k = 0..2n-1) is shifted by eta * (t, t^2, t^3) with t = k + 1 and
// eta = 1 / (8 n (2n)^3 s), s = 1, 2, ... until the set is in general
// position; every coordinate moves by less than 1/(8n), so each vertex moves
// by less than 1/(4n).
inline LinearEmbedding cube_embedding(CubeVariant variant, int n) {
    if (n < 2) throw precondition_error("cube_embedding needs n >= 2");
    auto literal = cube_literal_coordinates(variant, n);
    AbstractGraph g = gadget_graph(n);
    const long budget = retry_budget(64);
    const long span = 2L * n;
    for (long s = 1; s <= budget; ++s) {
        Rational eta = ratio(1, 8L * n * span * span * span * s);
        LinearEmbedding e{g, {}};
        long k = 0;
        for (auto v : g.vertices()) {
            Rational t(k + 1);
            e.coords[v] = literal.at(v) + eta * Point3{t, t * t, t * t * t};
            ++k;
        }
        if (validate_embedding(e).valid()) return e;
    }
    throw precondition_error("cube perturbation did not reach general position within budget");
}

struct Thm4Params {
    int n = 2;
    Rational shear = ratio(1, 2);  // lean of the top and front faces
    std::uint64_t seed = 0;
    PolygonalCycle core = hexagonal_trefoil();
};

// Vertex ids: copy i in 0..5 holds a_{i,j} = 2n i + j - 1 and
// b_{i,j} = 2n i + n + j - 1.
inline VertexId thm4_a(int n, int copy, int j) { return 2 * n * copy + j - 1; }
inline VertexId thm4_b(int n, int copy, int j) { return 2 * n * copy + n + j - 1; }

inline AbstractGraph theorem4_abstract_graph(int n) {
    std::vector<VertexId> ids;
    std::vector<Edge> es;
    for (int c = 0; c < 6; ++c) {
        for (int j = 1; j <= n; ++j) ids.push_back(thm4_a(n, c, j)), ids.push_back(thm4_b(n, c, j));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) es.emplace_back(thm4_a(n, c, i), thm4_b(n, c, j));
        for (int i = 1; i < n; ++i) {
            es.emplace_back(thm4_a(n, c, i), thm4_a(n, c, i + 1));
            es.emplace_back(thm4_b(n, c, i), thm4_b(n, c, i + 1));
        }
        for (int j = 1; j <= n; ++j) es.push_back(make_edge(thm4_b(n, c, j), thm4_a(n, (c + 1) % 6, j)));
    }
    return {ids, es};
}

inline std::vector<VertexId> theorem4_designated_cycle(int n) {
    std::vector<VertexId> c;
    for (int i = 0; i < 6; ++i) c.push_back(thm4_a(n, i, 1)), c.push_back(thm4_b(n, i, 1));
    return c;
}

// Six sheared, shrunken cube gadgets (G1, G2 alternating) stationed at the
// vertices of the knotted core, joined b_{i,j} -> a_{i+1,j}. The scale
// starts at 1/(16 n (1 + shear)) of the core's unit and halves until the
// designated 12-gon keeps the core's determinant; a seeded jitter far below
// the gadget scale then brings all 12n vertices into general position.
inline GeneratedInstance theorem4_graph(const Thm4Params& p) {
    if (p.n < 2) throw precondition_error("theorem4_graph needs n >= 2");
    if (sign(p.shear) <= 0) throw precondition_error("shear must be positive");
    if (p.core.size() != 6) throw precondition_error("theorem4_graph core must have 6 vertices");
    const int n = p.n;
    Integer core_det = knot_determinant(p.core);
    if (core_det == 1) throw precondition_error("core polygon has determinant 1; a knotted core is required");

    std::array<LinearEmbedding, 2> cubes{cube_embedding(CubeVariant::G1, n), cube_embedding(CubeVariant::G2, n)};
    AbstractGraph g = theorem4_abstract_graph(n);
    auto designated = theorem4_designated_cycle(n);
    const Rational centre = ratio(n + 1, 2);
    auto shear_map = [&](const Point3& x) {
        Point3 c{x.x - centre, x.y - centre, x.z - centre};
        return Point3{c.x + p.shear * c.z, c.y + p.shear * c.z, c.z};
    };

    const long budget = retry_budget(12);
    std::string last_failure = "none";
    for (long attempt = 0; attempt < budget; ++attempt) {
        Rational scale = ratio(1, 16L * n) / (1 + p.shear);
        for (long h = 0; h < attempt; ++h) scale /= 2;
        LinearEmbedding e{g, {}};
        GeneralPositionSet gp;
        SplitMix64 rng(derive_seed(p.seed, static_cast<std::uint64_t>(attempt)));
        const long J = 1000;
        Rational jitter_unit = scale / (Rational(64L * n) * J);
        bool placed = true;
        for (int c = 0; c < 6 && placed; ++c) {
            const auto& cube = cubes[static_cast<std::size_t>(c % 2)];
            const Point3& station = p.core.points[static_cast<std::size_t>(c)];
            for (int j = 1; j <= n && placed; ++j)
                for (int role = 0; role < 2 && placed; ++role) {
                    VertexId local = role == 0 ? cube_a(n, j) : cube_b(n, j);
                    VertexId global = role == 0 ? thm4_a(n, c, j) : thm4_b(n, c, j);
                    Point3 base = station + scale * shear_map(cube.at(local));
                    bool ok = false;
                    for (long t = 0; t < retry_budget(20000) && !ok; ++t) {
                        Point3 q = base + jitter_unit * detail::ip3(rng.between(-J, J), rng.between(-J, J),
                                                                    rng.between(-J, J));
                        if (gp.try_add(q)) {
                            e.coords[global] = q;
                            ok = true;
                        }
                    }
                    placed = ok;
                }
        }
        if (!placed) {
            last_failure = "jitter could not reach general position";
            continue;
        }
        Integer det = knot_determinant(cycle_of(e, designated));
        if (det != core_det) {
            last_failure = "designated cycle determinant " + det.get_str() + " differs from core " + core_det.get_str();
            continue;
        }
        GeneratedInstance out{std::move(e), {}};
        auto& rep = out.report;
        rep.valid = validate_embedding(out.embedding).valid();
        rep.vertex_count = g.order();
        rep.edge_count = g.edges().size();
        rep.vertex_connectivity = vertex_connectivity(g);
        rep.designated_cycle = designated;
        rep.determinant = det;
        rep.params = {{"n", std::to_string(n)},
                      {"shear", format_rational(p.shear)},
                      {"scale", format_rational(scale)},
                      {"seed", std::to_string(p.seed)}};
        if (!rep.valid) throw error("theorem4_graph: invalid embedding (shear " + format_rational(p.shear) + ")");
        if (rep.vertex_count != static_cast<std::size_t>(12 * n))
            throw error("theorem4_graph: vertex count mismatch (shear " + format_rational(p.shear) + ")");
        if (*rep.vertex_connectivity < n)
            throw error("theorem4_graph: vertex connectivity below n (shear " + format_rational(p.shear) + ")");
        return out;
    }
    throw error("theorem4_graph failed: " + last_failure + " (shear " + format_rational(p.shear) + ")");
}

}  // namespace linfree
