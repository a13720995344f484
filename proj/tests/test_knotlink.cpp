#include <gtest/gtest.h>

#include "support.hpp"

using namespace linfree;
using oracle::pt;

namespace {

PolygonalCycle square_a() { return {{pt(1, 1, 0), pt(-1, 1, 0), pt(-1, -1, 0), pt(1, -1, 0)}}; }
PolygonalCycle square_b() { return {{pt(0, 0, 1), pt(2, 0, 1), pt(2, 0, -1), pt(0, 0, -1)}}; }

// An arbitrary hexagon, for the coloring cross-check.
PolygonalCycle other_hexagon() {
    return {{pt(0, 0, 0), pt(8, 2, 3), pt(2, 8, 0), pt(3, -1, 4), pt(9, 5, 1), pt(1, 4, 5)}};
}

// Pairs of disjoint cycles in general position together.
std::vector<PolygonalCycle> random_pair(SplitMix64& rng, std::size_t k1, std::size_t k2, long bound) {
    auto pts = gen::general_points(rng, k1 + k2, 0, bound);
    PolygonalCycle a{{pts.begin(), pts.begin() + static_cast<long>(k1)}};
    PolygonalCycle b{{pts.begin() + static_cast<long>(k1), pts.end()}};
    return {a, b};
}

}  // namespace

TEST(GenericDirection, Examples) {
    auto tri = triangle_cycle(pt(0, 0, 0), pt(3, 0, 0), pt(0, 2, 0));
    EXPECT_EQ(generic_direction({tri}), make_direction(0, 0, 1));
    PolygonalCycle vertical{{pt(0, 0, 0), pt(0, 0, 5), pt(3, 1, 2)}};
    EXPECT_NE(generic_direction({vertical}), make_direction(0, 0, 1));
    Diagram d = build_diagram({hexagonal_trefoil()}, generic_direction({hexagonal_trefoil()}));
    EXPECT_GE(d.crossings.size(), 3u);
}

TEST(GenericDirection, EnumerationOrder) {
    auto ds = candidate_directions(2);
    EXPECT_EQ(ds.front(), make_direction(0, 0, 1));
    EXPECT_EQ(ds.size(), 13u + 36u);
    for (const auto& d : ds) {
        long first = d.v[0] != 0 ? d.v[0] : (d.v[1] != 0 ? d.v[1] : d.v[2]);
        EXPECT_GT(first, 0);
    }
}

TEST(BuildDiagram, Examples) {
    EXPECT_TRUE(build_diagram({triangle_cycle(pt(0, 0, 0), pt(3, 0, 0), pt(0, 2, 0))}, make_direction(0, 0, 1))
                    .crossings.empty());
    std::vector<PolygonalCycle> sq{square_a(), square_b()};
    Diagram d = build_diagram(sq, generic_direction(sq));
    std::size_t inter = 0;
    for (const auto& c : d.crossings) inter += d.cycle_of(c.seg_a) != d.cycle_of(c.seg_b);
    EXPECT_EQ(inter, 2u);
    EXPECT_THROW(build_diagram({PolygonalCycle{{pt(0, 0, 0), pt(0, 0, 5), pt(3, 1, 2)}}}, make_direction(0, 0, 1)),
                 general_position_error);
}

TEST(LinkingNumber, Examples) {
    EXPECT_EQ(std::labs(linking_number(square_a(), square_b())), 1);
    EXPECT_EQ(linking_number(square_a(), square_b()), linking_number(square_b(), square_a()));
    EXPECT_EQ(linking_number(square_a(), square_b().reversed()), -linking_number(square_a(), square_b()));
    auto t1 = triangle_cycle(pt(0, 0, 0), pt(2, 0, 1), pt(1, 2, 0));
    auto t2 = triangle_cycle(pt(50, 0, 0), pt(52, 1, 0), pt(51, 2, 2));
    EXPECT_EQ(linking_number(t1, t2), 0);
    EXPECT_THROW(linking_number(t1, triangle_cycle(pt(0, 0, 0), pt(5, 5, 5), pt(1, 7, 3))), precondition_error);
}

TEST(LinkingNumber, LinkedSquaresMatchDiskOracle) {
    // square_a is planar; split along a diagonal the other square avoids
    auto a = square_a();
    PolygonalCycle b;
    for (const auto& p : square_b().points) b.points.push_back(p + Point3{ratio(1, 2), ratio(1, 4), Rational(0)});
    long via_disks = oracle::disk_linking({a.at(0), a.at(1), a.at(2)}, b) +
                     oracle::disk_linking({a.at(0), a.at(2), a.at(3)}, b);
    EXPECT_EQ(std::labs(via_disks), 1);
    EXPECT_EQ(linking_number(a, b), via_disks);
}

TEST(KnotDeterminant, Examples) {
    EXPECT_EQ(knot_determinant(triangle_cycle(pt(0, 0, 0), pt(3, 0, 0), pt(0, 2, 0))), 1);
    EXPECT_EQ(knot_determinant(hexagonal_trefoil()), 3);
}

TEST(KnotDeterminant, TrefoilColoringOracle) {
    // a knot has nontrivial 3-colorings exactly when 3 divides its determinant
    for (const auto& k : {hexagonal_trefoil(), other_hexagon()}) {
        Diagram d = build_diagram({k}, generic_direction({k}));
        Integer det = knot_determinant(d);
        long colorings = oracle::count_three_colorings(d);
        EXPECT_EQ(colorings > 3, det % 3 == 0) << "det " << det;
    }
    Diagram d = build_diagram({hexagonal_trefoil()}, generic_direction({hexagonal_trefoil()}));
    EXPECT_EQ(oracle::count_three_colorings(d), 9);
}

TEST(KnotDeterminant, BareissMatchesCofactorExpansion) {
    SplitMix64 rng(20);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + rng.below(6);
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (auto& row : m)
            for (auto& x : row) x = rng.between(-4, 4);
        if (it % 5 == 0) m[0][0] = 0;
        EXPECT_EQ(bareiss_determinant(m), oracle::laplace_determinant(m));
    }
}

TEST(KnotlinkProperty, LinkingSymmetricAndDirectionIndependent) {
    SplitMix64 rng(21);
    int nonzero = 0;
    for (int it = 0; it < 100; ++it) {
        auto cs = random_pair(rng, 3 + rng.below(3), 3 + rng.below(3), 12);
        auto dirs = generic_directions(cs, 3);
        long lk0 = linking_number(build_diagram(cs, dirs[0]));
        nonzero += lk0 != 0;
        for (std::size_t k = 1; k < 3; ++k) EXPECT_EQ(linking_number(build_diagram(cs, dirs[k])), lk0);
        EXPECT_EQ(linking_number(cs[1], cs[0]), lk0);
        EXPECT_EQ(linking_number(cs[0].reversed(), cs[1]), -lk0);
    }
    EXPECT_GT(nonzero, 0);
}

TEST(KnotlinkProperty, LinkingMatchesDiskOracle) {
    SplitMix64 rng(22);
    int nonzero = 0;
    for (int it = 0; it < 100; ++it) {
        auto cs = random_pair(rng, 3, 3 + rng.below(4), 10);
        long lk = linking_number(cs[0], cs[1]);
        EXPECT_EQ(lk, oracle::disk_linking({cs[0].at(0), cs[0].at(1), cs[0].at(2)}, cs[1]));
        nonzero += lk != 0;
    }
    EXPECT_GT(nonzero, 0);
}

TEST(KnotlinkProperty, DeterminantDirectionIndependentAndOdd) {
    SplitMix64 rng(23);
    int knotted = 0;
    for (int it = 0; it < 100; ++it) {
        auto c = gen::random_polygon(rng, 6 + rng.below(3), 10);
        auto dirs = generic_directions({c}, 3);
        Integer d0 = knot_determinant(build_diagram({c}, dirs[0]));
        EXPECT_EQ(d0 % 2, 1);
        EXPECT_GT(d0, 0);
        knotted += d0 != 1;
        for (std::size_t k = 1; k < 3; ++k) EXPECT_EQ(knot_determinant(build_diagram({c}, dirs[k])), d0);
        EXPECT_EQ(knot_determinant(c.reversed()), d0);
    }
    RecordProperty("knotted", knotted);
}

TEST(KnotlinkProperty, PentagonsAreUnknotted) {
    SplitMix64 rng(24);
    for (int it = 0; it < 500; ++it) EXPECT_EQ(knot_determinant(gen::random_polygon(rng, 5, 20)), 1);
}

TEST(KnotlinkProperty, DeterminantInvariantUnderRigidMotion) {
    auto k = hexagonal_trefoil();
    PolygonalCycle moved;
    for (const auto& p : k.points) moved.points.push_back({p.y + 7, -p.x, p.z + Rational(1, 3)});  // rotate about z
    EXPECT_EQ(knot_determinant(moved), 3);
    PolygonalCycle mirrored;
    for (const auto& p : k.points) mirrored.points.push_back({-p.x, p.y, p.z});
    EXPECT_EQ(knot_determinant(mirrored), 3);
}

TEST(ConwayGordon, Examples) {
    auto e = sample_embedding(complete_graph(6), 100, 7);
    EXPECT_EQ(conway_gordon_sum(e), 1);
    // relabeling the vertices
    LinearEmbedding r{e.graph, {}};
    for (int v = 0; v < 6; ++v) r.coords[v] = e.at((v + 2) % 6);
    EXPECT_EQ(conway_gordon_sum(r), 1);
    auto flat = gen::embed(complete_graph(6), {pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(3, 5, 0), pt(0, 0, 1), pt(2, 7, 9)});
    EXPECT_ANY_THROW(conway_gordon_sum(flat));
    EXPECT_ANY_THROW(conway_gordon_sum(sample_embedding(complete_graph(5), 100, 1)));
}

TEST(ConwayGordon, MatchesDiskOracle) {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto e = sample_embedding(complete_graph(6), 30, s);
        std::array<Point3, 6> p;
        for (int v = 0; v < 6; ++v) p[static_cast<std::size_t>(v)] = e.at(v);
        EXPECT_EQ(conway_gordon_sum(e), oracle::conway_gordon_by_disks(p));
        EXPECT_EQ(conway_gordon_sum(e), 1);
    }
}
