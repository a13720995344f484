#include <gtest/gtest.h>

#include "support.hpp"

using namespace linfree;
using oracle::pt;

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(format_rational(parse_rational("-10/4")), "-5/2");
    EXPECT_EQ(format_rational(Rational(3)), "3/1");
    EXPECT_THROW(parse_rational("1/0"), parse_error);
    EXPECT_THROW(parse_rational("1.5"), parse_error);
    EXPECT_THROW(parse_rational(""), parse_error);
    EXPECT_THROW(parse_rational("3/-2"), parse_error);
}

TEST(Rational, DecimalExport) {
    EXPECT_EQ(format_decimal(Rational(1, 3)), "0.333333333333");
    EXPECT_EQ(format_decimal(Rational(-5, 2)), "-2.5");
    EXPECT_EQ(format_decimal(Rational(0)), "0");
    EXPECT_EQ(format_decimal(Rational(1200)), "1200");
}

TEST(Orient3d, Examples) {
    EXPECT_EQ(orient3d(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)), 1);
    EXPECT_EQ(orient3d(pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)), 0);
    EXPECT_EQ(orient3d(pt(1, 0, 0), pt(0, 0, 0), pt(0, 1, 0), pt(0, 0, 1)), -1);
}

TEST(HalfspaceSide, Examples) {
    auto i = pt(0, 0, 0), j = pt(1, 0, 0), k = pt(1, 1, 0);
    EXPECT_EQ(halfspace_side(i, j, k, pt(0, 0, 1)), Side::Plus);
    EXPECT_EQ(halfspace_side(i, j, k, pt(0, 0, -1)), Side::Minus);
    EXPECT_EQ(halfspace_side(i, j, k, pt(2, 2, 0)), Side::OnPlane);
    EXPECT_THROW(halfspace_side(i, j, pt(2, 0, 0), pt(0, 0, 1)), degenerate_error);
}

TEST(SegmentPiercesTriangle, Examples) {
    Triangle t{pt(0, 0, 0), pt(4, 0, 0), pt(0, 4, 0)};
    EXPECT_TRUE(segment_pierces_triangle({pt(1, 1, -1), pt(1, 1, 1)}, t));
    EXPECT_FALSE(segment_pierces_triangle({pt(5, 5, -1), pt(5, 5, 1)}, t));
    EXPECT_THROW(segment_pierces_triangle({pt(1, 1, 0), pt(2, 2, 3)}, t), general_position_error);
    EXPECT_THROW(segment_pierces_triangle({pt(2, 0, -1), pt(2, 0, 1)}, t), general_position_error);
}

TEST(GeneralPosition, Examples) {
    EXPECT_TRUE(general_position(std::vector<Point3>{pt(1, 1, 1), pt(1, -1, -1), pt(-1, 1, -1), pt(-1, -1, 1)}));
    EXPECT_FALSE(general_position(std::vector<Point3>{pt(0, 0, 0), pt(3, 1, 0), pt(1, 5, 0), pt(7, 2, 0)}));
    EXPECT_FALSE(general_position(std::vector<Point3>{pt(0, 0, 0), pt(1, 1, 1), pt(2, 2, 2), pt(5, 0, 1)}));
    EXPECT_FALSE(general_position(std::vector<Point3>{pt(0, 0, 0), pt(0, 0, 0)}));
}

TEST(GeneralPosition, DefectReportsFirstTuple) {
    std::vector<Point3> p{pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(5, 5, 5), pt(1, 1, 0)};
    auto d = find_position_defect(p);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->kind, PositionDefect::Kind::Coplanar);
    EXPECT_EQ(d->indices, (std::vector<std::size_t>{0, 1, 2, 4}));
}

TEST(Projection, Examples) {
    EXPECT_EQ(project(pt(1, 2, 3), make_direction(0, 0, 1)), (Point2{Rational(1), Rational(2)}));
    EXPECT_EQ(project(pt(1, 2, 3), make_direction(0, 0, 7)).x, Rational(1));
    EXPECT_EQ(dropped_axis(make_direction(0, 3, 1)), 1);
    auto c = segments_cross_2d({Rational(0), Rational(0)}, {Rational(2), Rational(2)}, {Rational(0), Rational(2)},
                               {Rational(2), Rational(0)});
    ASSERT_TRUE(c);
    EXPECT_EQ(c->point, (Point2{Rational(1), Rational(1)}));
    EXPECT_EQ(c->t, Rational(1, 2));
    EXPECT_FALSE(segments_cross_2d({Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(1)},
                                   {Rational(2), Rational(1)}));
}

TEST(Projection, PointsProjectAlongDirection) {
    SplitMix64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Point3 p = gen::random_point(rng, -20, 20);
        Direction d = make_direction(rng.between(-3, 3), rng.between(-3, 3), rng.between(1, 3));
        Rational s = ratio(rng.between(-5, 5), 3);
        EXPECT_EQ(project(p, d), project(p + s * d.as_point(), d));
    }
}

TEST(ExactgeomProperty, Orient3dAntisymmetric) {
    SplitMix64 rng(1);
    for (int it = 0; it < 300; ++it) {
        std::array<Point3, 4> p{gen::random_point(rng, -9, 9), gen::random_point(rng, -9, 9),
                                gen::random_point(rng, -9, 9), gen::random_point(rng, -9, 9)};
        int s = orient3d(p[0], p[1], p[2], p[3]);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto q = p;
                std::swap(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]);
                EXPECT_EQ(orient3d(q[0], q[1], q[2], q[3]), -s);
            }
    }
}

TEST(ExactgeomProperty, HalfspaceReversal) {
    SplitMix64 rng(2);
    for (int it = 0; it < 300; ++it) {
        auto pts = gen::general_points(rng, 4, -9, 9);
        Side s = halfspace_side(pts[0], pts[1], pts[2], pts[3]);
        Side r = halfspace_side(pts[2], pts[1], pts[0], pts[3]);
        EXPECT_NE(s, Side::OnPlane);
        EXPECT_EQ(s == Side::Plus, r == Side::Minus);
    }
}

TEST(ExactgeomProperty, PiercingSymmetries) {
    SplitMix64 rng(3);
    int hits = 0;
    for (int it = 0; it < 400; ++it) {
        auto p = gen::general_points(rng, 5, -6, 6);
        bool base = segment_pierces_triangle({p[3], p[4]}, {p[0], p[1], p[2]});
        hits += base;
        std::array<std::size_t, 3> perm{0, 1, 2};
        do {
            EXPECT_EQ(segment_pierces_triangle({p[3], p[4]}, {p[perm[0]], p[perm[1]], p[perm[2]]}), base);
            EXPECT_EQ(segment_pierces_triangle({p[4], p[3]}, {p[perm[0]], p[perm[1]], p[perm[2]]}), base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    EXPECT_GT(hits, 0);
}

TEST(ExactgeomProperty, TranslationAndScaleInvariance) {
    SplitMix64 rng(4);
    for (int it = 0; it < 200; ++it) {
        auto p = gen::general_points(rng, 5, -8, 8);
        Rational s = ratio(rng.between(1, 9), rng.between(1, 9));
        Point3 shift{ratio(rng.between(-50, 50), 7), ratio(rng.between(-50, 50), 3), Rational(rng.between(-9, 9))};
        std::vector<Point3> q;
        for (const auto& x : p) q.push_back(s * x + shift);
        EXPECT_EQ(orient3d(p[0], p[1], p[2], p[3]), orient3d(q[0], q[1], q[2], q[3]));
        EXPECT_EQ(halfspace_side(p[0], p[1], p[2], p[4]), halfspace_side(q[0], q[1], q[2], q[4]));
        EXPECT_EQ(segment_pierces_triangle({p[3], p[4]}, {p[0], p[1], p[2]}),
                  segment_pierces_triangle({q[3], q[4]}, {q[0], q[1], q[2]}));
        EXPECT_TRUE(general_position(q));
    }
}

TEST(ExactgeomProperty, PiercingMatchesParametricOracle) {
    SplitMix64 rng(5);
    int checked = 0, hits = 0;
    while (checked < 1000) {
        std::array<Point3, 5> p;
        for (auto& x : p) x = gen::random_point(rng, -5, 5);
        if (collinear(p[0], p[1], p[2]) || p[3] == p[4]) continue;
        auto expect = oracle::pierces(p[3], p[4], p[0], p[1], p[2]);
        if (!expect) {
            EXPECT_ANY_THROW(segment_pierces_triangle({p[3], p[4]}, {p[0], p[1], p[2]}));
            continue;
        }
        EXPECT_EQ(segment_pierces_triangle({p[3], p[4]}, {p[0], p[1], p[2]}), *expect);
        hits += *expect;
        ++checked;
    }
    EXPECT_GT(hits, 20);
}
