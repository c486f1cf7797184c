#include "momentum/polyhedra.hpp"

#include "support/lp_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace momentum;

namespace {

QVec v(std::initializer_list<long> xs) { return QVec::from_ints(xs); }
Rational q(long p, long d = 1) { return make_rational(p, d); }

std::set<QVec> vertex_set(const Polyhedron& p) {
    auto c = p.canonical();
    return {c.points().begin(), c.points().end()};
}

std::set<QVec> ray_set(const Polyhedron& p) {
    auto r = all_rays(p.canonical());
    return {r.begin(), r.end()};
}

Polyhedron square(long lo, long hi) { return hull({v({lo, lo}), v({hi, lo}), v({lo, hi}), v({hi, hi})}); }

std::vector<QVec> random_points(std::mt19937& gen, std::size_t d, std::size_t n, long range) {
    std::uniform_int_distribution<long> c(-range, range);
    std::vector<QVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
        QVec x(d);
        for (auto& e : x) e = c(gen);
        pts.push_back(x);
    }
    return pts;
}

}  // namespace

TEST(Hull, Examples) {
    auto sq = hull({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1}), QVec{q(1, 2), q(1, 2)}});
    EXPECT_EQ(vertex_set(sq), (std::set<QVec>{v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}));
    EXPECT_EQ(sq.inequalities().size(), 4u);

    auto pt = hull({v({1, 2})});
    EXPECT_EQ(vertex_set(pt), std::set<QVec>{v({1, 2})});
    EXPECT_EQ(pt.affine_dimension(), 0);
    EXPECT_TRUE(pt.contains(v({1, 2})));
    EXPECT_FALSE(pt.contains(v({1, 1})));

    std::vector<QVec> hex = {v({1, 2}), v({-1, 3}), v({3, -2}), v({-3, 1}), v({2, -3}), v({-2, -1})};
    EXPECT_EQ(vertex_set(hull(hex)), std::set<QVec>(hex.begin(), hex.end()));
    EXPECT_THROW(hull({}), DomainError);
    EXPECT_THROW(hull({v({1}), v({1, 2})}), ShapeError);
}

TEST(ConeFromRays, Examples) {
    EXPECT_EQ(ray_set(cone_from_rays({v({1, 0}), v({1, 1}), v({1, 2})})), (std::set<QVec>{v({1, 0}), v({1, 2})}));
    auto origin = cone_from_rays(2, {});
    EXPECT_EQ(vertex_set(origin), std::set<QVec>{v({0, 0})});
    EXPECT_TRUE(is_proper(origin));
    auto line = cone_from_rays({v({1, 0}), v({-1, 0})});
    EXPECT_EQ(line.lines().size(), 1u);
    EXPECT_FALSE(is_proper(line));
}

TEST(DdConvert, Examples) {
    auto c = cone_from_rays({v({1, 0}), v({1, 1})});
    std::set<Halfspace> hs(c.inequalities().begin(), c.inequalities().end());
    EXPECT_EQ(hs, (std::set<Halfspace>{{v({0, 1}), 0}, {v({1, -1}), 0}}));

    auto sq = Polyhedron::from_halfspaces(
        2, {{v({1, 0}), 0}, {v({-1, 0}), -1}, {v({0, 1}), 0}, {v({0, -1}), -1}});
    EXPECT_EQ(vertex_set(sq), vertex_set(square(0, 1)));

    auto all = Polyhedron::universe(3);
    EXPECT_EQ(all.lines().size(), 3u);
    EXPECT_TRUE(all.inequalities().empty());
}

TEST(Intersect, Examples) {
    auto rect = intersect(square(0, 1), Polyhedron::from_halfspaces(2, {{v({1, 0}), q(1, 2)}}));
    EXPECT_EQ(vertex_set(rect),
              (std::set<QVec>{QVec{q(1, 2), q(0)}, QVec{q(1), q(0)}, QVec{q(1, 2), q(1)}, QVec{q(1), q(1)}}));
    auto sector = intersect(cone_from_rays({v({1, 0}), v({0, 1})}), cone_from_rays({v({1, 1}), v({-1, 1})}));
    EXPECT_EQ(ray_set(sector), (std::set<QVec>{v({1, 1}), v({0, 1})}));
    EXPECT_TRUE(intersect(square(0, 1), square(2, 3)).is_empty());
    EXPECT_THROW(intersect(square(0, 1), hull({v({0, 0, 0})})), ShapeError);
}

TEST(JoinWithOrigin, Examples) {
    EXPECT_EQ(vertex_set(join_with_origin(hull({v({1, 2}), v({2, 1})}))),
              (std::set<QVec>{v({0, 0}), v({1, 2}), v({2, 1})}));
    EXPECT_EQ(join_with_origin(square(-1, 1)), square(-1, 1));
    EXPECT_EQ(join_with_origin(hull({v({-1}), v({1})})), hull({v({-1}), v({1})}));
    EXPECT_EQ(vertex_set(join_with_origin(hull({v({3, 1})}))), (std::set<QVec>{v({0, 0}), v({3, 1})}));
    EXPECT_THROW(join_with_origin(cone_from_rays({v({1, 0})})), DomainError);
}

TEST(ConeOver, Examples) {
    EXPECT_EQ(ray_set(cone_over(hull({v({1, 1})}))), std::set<QVec>{v({1, 1})});
    EXPECT_EQ(cone_over(hull({v({0, 0}), v({1, 0}), v({1, 2})})), cone_from_rays({v({1, 0}), v({1, 2})}));
    EXPECT_EQ(cone_over(hull({v({1, 0}), v({0, 1})})), cone_from_rays({v({1, 0}), v({0, 1})}));
}

TEST(ShiftSlice, Examples) {
    auto moved = shift(square(0, 2), v({0, -1}));
    EXPECT_EQ(moved, hull({v({0, -1}), v({2, -1}), v({0, 1}), v({2, 1})}));
    EXPECT_EQ(slice(moved, {v({1, 0})}), hull({v({0}), v({2})}));
    EXPECT_TRUE(slice(Polyhedron::empty(2), {v({1, 0})}).is_empty());
    EXPECT_THROW(slice(moved, {v({1, 0}), v({2, 0})}), DomainError);
}

TEST(Proper, Examples) {
    EXPECT_TRUE(is_proper(cone_from_rays({v({1, 0}), v({0, 1})})));
    EXPECT_FALSE(is_proper(cone_from_rays({v({1, 0}), v({-1, 0})})));
    EXPECT_TRUE(contains(cone_from_rays({v({1, 0}), v({0, 1})}), QVec{q(3, 2), q(0)}));
    EXPECT_THROW(is_proper(square(0, 1)), DomainError);
}

TEST(Empty, Canonical) {
    auto e = Polyhedron::from_halfspaces(1, {{v({1}), 1}, {v({-1}), 1}}).canonical();
    EXPECT_TRUE(e.is_empty());
    EXPECT_EQ(e, Polyhedron::empty(1));
    EXPECT_FALSE(e.contains(v({0})));
    EXPECT_TRUE(subset(e, hull({v({5})})));
    EXPECT_FALSE(subset(hull({v({5})}), e));
}

TEST(Property, RoundTrip) {
    std::mt19937 gen(5);
    for (int t = 0; t < 40; ++t) {
        std::size_t d = 2 + t % 3;
        auto p = hull(random_points(gen, d, 4 + t % 6, 4));
        auto from_h = Polyhedron::from_halfspaces(d, p.inequalities(), p.equalities()).canonical();
        EXPECT_EQ(from_h, p);
        auto from_v = Polyhedron::from_generators(d, p.points(), p.rays(), p.lines()).canonical();
        EXPECT_EQ(from_v, p);
        EXPECT_EQ(dd_convert(dd_convert(p)), p);
    }
}

TEST(Property, MembershipAgreesWithLpOracle) {
    std::mt19937 gen(99);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 3);
    long disagreements = 0, inside = 0;
    for (int t = 0; t < 20; ++t) {
        std::size_t d = 2 + t % 3;
        auto gens = random_points(gen, d, 3 + t % 7, 3);
        // a few polyhedra with recession directions
        std::vector<QVec> rays;
        if (t % 5 == 4) rays = random_points(gen, d, 2, 2);
        auto p = Polyhedron::from_generators(d, gens, rays).canonical();
        for (const auto& s : gens) EXPECT_TRUE(p.contains(s));
        for (int k = 0; k < 500; ++k) {
            QVec x(d);
            for (auto& e : x) e = make_rational(num(gen), den(gen)) / 2;
            bool got = p.contains(x);
            if (got != oracle::in_hull(gens, rays, x)) ++disagreements;
            inside += got;
        }
    }
    EXPECT_EQ(disagreements, 0);
    EXPECT_GT(inside, 200);
}

TEST(Property, IntersectCommutativeAssociative) {
    std::mt19937 gen(17);
    for (int t = 0; t < 20; ++t) {
        std::size_t d = 2 + t % 2;
        auto a = hull(random_points(gen, d, 6, 3));
        auto b = hull(random_points(gen, d, 6, 3));
        auto c = hull(random_points(gen, d, 6, 3));
        EXPECT_EQ(intersect(a, b), intersect(b, a));
        EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    }
}

TEST(Property, ConeOverJoinEqualsConeOver) {
    std::mt19937 gen(23);
    for (int t = 0; t < 30; ++t) {
        auto p = hull(random_points(gen, 2 + t % 3, 5, 3));
        EXPECT_EQ(cone_over(join_with_origin(p)), cone_over(p));
    }
}

TEST(Property, EqualityIgnoresGeneratorOrder) {
    std::mt19937 gen(31);
    for (int t = 0; t < 20; ++t) {
        auto pts = random_points(gen, 3, 7, 3);
        auto a = hull(pts);
        std::shuffle(pts.begin(), pts.end(), gen);
        pts.push_back(pts.front());
        auto b = hull(pts);
        EXPECT_TRUE(equal(a, b));
        EXPECT_TRUE(equal(b, a));
        EXPECT_TRUE(equal(a, a));
    }
}

TEST(Property, SubsetAndLinearImage) {
    auto sq = square(0, 2);
    EXPECT_TRUE(subset(square(0, 1), sq));
    EXPECT_FALSE(subset(sq, square(0, 1)));
    QMat swap{{0, 1}, {1, 0}};
    auto tri = hull({v({0, 0}), v({1, 0}), v({0, 3})});
    EXPECT_EQ(linear_image(tri, swap), hull({v({0, 0}), v({0, 1}), v({3, 0})}));
}
