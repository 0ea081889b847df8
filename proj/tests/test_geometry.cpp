#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dlab/geometry.hpp"
#include "dlab/pointsets.hpp"
#include "dlab/rng.hpp"

using namespace dlab;

namespace {

PointSet pts(std::initializer_list<Point> l) {
    PointSet ps;
    ps.points = l;
    return ps;
}

long long choose4(long long n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

// independent distance comparison: exact squared-distance fractions in
// 128-bit arithmetic, safe for |coords| <= 1e4
Ordering dist_ref(const PointSet& ps, int p, int q, SegmentId e) {
    using W = __int128;
    auto d2 = [&](int v, W& num, W& den) {
        W ax = ps[e.i].x, ay = ps[e.i].y, bx = ps[e.j].x, by = ps[e.j].y;
        W wx = bx - ax, wy = by - ay;
        W ux = ps[v].x - ax, uy = ps[v].y - ay;
        W dot = ux * wx + uy * wy, ww = wx * wx + wy * wy;
        if (dot <= 0) {
            num = ux * ux + uy * uy;
            den = 1;
        } else if (dot >= ww) {
            W sx = ps[v].x - bx, sy = ps[v].y - by;
            num = sx * sx + sy * sy;
            den = 1;
        } else {
            W cr = ux * wy - uy * wx;
            num = cr * cr;
            den = ww;
        }
    };
    W pn, pd, qn, qd;
    d2(p, pn, pd);
    d2(q, qn, qd);
    W lhs = pn * qd, rhs = qn * pd;
    return lhs < rhs ? Ordering::Less : lhs > rhs ? Ordering::Greater : Ordering::Equal;
}

}  // namespace

TEST_CASE("orient signs") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orient({0, 0}, {2, 2}, {5, 5}) == 0);
    CHECK(orient({-7, 3}, {-7, 3}, {1, 1}) == 0);
}

TEST_CASE("segment ids normalize and order") {
    SegmentId e(5, 2);
    CHECK(e.i == 2);
    CHECK(e.j == 5);
    CHECK(e.contains(2));
    CHECK(e.contains(5));
    CHECK(!e.contains(3));
    CHECK(SegmentId(0, 1) < SegmentId(0, 2));
    CHECK(SegmentId(0, 9) < SegmentId(1, 2));
    CHECK(SegmentId(3, 4) == SegmentId(4, 3));
    CHECK_THROWS_AS(SegmentId(3, 3), std::invalid_argument);
}

TEST_CASE("segment relations on a square") {
    PointSet sq = pts({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK(segment_relation(sq, SegmentId(0, 2), SegmentId(1, 3)) == SegRelation::Crossing);
    CHECK(segment_relation(sq, SegmentId(0, 1), SegmentId(1, 2)) == SegRelation::Incident);
    CHECK(segment_relation(sq, SegmentId(0, 1), SegmentId(2, 3)) == SegRelation::Disjoint);
    CHECK(segment_relation(sq, SegmentId(0, 3), SegmentId(1, 2)) == SegRelation::Disjoint);
    CHECK_THROWS_AS(segment_relation(sq, SegmentId(0, 1), SegmentId(0, 1)),
                    std::invalid_argument);
}

TEST_CASE("general position detection") {
    CHECK(in_general_position(pts({{0, 0}, {5, 1}, {1, 5}})));
    CHECK(!in_general_position(pts({{0, 0}, {2, 2}, {4, 4}})));      // collinear
    CHECK(!in_general_position(pts({{0, 0}, {1, 3}, {0, 0}})));      // duplicate
    CHECK(in_general_position(make_convex(12)));
}

TEST_CASE("crossing pairs of a convex set number n choose 4") {
    for (int n = 4; n <= 8; ++n) {
        CrossingPairs cp = crossing_pairs(make_convex(n));
        CHECK(cp.count == choose4(n));
        CHECK(static_cast<long long>(cp.pairs.size()) == cp.count);
    }
}

TEST_CASE("convex hull is counterclockwise and skips interior points") {
    PointSet sq = pts({{0, 0}, {10, 1}, {9, 11}, {-1, 10}, {5, 5}});
    std::vector<int> hull = convex_hull(sq);
    REQUIRE(hull.size() == 4);
    CHECK(std::find(hull.begin(), hull.end(), 4) == hull.end());
    for (size_t h = 0; h < hull.size(); ++h) {
        const Point& a = sq[hull[h]];
        const Point& b = sq[hull[(h + 1) % hull.size()]];
        const Point& c = sq[hull[(h + 2) % hull.size()]];
        CHECK(orient(a, b, c) == 1);
    }
    CHECK(convex_hull(make_convex(9)).size() == 9);
}

TEST_CASE("convex subsets are found exactly") {
    CHECK(convex_k_subset(make_convex(6), 6).found);
    CHECK(convex_k_subset(make_convex(6), 4).found);
    PointSet tri = pts({{0, 0}, {20, 1}, {9, 18}, {10, 7}});  // triangle + interior point
    ConvexSubset s = convex_k_subset(tri, 4);
    CHECK(!s.found);
    ConvexSubset s3 = convex_k_subset(tri, 3);
    REQUIRE(s3.found);
    CHECK(s3.witness == std::vector<int>{0, 1, 2});  // lexicographically first
}

TEST_CASE("distance comparison, hand cases") {
    // both feet interior: 5 vs 1
    PointSet a = pts({{0, 0}, {10, 0}, {0, 5}, {10, 1}});
    CHECK(dist_cmp(a, 2, 3, SegmentId(0, 1)) == Ordering::Greater);
    // mirror pair at equal height
    PointSet b = pts({{0, 0}, {6, 0}, {3, 4}, {3, -4}});
    CHECK(dist_cmp(b, 2, 3, SegmentId(0, 1)) == Ordering::Equal);
    // both distances realized at endpoints, both 5
    PointSet c = pts({{0, 0}, {6, 0}, {-3, 4}, {9, 4}});
    CHECK(dist_cmp(c, 2, 3, SegmentId(0, 1)) == Ordering::Equal);
    CHECK_THROWS_AS(dist_cmp(a, 0, 2, SegmentId(0, 1)), std::invalid_argument);
}

TEST_CASE("distance comparison survives large coordinates") {
    Coord big = Coord{1} << 29;
    PointSet ps = pts({{-big, 0}, {big, 1}, {0, big}, {0, big - 1}});
    CHECK(dist_cmp(ps, 2, 3, SegmentId(0, 1)) == Ordering::Greater);
    CHECK(dist_cmp(ps, 3, 2, SegmentId(0, 1)) == Ordering::Less);
}

TEST_CASE("distance comparison agrees with the fraction reference") {
    Rng rng(7);
    int done = 0;
    while (done < 300) {
        PointSet ps;
        for (int i = 0; i < 4; ++i)
            ps.points.push_back({rng.range(-10000, 10000), rng.range(-10000, 10000)});
        if (!in_general_position(ps)) continue;
        SegmentId e(0, 1);
        CHECK(dist_cmp(ps, 2, 3, e) == dist_ref(ps, 2, 3, e));
        ++done;
    }
}

TEST_CASE("segment endpoint extremes") {
    PointSet ps = pts({{3, 7}, {-2, 9}, {5, -1}});
    CHECK(leftmost_endpoint(ps, SegmentId(0, 1)) == 1);
    CHECK(rightmost_endpoint(ps, SegmentId(0, 1)) == 0);
    CHECK(leftmost_endpoint(ps, SegmentId(1, 2)) == 1);
    CHECK(rightmost_endpoint(ps, SegmentId(0, 2)) == 2);
}

TEST_CASE("order types: translation invariant, mirror and family mismatches") {
    PointSet c5 = make_convex(5);
    PointSet moved = c5;
    for (Point& p : moved.points) {
        p.x += 7;
        p.y -= 11;
    }
    auto m = same_order_type(c5, moved);
    REQUIRE(m.has_value());
    std::vector<int> seen(5, 0);
    for (int v : *m) seen[v] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == 5);  // a bijection
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) {
                if (i == j || j == k || i == k) continue;
                CHECK(orient(c5[i], c5[j], c5[k]) ==
                      orient(moved[(*m)[i]], moved[(*m)[j]], moved[(*m)[k]]));
            }

    // convex position is amphichiral: reversing the labels of the mirror
    // image restores every orientation
    PointSet mirror = c5;
    for (Point& p : mirror.points) p.x = -p.x;
    CHECK(same_order_type(c5, mirror).has_value());

    // a chiral configuration: no relabeling of the mirror matches
    PointSet chiral;
    chiral.points = {{-32, 11}, {-10, -16}, {-34, -41}, {-29, -27}, {-17, 39}, {23, 7}};
    REQUIRE(in_general_position(chiral));
    PointSet chiral_mirror = chiral;
    for (Point& p : chiral_mirror.points) p.x = -p.x;
    CHECK(same_order_type(chiral, chiral).has_value());
    CHECK(!same_order_type(chiral, chiral_mirror).has_value());

    CHECK(!same_order_type(make_convex(6), make_double_chain(3, 3)).has_value());
    CHECK_THROWS_AS(same_order_type(make_convex(13), make_convex(13)), budget_error);
}

TEST_CASE("role names round trip") {
    for (Role r : {Role::Unlabeled, Role::A, Role::B, Role::T1, Role::T2})
        CHECK(role_from_name(role_name(r)) == r);
    CHECK_THROWS_AS(role_from_name("C"), std::invalid_argument);
}
