#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dlab/graph.hpp"
#include "dlab/pointsets.hpp"

using namespace dlab;

namespace {

long long choose4(long long n) { return n * (n - 1) * (n - 2) * (n - 3) / 24; }

}  // namespace

TEST_CASE("bitgraph basics") {
    BitGraph g;
    g.init(70);  // spans two words
    g.add_edge(0, 69);
    g.add_edge(3, 64);
    CHECK(g.edge(0, 69));
    CHECK(g.edge(69, 0));
    CHECK(!g.edge(0, 64));
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(64) == 1);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("disjointness graph of the convex quadrilateral") {
    DisjointnessGraph dg = build_disjointness(make_convex(4));
    REQUIRE(dg.g.n == 6);
    CHECK(dg.g.edge_count() == 2);
    // opposite sides are the only disjoint pairs; the diagonals cross
    CHECK(dg.g.edge(dg.vertex_index(SegmentId(0, 1)), dg.vertex_index(SegmentId(2, 3))));
    CHECK(dg.g.edge(dg.vertex_index(SegmentId(1, 2)), dg.vertex_index(SegmentId(0, 3))));
    CHECK(!dg.g.edge(dg.vertex_index(SegmentId(0, 2)), dg.vertex_index(SegmentId(1, 3))));
    CHECK_THROWS_AS(dg.vertex_index(SegmentId(0, 7)), std::invalid_argument);
}

TEST_CASE("disjointness graph of the convex pentagon") {
    DisjointnessGraph dg = build_disjointness(make_convex(5));
    REQUIRE(dg.g.n == 10);
    // 15 Kneser edges minus the 5 crossing chord pairs
    CHECK(dg.g.edge_count() == 10);
    CHECK(dg.g.degree(dg.vertex_index(SegmentId(0, 1))) == 3);  // a side
    CHECK(dg.g.degree(dg.vertex_index(SegmentId(0, 2))) == 1);  // a chord
    // vertices are in lexicographic order
    CHECK(dg.vertices.front() == SegmentId(0, 1));
    CHECK(dg.vertices.back() == SegmentId(3, 4));
}

TEST_CASE("kneser graph and the embedding gap") {
    KneserGraph kg = build_kneser(5, 2);
    REQUIRE(kg.g.n == 10);
    CHECK(kg.g.edge_count() == 15);
    for (int v = 0; v < kg.g.n; ++v) CHECK(kg.g.degree(v) == 3);
    CHECK(kg.vertices.front() == std::vector<int>{0, 1});

    for (int n : {5, 6, 7}) CHECK(kg_embedding_gap(make_convex(n)) == choose4(n));
}

TEST_CASE("induced subgraph equals the rebuilt restriction") {
    PointSet c6 = make_convex(6);
    DisjointnessGraph dg = build_disjointness(c6);
    std::vector<int> q{0, 2, 3, 5};
    DisjointnessGraph sub = induced(dg, q);
    PointSet restricted;
    for (int p : q) restricted.points.push_back(c6[p]);
    DisjointnessGraph rebuilt = build_disjointness(restricted);
    CHECK(sub.g == rebuilt.g);
    CHECK(sub.vertices.size() == rebuilt.vertices.size());
}

TEST_CASE("same order type gives the same disjointness graph") {
    PointSet a = make_convex(7);
    PointSet b = a;
    for (Point& p : b.points) {
        p.x += 1000;
        p.y += 2000;
    }
    CHECK(build_disjointness(a).g == build_disjointness(b).g);
}

TEST_CASE("dimacs round trip") {
    DisjointnessGraph dg = build_disjointness(make_convex(5));
    std::ostringstream out;
    export_dimacs(dg.g, out);
    std::string text = out.str();
    CHECK(text.find("p edge 10 10") != std::string::npos);
    std::istringstream in(text);
    BitGraph back = import_dimacs(in);
    CHECK(back == dg.g);
}
