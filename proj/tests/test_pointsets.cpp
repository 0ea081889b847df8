#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "dlab/geometry.hpp"
#include "dlab/pointsets.hpp"

using namespace dlab;

namespace {

bool no_axis_parallel(const PointSet& ps) {
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            if (ps[i].x == ps[j].x || ps[i].y == ps[j].y) return false;
    return true;
}

}  // namespace

TEST_CASE("convex generator") {
    for (int n : {3, 5, 8, 12, 16}) {
        PointSet ps = make_convex(n);
        CHECK(ps.size() == n);
        CHECK(!ps.labeled());
        CHECK(in_general_position(ps));
        CHECK(static_cast<int>(convex_hull(ps).size()) == n);
        CHECK(no_axis_parallel(ps));
    }
}

TEST_CASE("double chain generator") {
    for (auto [k, l] : {std::pair{1, 3}, {3, 3}, {3, 5}, {5, 5}, {4, 4}}) {
        PointSet ps = make_double_chain(k, l);
        CHECK(ps.size() == k + l);
        CHECK(in_general_position(ps));
        CHECK(is_double_chain(ps, k, l));
    }
    CHECK(!is_double_chain(make_convex(6), 3, 3));
}

TEST_CASE("point-set text format round trips bit-exactly") {
    PointSet ps = make_double_chain(2, 3);
    ps.labels = {Role::A, Role::A, Role::B, Role::B, Role::B};
    std::ostringstream out1;
    write_pointset(ps, out1);
    std::istringstream in(out1.str());
    PointSet back = read_pointset(in);
    CHECK(back.points == ps.points);
    CHECK(back.labels == ps.labels);
    std::ostringstream out2;
    write_pointset(back, out2);
    CHECK(out1.str() == out2.str());

    PointSet plain = make_convex(4);
    std::ostringstream out3;
    write_pointset(plain, out3);
    std::istringstream in3(out3.str());
    CHECK(!read_pointset(in3).labeled());
}

TEST_CASE("point-set reader accepts comments, rejects malformed input") {
    std::istringstream ok("# demo\n\n3\n0 1\n# middle\n5 2\n-3 4\nlabels A B T1\n");
    PointSet ps = read_pointset(ok);
    CHECK(ps.size() == 3);
    CHECK(ps.labels == std::vector<Role>{Role::A, Role::B, Role::T1});

    std::istringstream truncated("3\n0 1\n5 2\n");
    CHECK_THROWS(read_pointset(truncated));
    std::istringstream bad_label("2\n0 1\n5 2\nlabels A Q\n");
    CHECK_THROWS(read_pointset(bad_label));
    std::istringstream short_labels("2\n0 1\n5 2\nlabels A\n");
    CHECK_THROWS(read_pointset(short_labels));
}

TEST_CASE("canonical path honors the environment override") {
    const char* prev = std::getenv("DLAB_DATA");
    std::string saved = prev ? prev : "";
    setenv("DLAB_DATA", "/tmp/somewhere.pts", 1);
    CHECK(canonical_x_path() == "/tmp/somewhere.pts");
    unsetenv("DLAB_DATA");
    std::string def = canonical_x_path();
    CHECK(def.find("data/x16.pts") != std::string::npos);
    if (prev) setenv("DLAB_DATA", saved.c_str(), 1);
}

TEST_CASE("canonical configuration loads and passes every structural screen") {
    PointSet x = load_canonical_x();
    REQUIRE(x.size() == 16);
    REQUIRE(x.labeled());
    CHECK(x.with_role(Role::A).size() == 5);
    CHECK(x.with_role(Role::B).size() == 5);
    CHECK(x.with_role(Role::T1).size() == 3);
    CHECK(x.with_role(Role::T2).size() == 3);
    CHECK(in_general_position(x));
    CHECK(!convex_k_subset(x, 6).found);
    XReport rep = verify_x_properties(x);
    CHECK(rep.all_pass());
    CHECK(!rep.items.empty());
    CHECK(rep.first_failure().empty());
}

TEST_CASE("structural screen rejects a convex 16-point impostor") {
    PointSet fake = make_convex(16);
    fake.labels.assign(16, Role::Unlabeled);
    for (int i = 0; i < 5; ++i) fake.labels[i] = Role::A;
    for (int i = 5; i < 10; ++i) fake.labels[i] = Role::B;
    for (int i = 10; i < 13; ++i) fake.labels[i] = Role::T1;
    for (int i = 13; i < 16; ++i) fake.labels[i] = Role::T2;
    XReport rep = verify_x_properties(fake);
    CHECK(!rep.all_pass());
    CHECK(!rep.first_failure().empty());
}

TEST_CASE("configuration search is deterministic and screened") {
    XCandidate c1 = search_x(1, 5);
    XCandidate c2 = search_x(1, 5);
    CHECK(c1.points.points == c2.points.points);
    CHECK(c1.points.labels == c2.points.labels);
    CHECK(c1.attempt == c2.attempt);
    CHECK(verify_x_properties(c1.points).all_pass());
    CHECK_THROWS_AS(search_x(1, 0), x_search_error);
}

TEST_CASE("shipped configuration matches the seed-1 search") {
    XCandidate c = search_x(1, 5);
    PointSet x = load_canonical_x();
    CHECK(c.points.points == x.points);
    CHECK(c.points.labels == x.labels);
}
