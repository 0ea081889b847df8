#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "dlab/checks.hpp"
#include "dlab/pointsets.hpp"

using namespace dlab;

TEST_CASE("convex chromatic formula, frozen values") {
    const int expected[] = {1, 2, 3, 3, 4, 5, 6, 6};  // n = 3..10
    for (int n = 3; n <= 10; ++n) CHECK(convex_chi_formula(n) == expected[n - 3]);
    CHECK(convex_chi_formula(11) == 7);
    CHECK_THROWS_AS(convex_chi_formula(2), std::invalid_argument);
}

TEST_CASE("double-chain chromatic formula, frozen values") {
    CHECK(double_chain_chi_formula(1, 3) == 2);
    CHECK(double_chain_chi_formula(2, 3) == 3);
    CHECK(double_chain_chi_formula(3, 3) == 4);
    CHECK(double_chain_chi_formula(2, 4) == 4);
    CHECK(double_chain_chi_formula(3, 4) == 5);
    CHECK(double_chain_chi_formula(3, 5) == 6);
    CHECK(double_chain_chi_formula(4, 5) == 7);
    CHECK(double_chain_chi_formula(5, 5) == 8);
    CHECK_THROWS_AS(double_chain_chi_formula(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(double_chain_chi_formula(4, 3), std::invalid_argument);
}

TEST_CASE("verdict aggregation and the stretch gate") {
    CheckReport rep{.check = "demo"};
    rep.items.push_back({"a", "x", "x", Verdict::Pass, ""});
    CHECK(rep.verdict() == Verdict::Pass);
    rep.items.push_back({"b", "x", "?", Verdict::Unknown, ""});
    CHECK(rep.verdict() == Verdict::Unknown);
    rep.items.push_back({"c", "x", "y", Verdict::Fail, ""});
    CHECK(rep.verdict() == Verdict::Fail);
    CHECK(rep.count(Verdict::Pass) == 1);
    CHECK(rep.count(Verdict::Fail) == 1);
    CHECK(rep.count(Verdict::Unknown) == 1);

    CheckReport pass{.check = "p"};
    pass.items.push_back({"a", "x", "x", Verdict::Pass, ""});
    CheckReport open{.check = "o"};
    open.items.push_back({"a", "x", "?", Verdict::Unknown, ""});
    CHECK(reports_ok({pass}));
    CHECK(!reports_ok({pass, open}));  // unknown without the stretch flag
    open.stretch = true;
    CHECK(reports_ok({pass, open}));
    CheckReport fail{.check = "f", .stretch = true};
    fail.items.push_back({"a", "x", "y", Verdict::Fail, ""});
    CHECK(!reports_ok({pass, fail}));  // stretch never excuses a failure
}

TEST_CASE("json-lines report writer emits one header and one line per item") {
    CheckReport rep{.check = "demo"};
    rep.items.push_back({"i0", "want", "got", Verdict::Pass, "file.cert"});
    rep.items.push_back({"i1", "want", "other", Verdict::Fail, ""});
    rep.note = "both flavors";
    std::ostringstream out;
    write_report_jsonl({rep}, out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    nlohmann::json head = nlohmann::json::parse(line);
    CHECK(head["check"] == "demo");
    CHECK(head["verdict"] == "fail");
    CHECK(head["items"] == 2);
    CHECK(head["pass"] == 1);
    CHECK(head["fail"] == 1);
    CHECK(head["note"] == "both flavors");
    REQUIRE(std::getline(in, line));
    nlohmann::json item = nlohmann::json::parse(line);
    CHECK(item["instance"] == "i0");
    CHECK(item["artifact"] == "file.cert");
    REQUIRE(std::getline(in, line));
    nlohmann::json item2 = nlohmann::json::parse(line);
    CHECK(item2["verdict"] == "fail");
    CHECK(!std::getline(in, line));
}

TEST_CASE("table checks agree with the formulas") {
    CheckReport conv = cmd_convex_table(6);
    CHECK(conv.verdict() == Verdict::Pass);
    CHECK(conv.items.size() == 4);
    CheckReport dch = cmd_double_chain_table({{1, 3}, {3, 3}, {2, 2}});
    CHECK(dch.verdict() == Verdict::Pass);
    REQUIRE(dch.items.size() == 3);
    CHECK(dch.items[2].actual.find("skipped") != std::string::npos);
}

TEST_CASE("numeric bounds items") {
    CheckReport b7 = cmd_bounds(7);
    CHECK(b7.verdict() == Verdict::Pass);
    REQUIRE(b7.items.size() == 5);
    CHECK(b7.items[0].actual == "5");          // 5*floor(7/7)
    CHECK(b7.items[1].actual == "5");          // 7 - max{m : m(m+1) <= 7} = 7 - 2
    CHECK(b7.items[3].actual == "7");          // 7.5 - 1/2
    CHECK(b7.items[4].actual.find("pinned: d = 5") != std::string::npos);

    CheckReport b16 = cmd_bounds(16);
    CHECK(b16.items[0].actual == "10");
    CHECK(b16.items[1].actual == "13");        // 16 - max{m : m(m+1) <= 16} = 16 - 3
    CHECK(b16.items[3].actual == "15.5");      // 16.5 - 2/2
    CHECK(b16.items[4].actual == "[13, 14]");

    CheckReport b17 = cmd_bounds(17);
    CHECK(b17.items[1].actual == "14");
    CHECK(b17.items[4].actual == "[14, 15]");
    CHECK_THROWS_AS(cmd_bounds(2), std::invalid_argument);
}

TEST_CASE("proposition checks pass on the canonical configuration") {
    PointSet x = load_canonical_x();
    CheckOptions quick;
    quick.sample = 6;
    CHECK(cmd_prop(3, x, quick).verdict() == Verdict::Pass);
    CHECK(cmd_prop(6, x, quick).verdict() == Verdict::Pass);
    CHECK(cmd_prop(7, x, quick).verdict() == Verdict::Pass);
    CheckReport p10 = cmd_prop(10, x, quick);
    CHECK(p10.verdict() == Verdict::Pass);
    CHECK(p10.items.size() == 2);
    CHECK_THROWS_AS(cmd_prop(1, x, quick), std::invalid_argument);
}

TEST_CASE("lemma checks pass on sampled families") {
    PointSet x = load_canonical_x();
    CheckOptions quick;
    quick.sample = 6;
    CheckReport l14 = cmd_lemma(14, x, quick);
    CHECK(l14.verdict() == Verdict::Pass);
    CHECK(l14.items.size() == 25);  // always the whole bridge family
    CheckReport l16 = cmd_lemma(16, x, quick);
    CHECK(l16.verdict() == Verdict::Pass);
    CHECK(l16.items.size() == 25);
    CheckReport l17 = cmd_lemma(17, x, quick);
    CHECK(l17.verdict() == Verdict::Pass);
    CHECK(l17.items.size() == 6);
    CheckReport l20 = cmd_lemma(20, x, quick);
    CHECK(l20.verdict() == Verdict::Pass);
    CHECK(l20.items.size() == 6);
    CHECK_THROWS_AS(cmd_lemma(12, x, quick), std::invalid_argument);
    CHECK_THROWS_AS(cmd_lemma(14, make_convex(16), quick), std::invalid_argument);
}

TEST_CASE("exhausting a tiny budget yields unknown, and the stretch flag tolerates it") {
    PointSet x = load_canonical_x();
    CheckOptions starved;
    starved.sample = 2;
    starved.budget = 1;
    CheckReport l24 = cmd_lemma(24, x, starved);
    CHECK(l24.stretch);
    CHECK(l24.verdict() == Verdict::Unknown);
    CHECK(l24.count(Verdict::Fail) == 0);
    CHECK(reports_ok({l24}));
}

TEST_CASE("subset spot-check keeps the hereditary chromatic count") {
    PointSet x = load_canonical_x();
    CheckOptions quick;
    quick.sample = 8;
    CheckReport sub = cmd_theorem2(Theorem2Mode::Subsets, x, quick);
    CHECK(sub.verdict() == Verdict::Pass);
    CHECK(sub.items.size() == 8);
}
