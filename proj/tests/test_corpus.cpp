#include <algorithm>

#include "doctest.h"

#include "cyclecert/corpus.hpp"

using namespace cyclecert;
using certgen::ParamRational;
using poly::MultiPoly;
using sysio::P;

TEST_CASE("the catalogue is complete") {
    auto ids = corpus::list();
    CHECK(ids.size() == 19);
    for (const char* id :
         {"qin", "yablonskii", "filiptsov", "chavarriga", "cls4", "cls5", "cls6",
          "afl5", "hyperbola", "lotka_volterra", "antiversiera", "degree12",
          "parabola", "qsl_line", "cubic_invariant", "cub1", "cub2", "lienard3",
          "lienard5"})
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    CHECK_THROWS_AS(corpus::get("nonesuch"), corpus::UnknownId);
}

TEST_CASE("the circle entry carries the printed data") {
    const auto& e = corpus::get("qin");
    CHECK(e.spec.dot_x == P("-y*(a*x+b*y+c)-(x^2+y^2-1)"));
    CHECK(e.spec.dot_y == P("x*(a*x+b*y+c)"));
    REQUIRE(e.spec.curves.size() == 1);
    CHECK(e.spec.curves[0].defining_poly == P("x^2+y^2-1"));
    CHECK(*e.spec.curves[0].declared_cofactor == P("-2*x"));
    REQUIRE(e.expected);
    CHECK(e.expected->alphas[0].equals(ParamRational(P("b"), P("2"))));
    CHECK(e.expected->g == P("c+b*y"));
    CHECK(e.expected->N.equals({P("a*b*x^2"), P("1")}));
}

TEST_CASE("the degree-6 entry uses the corrected linear coefficient") {
    const auto& e = corpus::get("cls6");
    MultiPoly at_x0 = e.spec.dot_y.subst("x", MultiPoly());
    auto ys = at_x0.coeffs_in("y");
    REQUIRE(ys.size() >= 2);
    CHECK(ys[1] == P("80*a*(a-30)"));
}

TEST_CASE("the degree-5 entry keeps its exclusions") {
    const auto& e = corpus::get("afl5");
    REQUIRE(e.expected);
    CHECK(e.expected->alphas[0].equals(ParamRational(P("26-4*a"), P("15*(a-2)"))));
    bool excludes_two = false;
    for (auto& sc : e.side_conditions)
        if (sc.rel == certgen::SideCondition::Relation::NonZero &&
            sc.expr.subst("a", MultiPoly(Rational(2))).is_zero())
            excludes_two = true;
    CHECK(excludes_two);
}

TEST_CASE("case 4 records the excluded parameter value") {
    const auto& e = corpus::get("chavarriga");
    REQUIRE(e.expected);
    CHECK(e.expected->alphas[0].equals(ParamRational(P("-(7+3*a)"), P("3*(10+3*a)"))));
    bool excluded = false;
    for (auto& sc : e.side_conditions)
        if (sc.expr.subst("a", MultiPoly(Rational(-10, 3))).is_zero()) excluded = true;
    CHECK(excluded);
}

TEST_CASE("verify mode replays every expected certificate") {
    auto report = corpus::run_all(corpus::RunMode::Verify);
    CHECK(report.entries.size() == corpus::list().size());
    for (auto& r : report.entries) {
        INFO(r.id, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("search mode rediscovers the certificates") {
    auto report = corpus::run_all(corpus::RunMode::Search);
    for (auto& r : report.entries) {
        INFO(r.id, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("single entry runs report detail") {
    auto r = corpus::run_entry("antiversiera", corpus::RunMode::Verify);
    CHECK(r.pass);
    CHECK(!r.detail.empty());
}
