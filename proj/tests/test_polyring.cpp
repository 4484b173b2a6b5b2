#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "cyclecert/multipoly.hpp"
#include "cyclecert/sysio.hpp"

using namespace cyclecert;
using poly::MultiPoly;
using sysio::P;

namespace {

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                      unsigned max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, (int)max_deg);
    MultiPoly p;
    int terms = 1 + (int)(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        poly::Monomial m;
        for (auto& v : vars) m = m * poly::Monomial(v, (unsigned)deg(rng));
        p += MultiPoly::term(Rational(coeff(rng)), m);
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
    CHECK(P("c+b*y") + MultiPoly() == P("c+b*y"));
    CHECK(P("(1-x+2*y)^2") == P("1-2*x+4*y+x^2-4*x*y+4*y^2"));
    CHECK(P("x")*Rational(0) == MultiPoly());
    CHECK((P("x+1") - P("x+1")).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = random_poly(rng, {"x", "y"}, 3);
        MultiPoly b = random_poly(rng, {"x", "y"}, 3);
        MultiPoly c = random_poly(rng, {"x", "y"}, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("differentiation") {
    CHECK(P("x^2+y^2-1").diff("x") == P("2*x"));
    CHECK(P("y-x^2").diff("x") == P("-2*x"));
    CHECK(P("c+b*y").diff("y") == P("b"));
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = random_poly(rng, {"x", "y"}, 3);
        MultiPoly b = random_poly(rng, {"x", "y"}, 3);
        CHECK((a * b).diff("x") == a.diff("x") * b + a * b.diff("x"));
    }
}

TEST_CASE("substitution") {
    MultiPoly f = P("y-x^2");
    MultiPoly x0 = MultiPoly::variable("x0");
    MultiPoly shifted = f.subst("y", P("Y+2*x0*x-x0^2")).subst("x", P("X+x0"));
    CHECK(shifted == P("Y-X^2"));
    MultiPoly p = P("3*x^2*y - y + 2");
    CHECK(p.subst("x", MultiPoly::variable("x")) == p);
    CHECK(P("x^2+1").subst("x", MultiPoly(Rational(2))) == MultiPoly(Rational(5)));
}

TEST_CASE("exact division") {
    auto q = poly::exact_div(P("x^2-y^2"), P("x-y"));
    REQUIRE(q);
    CHECK(*q == P("x+y"));
    CHECK(!poly::exact_div(P("x^2+1"), P("x")));
    CHECK_THROWS_AS(poly::exact_div(P("x"), MultiPoly()), std::domain_error);
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = random_poly(rng, {"x", "y"}, 2);
        MultiPoly b = random_poly(rng, {"x", "y"}, 2);
        if (b.is_zero()) continue;
        auto r = poly::exact_div(a * b, b);
        REQUIRE(r);
        CHECK(*r == a);
    }
}

TEST_CASE("resultants") {
    CHECK(poly::resultant(P("x-a"), P("x-b"), "x") == P("a-b"));
    CHECK(poly::resultant(P("x^2"), P("x-t"), "x") == P("t^2"));
    CHECK_THROWS_AS(poly::resultant(P("y"), P("x"), "x"), std::domain_error);
}

TEST_CASE("discriminants") {
    CHECK(poly::discriminant(P("a*x^2+b*x+c"), "x") == P("b^2-4*a*c"));
    CHECK(poly::discriminant(P("x^4-1"), "x") == MultiPoly(Rational(-256)));
    CHECK(poly::discriminant(P("(x^2+1)^2"), "x").is_zero());
    CHECK_THROWS_AS(poly::discriminant(P("x+1"), "x"), std::domain_error);
}

TEST_CASE("square-free decomposition") {
    auto parts = poly::square_free(P("x^3+x^2"), "x");
    REQUIRE(parts.size() == 2);
    // multiplicities identify the factors regardless of ordering
    for (auto& [f, m] : parts) {
        if (m == 2)
            CHECK(f.primitive_part() == P("x"));
        else
            CHECK(f.primitive_part() == P("x+1"));
    }
    auto sq = poly::square_free(P("(x^2+1)^2"), "x");
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].second == 2);
    CHECK(sq[0].first.primitive_part() == P("x^2+1"));
    CHECK_THROWS_AS(poly::square_free(P("x*y"), "x"), std::domain_error);
}

TEST_CASE("real root counting") {
    CHECK(poly::real_root_count(P("x^4-1"), "x") == 2);
    CHECK(poly::real_root_count(P("x^2+1"), "x") == 0);
    CHECK(poly::real_root_count(P("x^2-2"), "x", Rational(0), std::nullopt) == 1);
    // randomized polynomials with known integer roots
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> root(-4, 4);
    for (int i = 0; i < 25; ++i) {
        std::set<int> roots = {root(rng), root(rng), root(rng)};
        MultiPoly p(Rational(1));
        for (int r : roots) p *= P("x") - MultiPoly(Rational(r));
        CHECK(poly::real_root_count(p, "x") == (int)roots.size());
        CHECK(poly::real_root_count(p, "x", Rational(-10), Rational(0)) ==
              (int)std::count_if(roots.begin(), roots.end(), [](int r) { return r < 0; }));
    }
}

TEST_CASE("sturm sequence shape") {
    auto s = poly::sturm_sequence(P("x^4-1"), "x");
    REQUIRE(!s.sequence.empty());
    CHECK(s.sequence.front() == P("x^4-1"));
    for (std::size_t i = 1; i < s.sequence.size(); ++i)
        CHECK(s.sequence[i].degree("x") < s.sequence[i - 1].degree("x"));
}

TEST_CASE("polynomial square roots") {
    auto r = poly::poly_sqrt(P("x^2-4*x*y+4*y^2"));
    REQUIRE(r);
    CHECK(r->ratio == Rational(1));
    CHECK(r->w * r->w == P("x^2-4*x*y+4*y^2"));
    auto ab = poly::poly_sqrt(P("6*x^2"));
    REQUIRE(ab);
    CHECK(ab->ratio * ab->w * ab->w == P("6*x^2"));
    CHECK(!poly::poly_sqrt(P("x^2+y^2")));
    std::mt19937 rng(23);
    for (int i = 0; i < 30; ++i) {
        MultiPoly w = random_poly(rng, {"x", "y"}, 3);
        if (w.is_zero()) continue;
        MultiPoly p = w * w * Rational(3);
        auto back = poly::poly_sqrt(p);
        REQUIRE(back);
        CHECK(back->ratio * back->w * back->w == p);
    }
}

TEST_CASE("gcd and rational roots") {
    CHECK(poly::univariate_gcd(P("x^2-1"), P("x^2-2*x+1"), "x") == P("x-1"));
    MultiPoly g = poly::poly_gcd(P("(x+y)*(x-2*y)"), P("(x+y)*(x+3*y)"));
    CHECK(g == P("x+y"));
    auto roots = poly::rational_roots(P("2*x^2-x-1"), "x");
    REQUIRE(roots.size() == 2);
    CHECK(((roots[0] == Rational(1) && roots[1] == Rational(-1, 2)) ||
           (roots[1] == Rational(1) && roots[0] == Rational(-1, 2))));
}

TEST_CASE("content and primitive part") {
    MultiPoly p = P("4*x+6*y");
    CHECK(p.content() == Rational(2));
    CHECK(p.primitive_part() == P("2*x+3*y"));
    CHECK(P("-3*x").primitive_part() == P("x"));
}
