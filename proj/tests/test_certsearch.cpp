#include "doctest.h"

#include "cyclecert/certsearch.hpp"
#include "cyclecert/corpus.hpp"

using namespace cyclecert;
using certgen::ParamRational;
using darboux::PlanarField;
using poly::MultiPoly;
using sysio::P;

namespace {

std::vector<darboux::InvariantObject> curves_of(const sysio::SystemSpec& s,
                                                const PlanarField& F) {
    std::vector<darboux::InvariantObject> out;
    for (auto& c : s.curves) out.push_back(darboux::cofactor_of(F, c));
    return out;
}

}  // namespace

TEST_CASE("linear coefficient systems solve completely") {
    certsearch::CoeffSystem s;
    s.equations = {P("g0-3"), P("g1+g0")};
    s.unknowns = {"g0", "g1"};
    auto r = certsearch::solve_coeff_system(s);
    auto* sol = std::get_if<certsearch::Solved>(&r);
    REQUIRE(sol);
    auto values = certsearch::resolve_chain(sol->chain, sol->values);
    REQUIRE(values);
    CHECK(values->at("g0").equals(ParamRational(Rational(3))));
    CHECK(values->at("g1").equals(ParamRational(Rational(-3))));
}

TEST_CASE("nonlinear residuals reduce to univariate polynomials") {
    certsearch::CoeffSystem s;
    s.equations = {P("g0^2+1")};
    s.unknowns = {"g0"};
    auto r = certsearch::solve_coeff_system(s);
    auto* u = std::get_if<certsearch::ReducedToUnivariate>(&r);
    REQUIRE(u);
    CHECK(u->var == "g0");
    CHECK(u->poly.primitive_part() == P("g0^2+1"));
}

TEST_CASE("chain resolution") {
    std::vector<certsearch::Elimination> chain = {{"u", P("a"), P("b")}};
    auto v = certsearch::resolve_chain(chain, {});
    REQUIRE(v);
    CHECK(v->at("u").equals(ParamRational(P("a"), P("b"))));

    std::vector<certsearch::Elimination> dead = {{"u", P("a"), MultiPoly()}};
    CHECK(!certsearch::resolve_chain(dead, {}));

    // 0/0 pivots leave the unknown free; the solver picks zero
    std::vector<certsearch::Elimination> vac = {{"u", MultiPoly(), MultiPoly()}};
    auto z = certsearch::resolve_chain(vac, {});
    REQUIRE(z);
    CHECK(z->at("u").equals(ParamRational(Rational(0))));
}

TEST_CASE("substitution with rational values clears denominators") {
    auto r = certsearch::subst_all(P("u*x+v"), {{"u", ParamRational(Rational(1, 2))}});
    CHECK(r.equals({P("x+2*v"), MultiPoly(Rational(2))}));
}

TEST_CASE("square search rediscovers the circle certificate") {
    auto spec = corpus::get("qin").spec.bind(
        {{"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    certsearch::ScaledSquareTarget t;
    t.g_degree = 1;
    auto out = certsearch::search_square(F, curves_of(spec, F), t);
    auto* f = std::get_if<certsearch::Found>(&out);
    REQUIRE(f);
    REQUIRE(f->cert.alphas.size() == 1);
    CHECK(f->cert.alphas[0].equals(ParamRational(Rational(1))));
    CHECK(f->cert.g == P("2*y+3"));
    CHECK(f->cert.N == P("2*x^2"));
}

TEST_CASE("square search on the hyperbola family") {
    auto spec = corpus::get("hyperbola").spec.bind(
        {{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(1)},
         {"u", Rational(1)}, {"v", Rational(2)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    certsearch::ScaledSquareTarget t;
    t.g_degree = 1;
    auto out = certsearch::search_square(F, curves_of(spec, F), t);
    auto* f = std::get_if<certsearch::Found>(&out);
    REQUIRE(f);
    // alpha = (u*c+v*b)/(2*(v^2-u^2)) = 3/6
    CHECK(f->cert.alphas[0].equals(ParamRational(Rational(1, 2))));
    auto sq = poly::poly_sqrt(f->cert.N);
    REQUIRE(sq);
    CHECK(sq->w == P("x-2*y"));
    CHECK(sgn(sq->ratio) > 0);
}

TEST_CASE("no certificate where a second limit cycle lives") {
    auto spec = corpus::get("cub1").spec.bind({{"a", Rational(-3, 10)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    auto curves = curves_of(spec, F);
    for (unsigned deg : {1u, 2u}) {
        certsearch::ScaledSquareTarget t;
        t.g_degree = deg;
        auto out = certsearch::search_square(F, curves, t);
        CHECK(std::holds_alternative<certsearch::NoCertificateFound>(out));
    }
}

TEST_CASE("discriminant search on the parabola family") {
    const auto& para = corpus::get("parabola");
    PlanarField F{para.spec.dot_x, para.spec.dot_y};
    auto curves = curves_of(para.spec, F);
    auto out = certsearch::search_discriminant(F, curves[0], "y");
    auto* pc = std::get_if<certsearch::ParametricCondition>(&out);
    REQUIRE(pc);
    CHECK(pc->tmpl.quad.degree(pc->tmpl.alpha_var) == 2);

    // multiplier-first binding: fix five parameters and a multiplier, then
    // solve the quadratic for the sixth parameter
    std::map<std::string, Rational> part = {{"b", Rational(-2)}, {"c", Rational(-1)},
                                            {"d", Rational(-1)}, {"e", Rational(1)},
                                            {"h", Rational(-1)}};
    MultiPoly q = pc->tmpl.quad;
    for (auto& [k, v] : part) q = q.subst(k, MultiPoly(v));
    q = q.subst(pc->tmpl.alpha_var, MultiPoly(Rational(1)));
    auto roots = poly::rational_roots(q, "a");
    REQUIRE(!roots.empty());
    part["a"] = roots[0];
    auto inst = certsearch::instantiate(*pc, part);
    CHECK(std::holds_alternative<certsearch::Found>(inst));
}

TEST_CASE("univariate search handles the cubic Lienard system") {
    auto spec = corpus::get("lienard3")
                    .spec.bind({{"a1", Rational(1)}, {"a2", Rational(0)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    auto curves = curves_of(spec, F);
    certsearch::UnivariateTarget t;
    t.var = "x";
    t.g_basis = {poly::Monomial(), poly::Monomial("y"), poly::Monomial("x", 2)};
    auto out = certsearch::search_univariate(F, curves, t);
    auto* f = std::get_if<certsearch::Found>(&out);
    REQUIRE(f);
    CHECK(f->cert.alphas[0].equals(ParamRational(Rational(4))));
}

TEST_CASE("quintic Lienard condition") {
    auto good = certsearch::lienard_quintic_condition(Rational(1), Rational(0),
                                                      Rational(3), Rational(0));
    CHECK(good.holds);
    CHECK(good.V == Rational(24));
    auto bad = certsearch::lienard_quintic_condition(Rational(0), Rational(0),
                                                     Rational(1), Rational(0));
    CHECK(!bad.holds);
    CHECK(bad.U == Rational(0));
    CHECK(certsearch::lienard_quintic_identity_defect().is_zero());
}
