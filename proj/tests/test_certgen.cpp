#include "doctest.h"

#include "cyclecert/certgen.hpp"
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

TEST_CASE("build_N on printed families") {
    const auto& qin = corpus::get("qin");
    PlanarField F{qin.spec.dot_x, qin.spec.dot_y};
    auto curves = curves_of(qin.spec, F);
    auto N = certgen::build_N_symbolic(F, curves, {ParamRational(P("b"), P("2"))},
                                       P("c+b*y"));
    CHECK(N.equals({P("a*b*x^2"), P("1")}));

    const auto& d12 = corpus::get("degree12");
    PlanarField G{d12.spec.dot_x, d12.spec.dot_y};
    auto gcurves = curves_of(d12.spec, G);
    CHECK(certgen::build_N(G, gcurves, {Rational(-1, 12)}, P("x")) ==
          MultiPoly(Rational(1)));
}

TEST_CASE("build_N length mismatch") {
    const auto& qin = corpus::get("qin");
    PlanarField F{qin.spec.dot_x, qin.spec.dot_y};
    auto curves = curves_of(qin.spec, F);
    CHECK_THROWS_AS(certgen::build_N(F, curves, {}, P("x")), certgen::LengthMismatch);
}

TEST_CASE("scaled square witnesses") {
    MultiPoly N = P("2*x^2");
    CHECK(certgen::check_witness(N, certgen::ScaledSquare{Rational(2), P("x")}) ==
          certgen::Verdict::NonNegative);
    CHECK(certgen::check_witness(P("-3*(x-y)^2"),
                                 certgen::ScaledSquare{Rational(-3), P("x-y")}) ==
          certgen::Verdict::NonPositive);
    CHECK_THROWS_AS(
        certgen::check_witness(P("x^2+y"), certgen::ScaledSquare{Rational(1), P("x")}),
        certgen::WitnessMismatch);
}

TEST_CASE("quadratic form witnesses") {
    CHECK(certgen::check_witness(P("x^2+2*x*y+2*y^2"),
                                 certgen::PSDQuadraticForm{P("x^2+2*x*y+2*y^2"), +1}) ==
          certgen::Verdict::NonNegative);
    CHECK_THROWS_AS(certgen::check_witness(P("x^2-y^2"),
                                           certgen::PSDQuadraticForm{P("x^2-y^2"), +1}),
                    certgen::SignViolation);
}

TEST_CASE("univariate witnesses") {
    MultiPoly N = P("2*(x-1)^2*(x^2+1)");
    CHECK(certgen::check_witness(N, certgen::UnivariatePSD{"x", +1}) ==
          certgen::Verdict::NonNegative);
    CHECK_THROWS_AS(certgen::check_witness(P("x^3-x"), certgen::UnivariatePSD{"x", +1}),
                    certgen::SignViolation);
}

TEST_CASE("sum-of-terms witness, cubic family at a = 1") {
    auto spec = corpus::get("cub1").spec.bind({{"a", Rational(1)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    auto curves = curves_of(spec, F);
    MultiPoly g = P("4*(2*x^2+2*x*y+3*y^2)");
    MultiPoly N = certgen::build_N(F, curves, {Rational(-3)}, g);
    certgen::SumOfTerms w;
    w.terms = {{Rational(16), MultiPoly(Rational(1)), P("x^2+2*x*y+2*y^2")},
               {Rational(40), P("x^2+x*y+y^2"), MultiPoly(Rational(1))}};
    CHECK(certgen::check_witness(N, w) == certgen::Verdict::NonNegative);
    // the inner form has discriminant 4AC - B^2 = 4
    CHECK(P("4*1*2-2^2") == MultiPoly(Rational(4)));
}

TEST_CASE("zero set checks") {
    auto spec = corpus::get("qin").spec.bind(
        {{"a", Rational(1)}, {"b", Rational(1)}, {"c", Rational(3)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    MultiPoly N = P("x^2");
    certgen::SignWitness w = certgen::ScaledSquare{Rational(1), P("x")};
    CHECK(certgen::check_zero_set(F, w, N).ok);

    PlanarField radial{P("x"), P("y")};
    auto bad = certgen::check_zero_set(radial, w, N);
    CHECK(!bad.ok);
    CHECK(bad.offender == P("x"));

    certgen::SignWitness c = certgen::ConstantSign{Rational(1)};
    CHECK(certgen::check_zero_set(radial, c, MultiPoly(Rational(1))).ok);
}

TEST_CASE("first integral branch") {
    PlanarField harmonic{P("-y"), P("x")};
    sysio::CurveSpec circle;
    circle.defining_poly = P("x^2+y^2");
    auto curves = std::vector<darboux::InvariantObject>{
        darboux::cofactor_of(harmonic, circle)};
    CHECK(certgen::build_N(harmonic, curves, {Rational(1)}, MultiPoly(Rational(1)))
              .is_zero());
    auto fi = certgen::check_first_integral(harmonic, curves, {Rational(1)},
                                            MultiPoly(Rational(1)));
    CHECK(fi.certified);
    CHECK_THROWS_AS(certgen::check_first_integral(harmonic, curves, {Rational(1)},
                                                  P("x")),
                    certgen::NNotZero);
}

TEST_CASE("certificate serialization is stable") {
    const auto& qin = corpus::get("qin");
    auto spec = qin.spec.bind(
        {{"a", Rational(1)}, {"b", Rational(2)}, {"c", Rational(3)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    certgen::Certificate cert;
    cert.curves = curves_of(spec, F);
    cert.alphas = {ParamRational(Rational(1))};
    cert.g = P("3+2*y");
    cert.N = certgen::build_N(F, cert.curves, {Rational(1)}, cert.g);
    cert.witness = certgen::ScaledSquare{Rational(2), P("x")};
    cert.conclusion = {certgen::Conclusion::Kind::NoPeriodicOrbitsOffCurves, ""};
    std::string a = certgen::certificate_block(cert);
    std::string b = certgen::certificate_block(cert);
    CHECK(a == b);
    CHECK(a.find("2*x^2") != std::string::npos);
    CHECK(certgen::witness_description(cert.witness).find("x") != std::string::npos);
}
