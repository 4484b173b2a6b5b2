#include "cyclecert/qsbounds.hpp"

#include <array>
#include <cassert>

namespace cyclecert::qsbounds {

namespace {

using sysio::CurveSpec;

LinearForm linear_form_of(const MultiPoly& p, const std::string& what) {
    for (const auto& v : p.variables())
        if (v != "x" && v != "y")
            throw CofactorNotLinear(what + " has unbound parameter " + v);
    if (p.degree_in({"x", "y"}) > 1)
        throw CofactorNotLinear(what + " has degree > 1: " + p.to_string());
    return LinearForm{p.coeff(poly::Monomial()), p.coeff(poly::Monomial("x")),
                      p.coeff(poly::Monomial("y"))};
}

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return a * d - b * c;
}

// A nonzero coefficient vector (c0,c1,c2) with c0*r0 + c1*r1 + c2*r2 == 0,
// for linearly dependent rows.
std::array<Rational, 3> dependent_combination(const std::array<LinearForm, 3>& rows) {
    // Rows of the adjugate are left-null vectors of A when det(A) = 0.
    auto& [r0, r1, r2] = rows;
    std::array<std::array<Rational, 3>, 3> adj{{
        {det2(r1.b, r1.c, r2.b, r2.c), -det2(r0.b, r0.c, r2.b, r2.c),
         det2(r0.b, r0.c, r1.b, r1.c)},
        {-det2(r1.a, r1.c, r2.a, r2.c), det2(r0.a, r0.c, r2.a, r2.c),
         -det2(r0.a, r0.c, r1.a, r1.c)},
        {det2(r1.a, r1.b, r2.a, r2.b), -det2(r0.a, r0.b, r2.a, r2.b),
         det2(r0.a, r0.b, r1.a, r1.b)},
    }};
    for (auto& row : adj)
        if (sgn(row[0]) || sgn(row[1]) || sgn(row[2])) return row;

    // Rank <= 1: every row is a multiple of any nonzero one.
    int p = -1;
    for (int i = 0; i < 3; ++i)
        if (!(rows[i] == LinearForm{0, 0, 0})) {
            p = i;
            break;
        }
    std::array<Rational, 3> c{0, 0, 0};
    if (p < 0) {
        c[0] = 1;
        return c;
    }
    int q = p == 0 ? 1 : 0;
    const LinearForm& rp = rows[p];
    Rational lambda = sgn(rp.a)   ? rows[q].a / rp.a
                      : sgn(rp.b) ? rows[q].b / rp.b
                                  : rows[q].c / rp.c;
    c[q] = 1;
    c[p] = -lambda;
    return c;
}

MultiPoly rename(const MultiPoly& p, const std::string& from, const std::string& to) {
    return p.subst(from, MultiPoly::variable(to));
}

PlanarField parabola_field(const ParabolaParams& p) {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly lin = MultiPoly(p.a) + MultiPoly(p.b) * x + MultiPoly(p.h) * y;
    MultiPoly par = y - x * x;
    return PlanarField{lin + MultiPoly(p.c) * par + MultiPoly(p.e) * x * y,
                       MultiPoly(2) * x * lin + MultiPoly(p.d) * par +
                           MultiPoly(2) * MultiPoly(p.e) * y * y};
}

}  // namespace

Rational CofactorMatrix::detA() const {
    return div.a * det2(k1.b, k1.c, k2.b, k2.c) - div.b * det2(k1.a, k1.c, k2.a, k2.c) +
           div.c * det2(k1.a, k1.b, k2.a, k2.b);
}

CofactorMatrix cofactor_matrix(const PlanarField& F, const InvariantObject& c1,
                               const InvariantObject& c2) {
    if (F.degree() != 2)
        throw NotQuadraticSystem("field degree is " + std::to_string(F.degree()));
    return CofactorMatrix{linear_form_of(darboux::divergence(F), "divergence"),
                          linear_form_of(c1.cofactor, "cofactor of first curve"),
                          linear_form_of(c2.cofactor, "cofactor of second curve")};
}

BoundReport bound_limit_cycles(const CofactorMatrix& m, int M, bool no_isolated_points) {
    if (M < 0) throw std::invalid_argument("negative cycle count");
    BoundReport r;
    r.M = M;
    if (sgn(m.detA()) == 0) {
        r.branch = Branch::ZeroDetA;
        r.bound = M;
        auto c = dependent_combination({m.div, m.k1, m.k2});
        r.null_combination = NullCombination{c[1], c[2], c[0]};
        return r;
    }
    if (sgn(m.delta12()) == 0) {
        r.branch = Branch::ZeroDelta12;
        r.bound = M;
        return r;
    }
    r.branch = Branch::Generic;
    r.nested_only = no_isolated_points;
    r.bound = no_isolated_points ? 2 * M : 2 * M + 2;
    return r;
}

int degree_bound(int m1, int m2, bool no_isolated_points) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("curve degrees must be positive");
    return 2 * (m1 / 2 + m2 / 2) + (no_isolated_points ? 0 : 2);
}

StabilitySigns stability_signs(const CofactorMatrix& m, bool no_isolated_points) {
    Rational d12 = m.delta12();
    Rational on1 = d12 - m.delta2();
    Rational on2 = d12 + m.delta1();
    Rational det = m.detA();
    if (!sgn(d12) || !sgn(on1) || !sgn(on2) || !sgn(det))
        throw DegenerateHypothesis("delta12*(delta12-delta2)*(delta12+delta1)*detA vanishes");
    StabilitySigns s;
    s.on_f1 = sgn(on1 * det);
    s.on_f2 = sgn(on2 * det);
    s.off_curves = sgn(d12 * det);
    if (sgn(d12) == sgn(on1) && sgn(d12) == sgn(on2))
        s.collapsed_bound = no_isolated_points ? 0 : 2;
    return s;
}

CriticalPointResult critical_point_off_curves(const CofactorMatrix& m) {
    Rational d12 = m.delta12();
    if (sgn(d12)) {
        Rational x = det2(-m.k1.a, m.k1.c, -m.k2.a, m.k2.c) / d12;
        Rational y = det2(m.k1.b, -m.k1.a, m.k2.b, -m.k2.a) / d12;
        assert(m.div.eval(x, y) * d12 == m.detA());
        return CriticalPoint{x, y, m.div.eval(x, y)};
    }
    // Singular coefficient matrix: the zero sets of k1 and k2 are parallel
    // lines, coincident lines, the whole plane, or empty.
    const LinearForm& p = (sgn(m.k1.b) || sgn(m.k1.c)) ? m.k1 : m.k2;
    const LinearForm& q = (&p == &m.k1) ? m.k2 : m.k1;
    if (!sgn(p.b) && !sgn(p.c)) {
        if (sgn(m.k1.a) || sgn(m.k2.a)) return NoSolution{};
        return LineOfSolutions{};
    }
    Rational lambda = sgn(p.b) ? q.b / p.b : q.c / p.c;
    if (q.a != lambda * p.a) return NoSolution{};
    return LineOfSolutions{};
}

ParabolaParams parabola_shift(const ParabolaParams& p, const Rational& x0) {
    if (sgn(p.e * x0 * x0 * x0 + p.h * x0 * x0 + p.b * x0 + p.a))
        throw NotARoot("x0 is not a root of e*x^3 + h*x^2 + b*x + a");
    ParabolaParams s{0, p.b + 2 * p.h * x0 + 3 * p.e * x0 * x0, p.c - 2 * p.e * x0,
                     p.d - 2 * p.c * x0 + 2 * p.e * x0 * x0, p.e, p.h + 3 * p.e * x0};

    // The shift x -> x + x0, y -> y + 2*x0*x + x0^2 must conjugate the two
    // fields exactly, and the parabola must stay invariant.
    PlanarField orig = parabola_field(p), moved = parabola_field(s);
    MultiPoly x0p(x0);
    MultiPoly nx = MultiPoly::variable("u") + x0p;
    auto pull = [&](const MultiPoly& f) {
        MultiPoly g = f.subst("x", nx);
        g = g.subst("y", MultiPoly::variable("v") + MultiPoly(2) * x0p * MultiPoly::variable("u") +
                             x0p * x0p);
        return rename(rename(g, "u", "x"), "v", "y");
    };
    assert(pull(orig.dot_x) == moved.dot_x);
    assert(pull(orig.dot_y - MultiPoly(2) * x0p * orig.dot_x) == moved.dot_y);
    darboux::cofactor_of(moved, CurveSpec{CurveSpec::Kind::Algebraic,
                                          sysio::P("y - x^2"), std::nullopt});
    return s;
}

PlanarField parabola_to_line(const ParabolaParams& p) {
    if (sgn(p.a)) throw ANotZero("normal form must have a = 0");
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    PlanarField f{
        MultiPoly(-p.c) * x + MultiPoly(p.e) * y + MultiPoly(p.b - p.d) * x * x +
            MultiPoly(2 * p.c + p.h) * x * y - MultiPoly(p.e) * y * y,
        (y - MultiPoly(1)) * (MultiPoly(2 * p.b - p.d) * x + MultiPoly(2 * (p.c + p.h)) * y)};
    darboux::cofactor_of(f, CurveSpec{CurveSpec::Kind::Algebraic, y - MultiPoly(1), std::nullopt});
    return f;
}

SystemSpec qs_normal_forms(const std::string& kind, const std::map<std::string, Rational>& binding) {
    SystemSpec s;
    s.name = kind;
    std::vector<std::string> names;
    if (kind == "parabola") {
        names = {"a", "b", "c", "d", "e", "h"};
        s.dot_x = sysio::P("a + b*x + h*y + c*(y - x^2) + e*x*y");
        s.dot_y = sysio::P("2*x*(a + b*x + h*y) + d*(y - x^2) + 2*e*y^2");
        s.curves.push_back(CurveSpec{CurveSpec::Kind::Algebraic, sysio::P("y - x^2"),
                                     sysio::P("-2*c*x + 2*e*y + d")});
    } else if (kind == "hyperbola") {
        names = {"a", "b", "c", "u", "v"};
        s.dot_x = sysio::P("y*(a + b*x + c*y) + u*(x^2 - y^2 - 1)");
        s.dot_y = sysio::P("x*(a + b*x + c*y) + v*(x^2 - y^2 - 1)");
        s.curves.push_back(CurveSpec{CurveSpec::Kind::Algebraic, sysio::P("x^2 - y^2 - 1"),
                                     sysio::P("2*(u*x - v*y)")});
    } else if (kind == "lotka_volterra") {
        names = {"a0", "a1", "a2", "b0", "b1", "b2"};
        s.dot_x = sysio::P("x*(a0 + a1*x + a2*y)");
        s.dot_y = sysio::P("y*(b0 + b1*x + b2*y)");
        s.curves.push_back(CurveSpec{CurveSpec::Kind::Algebraic, sysio::P("x"),
                                     sysio::P("a0 + a1*x + a2*y")});
        s.curves.push_back(CurveSpec{CurveSpec::Kind::Algebraic, sysio::P("y"),
                                     sysio::P("b0 + b1*x + b2*y")});
    } else {
        throw UnknownKind(kind);
    }
    for (auto& n : names) s.params[n] = std::nullopt;
    for (auto& [n, v] : binding) {
        if (!s.params.count(n)) throw sysio::UndeclaredParameter(n);
        s.params[n] = v;
    }
    PlanarField f{s.dot_x, s.dot_y};
    for (auto& c : s.curves) darboux::cofactor_of(f, c);
    return s;
}

}  // namespace cyclecert::qsbounds
