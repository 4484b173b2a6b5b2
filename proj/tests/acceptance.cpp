// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cyclecert/corpus.hpp"
#include "cyclecert/numlab.hpp"
#include "cyclecert/qsbounds.hpp"

using namespace cyclecert;
using certgen::ParamRational;
using darboux::InvariantObject;
using darboux::PlanarField;
using poly::MultiPoly;
using sysio::P;

namespace {

const std::vector<std::string> printed_cases = {
    "qin", "yablonskii", "filiptsov", "chavarriga", "cls4", "cls5", "cls6", "afl5"};

std::vector<InvariantObject> curves_of(const sysio::SystemSpec& s, const PlanarField& F) {
    std::vector<InvariantObject> out;
    for (auto& c : s.curves) out.push_back(darboux::cofactor_of(F, c));
    return out;
}

MultiPoly subst_params(MultiPoly p, const std::map<std::string, Rational>& b) {
    for (auto& [k, v] : b) p = p.subst(k, MultiPoly(v));
    return p;
}

bool param_rational_nonzero(const ParamRational& r,
                            const std::map<std::string, Rational>& b) {
    MultiPoly num = subst_params(r.num, b), den = subst_params(r.den, b);
    return !num.is_zero() && !den.is_zero();
}

bool side_conditions_hold(const std::vector<certgen::SideCondition>& scs,
                          const std::map<std::string, Rational>& b) {
    for (auto& sc : scs) {
        MultiPoly v = subst_params(sc.expr, b);
        if (!v.is_constant()) return false;
        int s = sgn(v.constant_value());
        switch (sc.rel) {
            case certgen::SideCondition::Relation::NonZero:
                if (s == 0) return false;
                break;
            case certgen::SideCondition::Relation::NonNegative:
                if (s < 0) return false;
                break;
            case certgen::SideCondition::Relation::Positive:
                if (s <= 0) return false;
                break;
        }
    }
    return true;
}

// A binding is admissible when the side conditions hold and the expected
// certificate does not degenerate there (multipliers and witness scales stay
// finite and nonzero).
bool admissible(const corpus::CorpusEntry& e, const std::map<std::string, Rational>& b) {
    if (!side_conditions_hold(e.side_conditions, b)) return false;
    if (!e.expected) return true;
    for (auto& a : e.expected->alphas)
        if (subst_params(a.den, b).is_zero()) return false;
    const auto& w = e.expected->witness;
    if (auto* sq = std::get_if<corpus::SymbolicSquare>(&w))
        return param_rational_nonzero(sq->r, b);
    if (auto* c = std::get_if<corpus::SymbolicConstant>(&w))
        return param_rational_nonzero(c->c, b);
    if (auto* sos = std::get_if<corpus::SymbolicSOS>(&w)) {
        for (auto& t : sos->terms)
            if (!param_rational_nonzero(t.c, b)) return false;
    }
    return true;
}

std::vector<std::map<std::string, Rational>> admissible_bindings(
    const corpus::CorpusEntry& e, std::size_t count, unsigned salt) {
    std::vector<std::string> names;
    for (auto& [n, v] : e.spec.params) names.push_back(n);
    std::vector<std::map<std::string, Rational>> out;
    if (names.empty()) {
        out.push_back({});
        return out;
    }
    std::mt19937 rng(0xACCE5500u + salt);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    for (int attempt = 0; attempt < 4000 && out.size() < count; ++attempt) {
        std::map<std::string, Rational> b;
        for (auto& n : names) b[n] = make_rational(num(rng), den(rng));
        if (admissible(e, b)) out.push_back(std::move(b));
    }
    return out;
}

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void run(int id, const std::string& title,
         const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    report(id, ok, title, detail);
}

// --- criteria ---------------------------------------------------------------

bool golden_identities(std::string& detail) {
    for (auto& id : printed_cases) {
        const auto& e = corpus::get(id);
        PlanarField F{e.spec.dot_x, e.spec.dot_y};
        auto curves = curves_of(e.spec, F);
        auto N = certgen::build_N_symbolic(F, curves, e.expected->alphas, e.expected->g);
        if (!N.equals(e.expected->N)) {
            detail = id + ": rebuilt N differs from the printed one";
            return false;
        }
    }
    detail = "8 symbolic identities";
    return true;
}

bool cofactor_suite(std::string& detail) {
    auto expect = [&](const std::string& id, std::size_t curve, const MultiPoly& k) {
        const auto& e = corpus::get(id);
        PlanarField F{e.spec.dot_x, e.spec.dot_y};
        auto inv = darboux::cofactor_of(F, e.spec.curves[curve]);
        if (inv.cofactor != k) {
            detail = id + ": cofactor " + inv.cofactor.to_string() + " != " + k.to_string();
            return false;
        }
        return true;
    };
    for (auto& id : printed_cases) {
        const auto& e = corpus::get(id);
        if (!expect(id, 0, *e.spec.curves[0].declared_cofactor)) return false;
    }
    if (!expect("parabola", 0, P("-2*c*x+2*e*y+d"))) return false;
    if (!expect("hyperbola", 0, P("2*(u*x-v*y)"))) return false;
    if (!expect("antiversiera", 0, P("-6*k1*r+4*k1*x-32*k2*y"))) return false;
    if (!expect("degree12", 0, P("12*(x+y)"))) return false;
    if (!expect("cub1", 0, P("-2*(a*x^2+x*y+a*y^2)"))) return false;
    if (!expect("cub2", 0, P("(1-x+2*y)*(2*x+y)"))) return false;
    if (!expect("cubic_invariant", 0, P("u-x"))) return false;
    if (!expect("qsl_line", 0, P("x"))) return false;
    if (!expect("lienard3", 0, P("-x"))) return false;  // exp(y) factor
    detail = "17 printed cofactors";
    return true;
}

bool quartic_discriminant(std::string& detail) {
    MultiPoly quartic = P("a*x^4+b*x^3+c*x^2+d*x+e");
    MultiPoly printed =
        P("256*a^3*e^3 - 192*a^2*b*d*e^2 - 128*a^2*c^2*e^2 + 144*a^2*c*d^2*e"
          "- 27*a^2*d^4 + 144*a*b^2*c*e^2 - 6*a*b^2*d^2*e - 80*a*b*c^2*d*e"
          "+ 18*a*b*c*d^3 + 16*a*c^4*e - 4*a*c^3*d^2 - 27*b^4*e^2 + 18*b^3*c*d*e"
          "- 4*b^3*d^3 - 4*b^2*c^3*e + b^2*c^2*d^2");
    if (poly::discriminant(quartic, "x") != printed) {
        detail = "generic quartic discriminant mismatch";
        return false;
    }
    if (poly::discriminant(P("x^4-1"), "x") != MultiPoly(Rational(-256)) ||
        poly::real_root_count(P("x^4-1"), "x") != 2) {
        detail = "x^4-1 verdict";
        return false;
    }
    // Delta > 0 with R = 3b^2 - 8ac < 0 excludes real roots
    std::map<std::string, Rational> b = {{"a", Rational(1)}, {"b", Rational(0)},
                                         {"c", Rational(1)}, {"d", Rational(0)},
                                         {"e", Rational(1)}};
    Rational delta = subst_params(printed, b).constant_value();
    Rational R = 3 * b["b"] * b["b"] - 8 * b["a"] * b["c"];
    if (!(sgn(delta) > 0 && sgn(R) < 0 &&
          poly::real_root_count(P("x^4+x^2+1"), "x") == 0)) {
        detail = "R gate";
        return false;
    }
    detail = "16-term identity and both sign verdicts";
    return true;
}

bool quintic_lienard(std::string& detail) {
    if (!certsearch::lienard_quintic_identity_defect().is_zero()) {
        detail = "disc(Q) + 2^32 U W^3 is not identically zero";
        return false;
    }
    auto good = certsearch::lienard_quintic_condition(Rational(1), Rational(0),
                                                      Rational(3), Rational(0));
    auto bad = certsearch::lienard_quintic_condition(Rational(0), Rational(0),
                                                     Rational(1), Rational(0));
    if (!good.holds || bad.holds) {
        detail = "sign gate";
        return false;
    }
    detail = "identity and sign gate";
    return true;
}

bool parabola_pipeline(std::string& detail) {
    const auto& para = corpus::get("parabola");
    PlanarField F{para.spec.dot_x, para.spec.dot_y};
    auto curves = curves_of(para.spec, F);
    auto out = certsearch::search_discriminant(F, curves[0], "y");
    auto* pc = std::get_if<certsearch::ParametricCondition>(&out);
    if (!pc) {
        detail = "no parametric condition";
        return false;
    }
    if (pc->tmpl.quad.degree(pc->tmpl.alpha_var) != 2) {
        detail = "condition is not quadratic in alpha";
        return false;
    }
    MultiPoly delta =
        P("(16*a^2*e^3+((-8*b*c-16*h*b-12*c*d-8*d*h)*a+(2*b-d)^3)*e^2"
          "-2*(c+h)*(4*c*(c+2*h)*a-8*b^2*c+6*b*c*d-4*b*d*h-3*c*d^2)*e"
          "+8*c*(c+h)^2*(b*c+d*h))*((2*b-d)*e+2*c^2+2*h*c)*e");
    MultiPoly lead = P("(2*b-d)*e+2*c^2+2*h*c");
    MultiPoly closed = MultiPoly(Rational(4)) * lead * lead * delta;
    if (poly::discriminant(pc->tmpl.quad, pc->tmpl.alpha_var) != closed ||
        pc->inequality != closed) {
        detail = "alpha-discriminant differs from 4((2b-d)e+2c^2+2hc)^2 Delta";
        return false;
    }
    // bindings built multiplier-first: fix five parameters and the multiplier,
    // solve the quadratic for a; rational roots force Delta >= 0
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> alphas = {Rational(1),     Rational(-1), Rational(2),
                                    Rational(1, 2), Rational(-2), Rational(3)};
    std::size_t found = 0;
    for (int attempt = 0; attempt < 4000 && found < 10; ++attempt) {
        std::map<std::string, Rational> part = {
            {"b", Rational(coeff(rng))}, {"c", Rational(coeff(rng))},
            {"d", Rational(coeff(rng))}, {"e", Rational(coeff(rng))},
            {"h", Rational(coeff(rng))}};
        MultiPoly q = subst_params(pc->tmpl.quad, part);
        q = q.subst(pc->tmpl.alpha_var, MultiPoly(alphas[attempt % alphas.size()]));
        if (q.degree("a") < 1) continue;
        auto roots = poly::rational_roots(q, "a");
        if (roots.empty()) continue;
        part["a"] = roots[0];
        if (sgn(subst_params(delta, part).constant_value()) < 0) continue;
        auto inst = certsearch::instantiate(*pc, part);
        if (std::holds_alternative<certsearch::Found>(inst)) ++found;
    }
    if (found < 10) {
        detail = "only " + std::to_string(found) + " instantiations succeeded";
        return false;
    }
    detail = "closed form matched; 10 concrete certificates";
    return true;
}

bool search_rediscovery(std::string& detail) {
    std::vector<std::string> families = printed_cases;
    families.push_back("hyperbola");
    unsigned salt = 0;
    for (auto& id : families) {
        const auto& e = corpus::get(id);
        auto bindings = admissible_bindings(e, 3, salt++);
        if (bindings.size() < 3) {
            detail = id + ": not enough admissible bindings";
            return false;
        }
        for (auto& b : bindings) {
            auto spec = e.spec.bind(b);
            PlanarField F{spec.dot_x, spec.dot_y};
            auto curves = curves_of(spec, F);
            certsearch::ScaledSquareTarget t;
            t.g_degree = e.search.g_degree;
            if (e.search.fix_alphas && e.expected)
                for (auto& a : e.expected->alphas)
                    t.alphas.push_back(subst_params(a.num, b).constant_value() /
                                       subst_params(a.den, b).constant_value());
            auto out = certsearch::search_square(F, curves, t);
            if (!std::holds_alternative<certsearch::Found>(out)) {
                std::ostringstream os;
                os << id << ": no certificate at";
                for (auto& [k, v] : b) os << " " << k << "=" << v.get_str();
                detail = os.str();
                return false;
            }
        }
    }
    // inside the two-cycle parameter range no certificate may exist
    auto spec = corpus::get("cub1").spec.bind({{"a", Rational(-3, 10)}});
    PlanarField F{spec.dot_x, spec.dot_y};
    auto curves = curves_of(spec, F);
    for (unsigned deg : {1u, 2u}) {
        certsearch::ScaledSquareTarget t;
        t.g_degree = deg;
        if (!std::holds_alternative<certsearch::NoCertificateFound>(
                certsearch::search_square(F, curves, t))) {
            detail = "cub1 at a=-3/10 produced a certificate";
            return false;
        }
    }
    detail = "9 families x 3 bindings; cub1 counterexample";
    return true;
}

bool qs_bounds_calculus(std::string& detail) {
    qsbounds::CofactorMatrix unit{{Rational(1), Rational(0), Rational(0)},
                                  {Rational(0), Rational(1), Rational(0)},
                                  {Rational(0), Rational(0), Rational(1)}};
    if (qsbounds::bound_limit_cycles(unit, 1, false).bound != 4 ||
        qsbounds::bound_limit_cycles(unit, 4, false).bound != 10 ||
        qsbounds::bound_limit_cycles(unit, 4, true).bound != 8 ||
        qsbounds::bound_limit_cycles(unit, 0, true).bound != 0 ||
        qsbounds::degree_bound(4, 4, false) != 10) {
        detail = "printed bounds";
        return false;
    }
    for (int M = 0; M <= 6; ++M)
        if (qsbounds::bound_limit_cycles(unit, M, false).bound != 2 * M + 2) {
            detail = "generic bound is not 2M+2";
            return false;
        }
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> c(-5, 5);
    int done = 0;
    while (done < 50) {
        qsbounds::CofactorMatrix m{
            {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))},
            {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))},
            {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))}};
        Rational d12 = m.delta12(), d1 = m.delta1(), d2 = m.delta2();
        if (sgn(m.detA()) == 0 || sgn(d12) == 0 || sgn(d12 - d2) == 0 ||
            sgn(d12 + d1) == 0)
            continue;
        Rational T(2);
        // off the curves: k1.u = k2.u = 0
        {
            Rational X = (-m.k1.a * T * m.k2.c + m.k2.a * T * m.k1.c) / d12;
            Rational Y = (m.k1.a * m.k2.b - m.k2.a * m.k1.b) * T / d12;
            Rational h = m.div.a * T + m.div.b * X + m.div.c * Y;
            if (h * d12 != m.detA() * T) {
                detail = "h*delta12 != detA*T";
                return false;
            }
        }
        // on f1: (div - k1).u = 0, k2.u = 0
        {
            Rational ab = m.div.b - m.k1.b, ac = m.div.c - m.k1.c,
                     aa = m.div.a - m.k1.a;
            Rational den = ab * m.k2.c - ac * m.k2.b;  // = delta2 - delta12
            Rational X = (-aa * T * m.k2.c + m.k2.a * T * ac) / den;
            Rational Y = (aa * m.k2.b - m.k2.a * ab) * T / den;
            Rational h = m.div.a * T + m.div.b * X + m.div.c * Y;
            if (h * (d12 - d2) != m.detA() * T) {
                detail = "h*(delta12-delta2) != detA*T";
                return false;
            }
        }
        // on f2: (div - k2).u = 0, k1.u = 0
        {
            Rational ab = m.div.b - m.k2.b, ac = m.div.c - m.k2.c,
                     aa = m.div.a - m.k2.a;
            Rational den = ab * m.k1.c - ac * m.k1.b;
            Rational X = (-aa * T * m.k1.c + m.k1.a * T * ac) / den;
            Rational Y = (aa * m.k1.b - m.k1.a * ab) * T / den;
            Rational h = m.div.a * T + m.div.b * X + m.div.c * Y;
            if (h * (d12 + d1) != m.detA() * T) {
                detail = "h*(delta12+delta1) != detA*T";
                return false;
            }
        }
        auto cp = qsbounds::critical_point_off_curves(m);
        auto* p = std::get_if<qsbounds::CriticalPoint>(&cp);
        if (!p || p->d != m.detA() / d12) {
            detail = "d != detA/delta12";
            return false;
        }
        ++done;
    }
    detail = "printed bounds and 50 randomized identities";
    return true;
}

bool parabola_to_line_identity(std::string& detail) {
    // printed transformed field, with the parameters kept symbolic
    MultiPoly X = P("x"), Y = P("y");
    MultiPoly dx = P("-c*x+e*y+(b-d)*x^2+(2*c+h)*x*y-e*y^2");
    MultiPoly dy = P("(y-1)*((2*b-d)*x+2*(c+h)*y)");
    auto quot = poly::exact_div(dy, P("y-1"));
    if (!quot || *quot != P("(2*b-d)*x+2*(c+h)*y")) {
        detail = "symbolic quotient cofactor";
        return false;
    }
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int i = 0; i < 20; ++i) {
        std::map<std::string, Rational> b = {
            {"b", Rational(c(rng))}, {"c", Rational(c(rng))}, {"d", Rational(c(rng))},
            {"e", Rational(c(rng))}, {"h", Rational(c(rng))}};
        qsbounds::ParabolaParams p{Rational(0), b["b"], b["c"], b["d"], b["e"], b["h"]};
        auto F = qsbounds::parabola_to_line(p);
        if (F.dot_x != subst_params(dx, b) || F.dot_y != subst_params(dy, b)) {
            detail = "transformed field differs from the printed one";
            return false;
        }
        sysio::CurveSpec line;
        line.defining_poly = P("y-1");
        auto inv = darboux::cofactor_of(F, line);
        if (inv.cofactor != subst_params(*quot, b)) {
            detail = "quotient cofactor at a binding";
            return false;
        }
    }
    detail = "symbolic identity and 20 bindings";
    return true;
}

bool numerics(std::string& detail) {
    using numlab::Section;
    auto start = std::chrono::steady_clock::now();
    auto qin = corpus::get("qin")
                   .spec.bind({{"a", Rational(1)}, {"b", Rational(0)}, {"c", Rational(2)}})
                   .bound();
    auto f = numlab::numeric_field({qin.dot_x, qin.dot_y});
    Section sec{0, 0, 1, 0, +1};
    auto r = numlab::find_cycle(f, sec, 0.5, 1.5);
    auto* cyc = std::get_if<numlab::CycleInfo>(&r);
    if (!cyc || std::abs(cyc->x - 1.0) > 1e-8) {
        detail = "circle fixed point";
        return false;
    }
    if (!std::holds_alternative<numlab::NoneFound>(numlab::find_cycle(f, sec, 0.05, 0.95)) ||
        !std::holds_alternative<numlab::NoneFound>(numlab::find_cycle(f, sec, 1.05, 3.0))) {
        detail = "spurious cycle in an empty bracket";
        return false;
    }
    if (std::abs(cyc->h) <= 1e-6) {
        detail = "characteristic exponent vanishes";
        return false;
    }
    numlab::ScalarField k(P("-2*x"));
    double hk = numlab::cycle_integral(f, *cyc, k);
    if (std::abs(hk - cyc->h) / std::abs(cyc->h) > 1e-6) {
        detail = "int div and int k disagree";
        return false;
    }
    numlab::Grid grid{sec, 0.1, 3.0, 8};
    auto d12 = numlab::cross_validate(corpus::get("degree12"), {}, grid);
    if (!d12.pass || !d12.hits.empty()) {
        detail = "degree-12 sweep found a cycle";
        return false;
    }
    auto cub1 = corpus::get("cub1").spec.bind({{"a", Rational(-3, 10)}}).bound();
    auto fc = numlab::numeric_field({cub1.dot_x, cub1.dot_y});
    auto outer = numlab::find_cycle(fc, Section{0, 0, 1, 0, -1}, 1.05, 3.0);
    auto* oc = std::get_if<numlab::CycleInfo>(&outer);
    if (!oc || std::abs(oc->x * oc->x + oc->y * oc->y - 1.0) < 0.1) {
        detail = "no off-circle cycle for the cubic system";
        return false;
    }
    auto qsl = corpus::get("qsl_line").spec.bind({{"d", Rational(1, 50)}}).bound();
    auto fq = numlab::numeric_field({qsl.dot_x, qsl.dot_y});
    auto qc = numlab::find_cycle(fq, Section{0, 0, 1, 0, +1}, 2.5, 4.0);
    if (!std::holds_alternative<numlab::CycleInfo>(qc)) {
        detail = "no cycle for the invariant-line system at d=1/50";
        return false;
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (secs >= 30) {
        detail = "runs exceeded 30 s";
        return false;
    }
    std::ostringstream os;
    os << "all scenarios in " << secs << " s";
    detail = os.str();
    return true;
}

bool consistency_gate(std::string& detail) {
    numlab::Grid grid{numlab::Section{0, 0, 1, 0, +1}, 0.1, 2.5, 6};
    unsigned salt = 100;
    std::size_t checked = 0;
    for (auto& id : corpus::list()) {
        const auto& e = corpus::get(id);
        if (!e.expected) continue;  // no certificate to contradict
        std::map<std::string, Rational> b;
        if (!e.sample_bindings.empty()) {
            b = e.sample_bindings.front();
        } else {
            auto bs = admissible_bindings(e, 1, salt++);
            if (bs.empty()) {
                detail = id + ": no admissible binding";
                return false;
            }
            b = bs.front();
        }
        auto rep = numlab::cross_validate(e, b, grid);
        if (!rep.pass) {
            detail = id + ": " + rep.detail;
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " entries swept, zero violations";
    return true;
}

}  // namespace

int main() {
    run(1, "golden certificate identities for the eight printed cases", golden_identities);
    run(2, "printed cofactors reproduce exactly", cofactor_suite);
    run(3, "quartic discriminant lemma", quartic_discriminant);
    run(4, "quintic Lienard identity and sign gate", quintic_lienard);
    run(5, "parabola discriminant pipeline", parabola_pipeline);
    run(6, "square-search rediscovery and soundness", search_rediscovery);
    run(7, "quadratic-system bound calculus", qs_bounds_calculus);
    run(8, "parabola-to-line transform", parabola_to_line_identity);
    run(9, "numeric lab scenarios", numerics);
    run(10, "certificate/simulation consistency gate", consistency_gate);
    return failures == 0 ? 0 : 1;
}
