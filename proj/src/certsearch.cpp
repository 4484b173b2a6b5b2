#include "cyclecert/certsearch.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cyclecert::certsearch {

using certgen::RatPoly;
using poly::Monomial;

namespace {

const std::set<std::string> kState{"x", "y"};

std::vector<Monomial> state_monomials(unsigned d) {
    std::vector<Monomial> ms;
    for (unsigned t = 0; t <= d; ++t)
        for (unsigned i = 0; i <= t; ++i)
            ms.push_back(Monomial("x", i) * Monomial("y", t - i));
    return ms;
}

// Group the terms of p by the sub-monomial built from the given variables.
std::map<Monomial, MultiPoly, poly::GradedLexGreater> split_by(
        const MultiPoly& p, const std::set<std::string>& vars) {
    std::map<Monomial, MultiPoly, poly::GradedLexGreater> out;
    for (auto& [m, c] : p.terms()) {
        Monomial in_part, out_part;
        for (auto& [v, e] : m.exponents()) {
            if (vars.count(v))
                in_part = in_part * Monomial(v, e);
            else
                out_part = out_part * Monomial(v, e);
        }
        out[in_part] += MultiPoly::term(c, out_part);
    }
    return out;
}

MultiPoly build_symbolic_N(const PlanarField& F, const std::vector<InvariantObject>& curves,
                           const std::vector<MultiPoly>& alphas, const MultiPoly& g) {
    MultiPoly N;
    for (std::size_t i = 0; i < curves.size(); ++i)
        N += alphas[i] * curves[i].cofactor * g;
    N += g.diff("x") * F.dot_x + g.diff("y") * F.dot_y;
    return N;
}

bool witness_ok(const MultiPoly& N, const certgen::SignWitness& w) {
    try {
        certgen::check_witness(N, w);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

// Full verification gate for a numeric candidate. The search never reports
// Found without passing this.
std::optional<Certificate> verify_candidate(const PlanarField& F,
                                            const std::vector<InvariantObject>& curves,
                                            const std::vector<Rational>& alphas, MultiPoly g,
                                            const std::vector<SideCondition>& side) {
    if (g.is_zero()) return std::nullopt;
    g = g.primitive_part();
    MultiPoly N = certgen::build_N(F, curves, alphas, g);
    Certificate cert;
    cert.curves = curves;
    for (auto& a : alphas) cert.alphas.push_back(ParamRational(a));
    cert.g = g;
    cert.N = N;
    cert.side_conditions = side;
    if (N.is_zero()) {
        auto fi = certgen::check_first_integral(F, curves, alphas, g);
        if (!fi.certified) return std::nullopt;
        cert.witness = certgen::IdenticallyZero{};
        cert.conclusion = {certgen::Conclusion::Kind::NoLimitCyclesOffCurves, fi.detail};
        return cert;
    }
    if (auto sq = poly::poly_sqrt(N)) {
        certgen::SignWitness w = certgen::ScaledSquare{sq->ratio, sq->w};
        if (witness_ok(N, w) && certgen::check_zero_set(F, w, N).ok) {
            cert.witness = w;
            cert.conclusion = {certgen::Conclusion::Kind::NoPeriodicOrbitsOffCurves,
                               "N is a scaled square"};
            return cert;
        }
    }
    auto vars = N.variables();
    if (vars.size() == 1) {
        for (int s : {+1, -1}) {
            certgen::SignWitness w = certgen::UnivariatePSD{*vars.begin(), s};
            if (witness_ok(N, w) && certgen::check_zero_set(F, w, N).ok) {
                cert.witness = w;
                cert.conclusion = {certgen::Conclusion::Kind::NoPeriodicOrbitsOffCurves,
                                   "N univariate of constant sign"};
                return cert;
            }
        }
    }
    return std::nullopt;
}

bool is_plain_rational(const ParamRational& v) {
    return v.num.is_constant() && v.den.is_constant() && !v.den.is_zero();
}

// Numeric assignments for the unknowns of the system. Univariate reductions
// are re-solved after substituting each rational root: back-substituting into
// the elimination chain alone can silently drop constraints whose pivot
// degenerates at that root.
std::vector<std::map<std::string, Rational>> numeric_candidates(const CoeffSystem& sys,
                                                                int depth = 0) {
    std::vector<std::map<std::string, Rational>> out;
    SolveResult res = solve_coeff_system(sys);
    auto finish = [&out](const std::vector<Elimination>& chain,
                         const std::vector<std::string>& frees,
                         std::map<std::string, ParamRational> seed) {
        std::vector<std::map<std::string, ParamRational>> seeds;
        {
            auto s = seed;
            for (auto& f : frees)
                if (!s.count(f)) s[f] = ParamRational(Rational(0));
            seeds.push_back(s);
        }
        for (auto& f1 : frees) {
            if (seed.count(f1)) continue;
            auto s = seed;
            for (auto& f : frees)
                if (!s.count(f)) s[f] = ParamRational(Rational(f == f1 ? 1 : 0));
            seeds.push_back(s);
        }
        for (auto& s : seeds) {
            auto resolved = resolve_chain(chain, s);
            if (!resolved) continue;
            std::map<std::string, Rational> vals;
            bool ok = true;
            for (auto& [k, v] : *resolved) {
                if (!is_plain_rational(v)) {
                    ok = false;
                    break;
                }
                vals[k] = v.num.constant_value() / v.den.constant_value();
            }
            if (ok) out.push_back(vals);
        }
    };

    if (auto* s = std::get_if<Solved>(&res)) {
        finish(s->chain, s->free_unknowns, {});
    } else if (auto* r = std::get_if<ReducedToUnivariate>(&res)) {
        if (r->poly.variables() == std::set<std::string>{r->var}) {
            for (auto& root : poly::rational_roots(r->poly, r->var)) {
                finish(r->chain, {}, {{r->var, ParamRational(root)}});
                if (depth >= 8) continue;
                CoeffSystem sub;
                for (auto& e : sys.equations) {
                    MultiPoly s = e.subst(r->var, MultiPoly(root));
                    if (!s.is_zero()) sub.equations.push_back(s);
                }
                for (auto& u : sys.unknowns)
                    if (u != r->var) sub.unknowns.push_back(u);
                for (auto cand : numeric_candidates(sub, depth + 1)) {
                    cand[r->var] = root;
                    out.push_back(std::move(cand));
                }
            }
        }
    } else if (auto* u = std::get_if<Unsolved>(&res)) {
        std::set<std::string> vars;
        for (auto& e : u->residual)
            for (auto& v : e.variables()) vars.insert(v);
        if (vars.size() > 6) return out;
        // Back-substitution over the stalled equations: peel univariate
        // equations first, then two-variable pairs through a resultant. Each
        // substitution makes more equations univariate, so the recursion
        // drains the variable set.
        std::function<void(const std::vector<MultiPoly>&, std::map<std::string, ParamRational>)>
            go = [&](const std::vector<MultiPoly>& eqs,
                     std::map<std::string, ParamRational> seed) {
                if (out.size() >= 16) return;
                std::vector<MultiPoly> live;
                for (auto& e : eqs) {
                    if (e.is_zero()) continue;
                    if (e.is_constant()) return;
                    live.push_back(e);
                }
                if (live.empty()) {
                    finish(u->chain, {}, std::move(seed));
                    return;
                }
                auto with = [&](const std::string& v, const Rational& r) {
                    std::vector<MultiPoly> next;
                    for (auto& e : live)
                        next.push_back(e.depends_on(v) ? e.subst(v, MultiPoly(r)) : e);
                    auto s = seed;
                    s[v] = ParamRational(r);
                    go(next, std::move(s));
                };
                for (auto& e : live) {
                    auto vs = e.variables();
                    if (vs.size() != 1) continue;
                    std::string v = *vs.begin();
                    for (auto& r : poly::rational_roots(e, v)) with(v, r);
                    return;  // no rational root of e means no rational solution
                }
                for (std::size_t i = 0; i + 1 < live.size(); ++i) {
                    for (std::size_t j = i + 1; j < live.size(); ++j) {
                        auto vs = live[i].variables();
                        for (auto& v : live[j].variables()) vs.insert(v);
                        if (vs.size() != 2) continue;
                        auto it = vs.begin();
                        std::string v1 = *it++, v2 = *it;
                        if (!live[i].depends_on(v2) || !live[j].depends_on(v2)) std::swap(v1, v2);
                        if (!live[i].depends_on(v2) || !live[j].depends_on(v2)) continue;
                        MultiPoly r = poly::resultant(live[i], live[j], v2);
                        if (r.is_zero() || r.variables() != std::set<std::string>{v1}) continue;
                        for (auto& r1 : poly::rational_roots(r, v1)) with(v1, r1);
                        return;
                    }
                }
            };
        go(u->residual, {});
    }
    return out;
}

// Remove from q every factor free of the unknowns: the gcd-content of its
// unknown-monomial coefficients and any plain monomial in the unknowns.
MultiPoly strip_unknown_content(MultiPoly q, const std::set<std::string>& unknowns) {
    if (q.is_zero()) return q;
    auto groups = split_by(q, unknowns);
    MultiPoly cont;
    for (auto& [m, c] : groups) cont = poly::poly_gcd(cont, c);
    if (!cont.is_constant()) q = *poly::exact_div(q, cont);
    for (auto& v : unknowns) {
        MultiPoly var = MultiPoly::variable(v);
        while (true) {
            auto d = poly::exact_div(q, var);
            if (!d) break;
            q = *d;
        }
    }
    return q.primitive_part();
}

}  // namespace

// --- solve_coeff_system -----------------------------------------------------

RatPoly subst_all(const MultiPoly& p, const std::map<std::string, ParamRational>& vals) {
    RatPoly r{p, MultiPoly(Rational(1))};
    for (auto& [v, pr] : vals) {
        if (!r.num.depends_on(v)) continue;
        unsigned d = r.num.degree(v);
        auto cs = r.num.coeffs_in(v);
        MultiPoly acc;
        for (unsigned j = 0; j <= d; ++j)
            acc += cs[j] * pr.num.pow(j) * pr.den.pow(d - j);
        r.num = acc;
        r.den = r.den * pr.den.pow(d);
    }
    return r;
}

std::optional<std::map<std::string, ParamRational>> resolve_chain(
        const std::vector<Elimination>& chain, std::map<std::string, ParamRational> values) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        RatPoly n = subst_all(it->num, values);
        RatPoly d = subst_all(it->den, values);
        if (d.num.is_zero()) {
            // The pivot equation den*u = num degenerated to 0*u = 0: u is
            // unconstrained here and any completion is re-verified later.
            if (!n.num.is_zero()) return std::nullopt;
            values[it->unknown] = ParamRational(Rational(0));
            continue;
        }
        values[it->unknown] = ParamRational(n.num * d.den, n.den * d.num);
    }
    return values;
}

SolveResult solve_coeff_system(const CoeffSystem& s) {
    std::vector<MultiPoly> eqs;
    for (auto& e : s.equations)
        if (!e.is_zero()) eqs.push_back(e);
    std::set<std::string> unknowns(s.unknowns.begin(), s.unknowns.end());
    std::vector<Elimination> chain;
    auto side = s.side_conditions;

    auto stall = [&](std::vector<MultiPoly> residual) {
        Unsolved u;
        u.residual = std::move(residual);
        u.chain = chain;
        u.side_conditions = side;
        return u;
    };

    while (true) {
        std::vector<MultiPoly> live;
        for (auto& e : eqs) {
            if (e.is_zero()) continue;
            if (e.is_constant()) return stall({MultiPoly(Rational(1))});
            live.push_back(e.primitive_part());
        }
        eqs = std::move(live);
        if (eqs.empty()) {
            Solved out;
            out.chain = chain;
            out.side_conditions = side;
            std::map<std::string, ParamRational> vals;
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                RatPoly n = subst_all(it->num, vals);
                RatPoly d = subst_all(it->den, vals);
                if (d.num.is_zero()) return stall({MultiPoly(Rational(1))});
                vals[it->unknown] = ParamRational(n.num * d.den, n.den * d.num);
            }
            out.values = std::move(vals);
            out.free_unknowns.assign(unknowns.begin(), unknowns.end());
            return out;
        }

        struct Pivot {
            std::size_t eq;
            std::string u;
            unsigned cdeg;
        };
        std::optional<Pivot> best;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            for (auto& u : unknowns) {
                if (eqs[i].degree(u) != 1) continue;
                unsigned cd = eqs[i].coeffs_in(u)[1].total_degree();
                if (!best || cd < best->cdeg || (cd == best->cdeg && u < best->u))
                    best = Pivot{i, u, cd};
            }
        }
        if (!best) {
            if (eqs.size() == 1) {
                std::vector<std::string> present;
                for (auto& u : unknowns)
                    if (eqs[0].depends_on(u)) present.push_back(u);
                if (present.size() == 1) {
                    ReducedToUnivariate r;
                    r.poly = eqs[0];
                    r.var = present[0];
                    r.chain = chain;
                    r.side_conditions = side;
                    return r;
                }
            }
            return stall(eqs);
        }

        auto cs = eqs[best->eq].coeffs_in(best->u);
        MultiPoly num = -cs[0], den = cs[1];
        chain.push_back({best->u, num, den});
        if (!den.is_constant())
            side.push_back({den, SideCondition::Relation::NonZero});
        std::vector<MultiPoly> rest;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i == best->eq) continue;
            unsigned d = eqs[i].degree(best->u);
            if (d == 0) {
                rest.push_back(eqs[i]);
                continue;
            }
            auto qc = eqs[i].coeffs_in(best->u);
            MultiPoly acc;
            for (unsigned j = 0; j <= d; ++j)
                acc += qc[j] * num.pow(j) * den.pow(d - j);
            rest.push_back(acc);
        }
        eqs = std::move(rest);
        unknowns.erase(best->u);
    }
}

// --- search_square ----------------------------------------------------------

SearchOutcome search_square(const PlanarField& F, const std::vector<InvariantObject>& curves,
                            const ScaledSquareTarget& ansatz) {
    std::vector<std::optional<Rational>> aspec = ansatz.alphas;
    if (aspec.empty()) aspec.assign(curves.size(), std::nullopt);

    std::vector<MultiPoly> alphas;
    std::vector<std::string> base_unknowns;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (aspec[i]) {
            alphas.push_back(MultiPoly(*aspec[i]));
        } else {
            std::string nm = "$a" + std::to_string(i);
            alphas.push_back(MultiPoly::variable(nm));
            base_unknowns.push_back(nm);
        }
    }

    auto gms = state_monomials(ansatz.g_degree);
    std::vector<std::string> gnames;
    MultiPoly g;
    for (std::size_t j = 0; j < gms.size(); ++j) {
        gnames.push_back("$g" + std::to_string(j));
        g += MultiPoly::variable(gnames[j]) * MultiPoly::term(Rational(1), gms[j]);
    }

    MultiPoly N0 = build_symbolic_N(F, curves, alphas, g);
    unsigned degN = N0.degree_in(kState);
    unsigned wdeg = std::min(3u, (degN + 1) / 2);
    auto wms = state_monomials(wdeg);

    for (std::size_t j0 = 0; j0 < gms.size(); ++j0) {
        MultiPoly N = N0.subst(gnames[j0], MultiPoly(Rational(1)));
        for (std::size_t k0 = 0; k0 < wms.size(); ++k0) {
            // w normalized to leading coefficient 1 at monomial index k0
            MultiPoly w = MultiPoly::term(Rational(1), wms[k0]);
            std::vector<std::string> wnames;
            for (std::size_t k = 0; k < k0; ++k) {
                wnames.push_back("$w" + std::to_string(k));
                w += MultiPoly::variable(wnames[k]) * MultiPoly::term(Rational(1), wms[k]);
            }
            MultiPoly target = N - MultiPoly::variable("$r") * w * w;

            CoeffSystem sys;
            for (auto& [m, c] : split_by(target, kState)) sys.equations.push_back(c);
            sys.unknowns = base_unknowns;
            for (std::size_t j = 0; j < gnames.size(); ++j)
                if (j != j0) sys.unknowns.push_back(gnames[j]);
            sys.unknowns.push_back("$r");
            for (auto& wn : wnames) sys.unknowns.push_back(wn);

            // Pivot side conditions are elimination artifacts; every numeric
            // candidate goes through the full verification gate instead.
            for (auto& vals : numeric_candidates(sys)) {
                auto full = vals;
                full[gnames[j0]] = Rational(1);
                std::vector<Rational> avals;
                bool ok = true;
                for (std::size_t i = 0; i < curves.size(); ++i) {
                    if (aspec[i]) {
                        avals.push_back(*aspec[i]);
                    } else {
                        auto it = full.find("$a" + std::to_string(i));
                        if (it == full.end()) {
                            ok = false;
                            break;
                        }
                        avals.push_back(it->second);
                    }
                }
                if (!ok) continue;
                MultiPoly gval;
                for (std::size_t j = 0; j < gms.size(); ++j) {
                    auto it = full.find(gnames[j]);
                    if (it != full.end())
                        gval += MultiPoly::term(it->second, gms[j]);
                }
                if (auto cert = verify_candidate(F, curves, avals, gval, {}))
                    return Found{*cert};
            }
        }
    }
    std::ostringstream os;
    os << "no (alpha, g) with N = r w^2, g degree <= " << ansatz.g_degree;
    return NoCertificateFound{os.str()};
}

// --- search_discriminant ----------------------------------------------------

SearchOutcome search_discriminant(const PlanarField& F, const InvariantObject& curve,
                                  const std::string& var) {
    const std::string other = var == "x" ? "y" : "x";
    const std::set<std::string> line_vars{"$g1", "$g2"};
    MultiPoly g = MultiPoly::variable("$g0") +
                  MultiPoly::variable("$g1") * MultiPoly::variable("x") +
                  MultiPoly::variable("$g2") * MultiPoly::variable("y");
    MultiPoly al = MultiPoly::variable("$alpha");
    MultiPoly N = al * curve.cofactor * g + g.diff("x") * F.dot_x + g.diff("y") * F.dot_y;

    if (N.degree(var) > 2)
        throw NotQuadraticInVar("N has degree " + std::to_string(N.degree(var)) + " in " + var);
    if (N.degree(var) < 2 || N.degree(other) < 2)
        return NoCertificateFound{"N degenerate: not quadratic in both state variables"};

    auto cv = N.coeffs_in(var);
    MultiPoly D = cv[1] * cv[1] - MultiPoly(Rational(4)) * cv[2] * cv[0];
    auto ss = D.coeffs_in(other);

    // Eliminate the free coefficient only; the two linear coefficients stay
    // as line parameters for the consistency analysis below.
    CoeffSystem sys;
    sys.equations = ss;
    sys.unknowns = {"$alpha", "$g0"};
    auto res = solve_coeff_system(sys);

    auto emit = [&](const MultiPoly& quad, const std::map<std::string, MultiPoly>& direct,
                    const std::vector<Elimination>& chain,
                    const std::vector<SideCondition>& side) -> SearchOutcome {
        auto vq = quad.coeffs_in("$alpha");
        MultiPoly ineq = vq[1] * vq[1] - MultiPoly(Rational(4)) * vq[2] * vq[0];
        CertificateTemplate tmpl;
        tmpl.field = F;
        tmpl.curves = {curve};
        tmpl.alpha_var = "$alpha";
        tmpl.quad = quad;
        tmpl.g_shape = {{"$g0", Monomial()}, {"$g1", Monomial("x")}, {"$g2", Monomial("y")}};
        tmpl.direct = direct;
        tmpl.chain = chain;
        tmpl.side_conditions = side;
        return ParametricCondition{ineq, tmpl};
    };

    if (auto* r = std::get_if<ReducedToUnivariate>(&res)) {
        if (r->var == "$alpha" && r->poly.degree("$alpha") == 2)
            return emit(r->poly, {}, r->chain, r->side_conditions);
        return NoCertificateFound{"reduced to a non-quadratic condition"};
    }
    auto* u = std::get_if<Unsolved>(&res);
    if (!u || u->residual.size() < 2)
        return NoCertificateFound{"discriminant system did not reduce to the expected shape"};

    // Strip parameter content off the two residual equations; both must be
    // quadratic in alpha for the minor construction.
    MultiPoly E1 = strip_unknown_content(u->residual[0], line_vars);
    MultiPoly E2 = strip_unknown_content(u->residual[1], line_vars);
    if (E1.degree("$alpha") != 2 || E2.degree("$alpha") != 2)
        return NoCertificateFound{"residual equations are not quadratic in alpha"};

    auto tau = E1.coeffs_in("$alpha");
    auto gam = E2.coeffs_in("$alpha");
    MultiPoly m21 = tau[2] * gam[1] - tau[1] * gam[2];
    MultiPoly m20 = tau[2] * gam[0] - tau[0] * gam[2];
    MultiPoly m10 = tau[1] * gam[0] - tau[0] * gam[1];
    MultiPoly G;
    for (auto& [p, q] : {std::pair{m21, m10}, {m21, m20}, {m20, m10}}) {
        if (p.is_zero() || q.is_zero()) continue;
        G = poly::poly_gcd(p, q);
        if (!G.is_constant()) break;
    }
    if (G.is_zero() || G.is_constant())
        return NoCertificateFound{"no common factor among the consistency minors"};
    G = strip_unknown_content(G, line_vars);

    // The sought relation appears squared; take the repeated part.
    MultiPoly line;
    if (auto sq = poly::poly_sqrt(G)) {
        line = sq->w;
    } else {
        for (auto& v : line_vars) {
            if (!G.depends_on(v)) continue;
            MultiPoly cand = poly::poly_gcd(G, G.diff(v));
            if (!cand.is_constant() && cand.degree_in(line_vars) == 1) {
                line = cand;
                break;
            }
        }
    }
    if (line.is_zero() || line.degree_in(line_vars) != 1 ||
        line.degree("$g1") > 1 || line.degree("$g2") > 1)
        return NoCertificateFound{"no linear relation between the g coefficients"};
    line = line.primitive_part();

    MultiPoly A, B;
    for (auto& [m, c] : split_by(line, line_vars)) {
        if (m.is_one()) {
            if (!c.is_zero()) return NoCertificateFound{"affine relation, not a line"};
        } else if (m.degree("$g1") == 1) {
            A = c;
        } else if (m.degree("$g2") == 1) {
            B = c;
        }
    }

    std::map<std::string, MultiPoly> direct{{"$g1", B}, {"$g2", -A}};
    std::map<std::string, ParamRational> vals{{"$g1", ParamRational(B)},
                                              {"$g2", ParamRational(-A)}};
    auto resolved = resolve_chain(u->chain, vals);
    if (!resolved) return NoCertificateFound{"elimination chain degenerates on the relation"};
    RatPoly top = subst_all(ss.back(), *resolved);
    MultiPoly quad = top.num * Rational(1, 4);
    if (quad.degree("$alpha") != 2)
        return NoCertificateFound{"condition on alpha is not quadratic"};
    return emit(quad, direct, u->chain, u->side_conditions);
}

SearchOutcome instantiate(const ParametricCondition& pc,
                          const std::map<std::string, Rational>& binding) {
    const CertificateTemplate& tmpl = pc.tmpl;
    auto bind_poly = [&](MultiPoly p) {
        for (auto& [k, v] : binding)
            if (p.depends_on(k)) p = p.subst(k, MultiPoly(v));
        return p;
    };
    PlanarField Fb{bind_poly(tmpl.field.dot_x), bind_poly(tmpl.field.dot_y)};
    std::vector<InvariantObject> curves;
    for (auto& c : tmpl.curves)
        curves.push_back({c.kind, bind_poly(c.defining_poly), bind_poly(c.cofactor)});

    MultiPoly quadb = bind_poly(tmpl.quad);
    if (quadb.is_zero() || quadb.variables() != std::set<std::string>{tmpl.alpha_var})
        return NoCertificateFound{"quadratic condition degenerates at this binding"};

    for (auto& alpha : poly::rational_roots(quadb, tmpl.alpha_var)) {
        std::map<std::string, ParamRational> vals;
        vals[tmpl.alpha_var] = ParamRational(alpha);
        for (auto& [unk, p] : tmpl.direct) vals[unk] = ParamRational(bind_poly(p));
        auto resolved = resolve_chain(tmpl.chain, vals);
        if (!resolved) continue;
        MultiPoly g;
        bool ok = true;
        for (auto& [unk, m] : tmpl.g_shape) {
            auto it = resolved->find(unk);
            if (it == resolved->end()) continue;
            MultiPoly n = bind_poly(it->second.num), d = bind_poly(it->second.den);
            if (!n.is_constant() || !d.is_constant() || d.is_zero()) {
                ok = false;
                break;
            }
            g += MultiPoly::term(n.constant_value() / d.constant_value(), m);
        }
        if (!ok) continue;
        if (auto cert = verify_candidate(Fb, curves, {alpha}, g, {}))
            return Found{*cert};
    }
    return NoCertificateFound{"no rational root of the quadratic yields a verified certificate"};
}

// --- search_univariate ------------------------------------------------------

SearchOutcome search_univariate(const PlanarField& F, const std::vector<InvariantObject>& curves,
                                const UnivariateTarget& ansatz) {
    const std::string var = ansatz.var;
    const std::string other = var == "x" ? "y" : "x";

    std::vector<std::optional<Rational>> aspec = ansatz.alphas;
    if (aspec.empty()) aspec.assign(curves.size(), std::nullopt);
    std::vector<MultiPoly> alphas;
    std::vector<std::string> aunknowns;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (aspec[i]) {
            alphas.push_back(MultiPoly(*aspec[i]));
        } else {
            std::string nm = "$a" + std::to_string(i);
            alphas.push_back(MultiPoly::variable(nm));
            aunknowns.push_back(nm);
        }
    }
    if (aunknowns.size() > 1)
        return NoCertificateFound{"univariate search supports at most one unknown multiplier"};

    auto basis = ansatz.g_basis;
    if (basis.empty()) basis = state_monomials(ansatz.g_degree);
    std::vector<std::string> gnames;
    MultiPoly g;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        gnames.push_back("$g" + std::to_string(j));
        g += MultiPoly::variable(gnames[j]) * MultiPoly::term(Rational(1), basis[j]);
    }
    MultiPoly N = build_symbolic_N(F, curves, alphas, g);
    unsigned degv = N.degree(var);

    auto groups = split_by(N, kState);

    for (unsigned m = 0; 2 * m <= degv + 1; ++m) {
        CoeffSystem sys;
        for (auto& [mono, c] : groups) {
            bool kill = mono.degree(other) > 0 || mono.degree(var) < 2 * m;
            if (kill) sys.equations.push_back(c);
        }
        sys.unknowns = gnames;
        for (auto& a : aunknowns) sys.unknowns.push_back(a);
        auto res = solve_coeff_system(sys);
        auto* sol = std::get_if<Solved>(&res);
        if (!sol) continue;

        std::vector<std::string> gfree;
        bool alpha_free = false;
        for (auto& f : sol->free_unknowns) {
            if (f[1] == 'a')
                alpha_free = true;
            else
                gfree.push_back(f);
        }

        for (auto& f1 : gfree) {
            std::map<std::string, ParamRational> seed;
            for (auto& f : gfree) seed[f] = ParamRational(Rational(f == f1 ? 1 : 0));
            auto resolved = resolve_chain(sol->chain, seed);
            if (!resolved) continue;

            // candidate multipliers
            std::vector<Rational> cands = ansatz.alpha_hints;
            RatPoly nrp;
            if (alpha_free) {
                nrp = subst_all(N, *resolved);
                if (nrp.num.is_zero()) continue;
                std::set<std::string> nv = nrp.num.variables();
                nv.erase(var);
                if (nv != std::set<std::string>{aunknowns[0]} && !nv.empty()) continue;
                // quadratic residual: exact roots of its discriminant in alpha
                auto cc = nrp.num.coeffs_in(var);
                unsigned lo = 0;
                while (lo < cc.size() && cc[lo].is_zero()) ++lo;
                unsigned hi = nrp.num.degree(var);
                if (hi - lo == 2) {
                    MultiPoly Dq = cc[lo + 1] * cc[lo + 1] -
                                   MultiPoly(Rational(4)) * cc[lo + 2] * cc[lo];
                    if (!Dq.is_zero() &&
                        Dq.variables() == std::set<std::string>{aunknowns[0]}) {
                        auto roots = poly::rational_roots(Dq, aunknowns[0]);
                        std::sort(roots.rbegin(), roots.rend());
                        for (auto& r : roots) cands.push_back(r);
                    }
                }
                for (long num = 0; num <= 8; ++num)
                    for (long den : {1L, 2L})
                        for (long sign : {1L, -1L}) {
                            if (num == 0 && (den != 1 || sign != 1)) continue;
                            cands.push_back(Rational(sign * num, den));
                        }
            } else {
                cands.push_back(Rational(0));  // placeholder, single pass
            }

            for (auto& a : cands) {
                std::vector<Rational> avals;
                for (std::size_t i = 0; i < curves.size(); ++i)
                    avals.push_back(aspec[i] ? *aspec[i] : a);
                std::map<std::string, ParamRational> at = *resolved;
                if (alpha_free) at[aunknowns[0]] = ParamRational(a);
                MultiPoly gval;
                bool ok = true;
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    auto it = at.find(gnames[j]);
                    if (it == at.end()) continue;
                    RatPoly vnum = subst_all(it->second.num, at);
                    RatPoly vden = subst_all(it->second.den, at);
                    MultiPoly cn = vnum.num * vden.den, cd = vnum.den * vden.num;
                    if (!cn.is_constant() || !cd.is_constant() || cd.is_zero()) {
                        ok = false;
                        break;
                    }
                    gval += MultiPoly::term(cn.constant_value() / cd.constant_value(), basis[j]);
                }
                if (!ok) continue;
                if (auto cert = verify_candidate(F, curves, avals, gval, {}))
                    return Found{*cert};
            }
        }
    }
    return NoCertificateFound{"no multiplier makes N univariate of constant sign"};
}

// --- Lienard helpers --------------------------------------------------------

LienardQuinticResult lienard_quintic_condition(const Rational& a1, const Rational& a2,
                                               const Rational& a3, const Rational& a4) {
    (void)a2;  // U, V, W do not involve a2
    Rational t = -rational_pow(a4, 4) + 8 * a3 * a4 * a4 - 16 * a3 * a3 + 64 * a1;
    LienardQuinticResult r;
    r.U = t * t * a1;
    r.V = 8 * a3 - 3 * a4 * a4;
    r.W = 27 * a1 * rational_pow(a4, 4) - rational_pow(a3, 3) * a4 * a4 -
          108 * a1 * a3 * a4 * a4 + 3 * rational_pow(a3, 4) + 72 * a1 * a3 * a3 +
          432 * a1 * a1;
    r.holds = sgn(r.U) != 0 && sgn(r.V) > 0 && sgn(a1 * r.W) > 0;
    return r;
}

MultiPoly lienard_quintic_identity_defect() {
    auto v = [](const char* n) { return MultiPoly::variable(n); };
    MultiPoly a1 = v("a1"), a2 = v("a2"), a3 = v("a3"), a4 = v("a4");
    MultiPoly x = v("x"), al = v("alpha");
    MultiPoly P = MultiPoly(Rational(2)) * a1 + (al + MultiPoly(Rational(2)) * a2) * x +
                  MultiPoly(Rational(2)) * a3 * x * x +
                  MultiPoly(Rational(2)) * a4 * x.pow(3) + MultiPoly(Rational(2)) * x.pow(4);
    MultiPoly Q = poly::discriminant(P, "x");
    MultiPoly DQ = poly::discriminant(Q, "alpha");
    MultiPoly t = -a4.pow(4) + MultiPoly(Rational(8)) * a3 * a4 * a4 -
                  MultiPoly(Rational(16)) * a3 * a3 + MultiPoly(Rational(64)) * a1;
    MultiPoly U = t * t * a1;
    MultiPoly W = MultiPoly(Rational(27)) * a1 * a4.pow(4) - a3.pow(3) * a4 * a4 -
                  MultiPoly(Rational(108)) * a1 * a3 * a4 * a4 +
                  MultiPoly(Rational(3)) * a3.pow(4) +
                  MultiPoly(Rational(72)) * a1 * a3 * a3 +
                  MultiPoly(Rational(432)) * a1 * a1;
    return DQ + MultiPoly(Rational(Integer(1) << 32)) * U * W.pow(3);
}

}  // namespace cyclecert::certsearch
