#include "cyclecert/certgen.hpp"

#include <numeric>
#include <sstream>

namespace cyclecert::certgen {

MultiPoly build_N(const PlanarField& F, const std::vector<InvariantObject>& curves,
                  const std::vector<Rational>& alphas, const MultiPoly& g) {
    if (curves.size() != alphas.size() || curves.empty())
        throw LengthMismatch("need one alpha per curve, at least one curve");
    MultiPoly acc;
    for (std::size_t i = 0; i < curves.size(); ++i)
        acc += curves[i].cofactor * alphas[i];
    return acc * g + darboux::lie_derivative(F, g);
}

RatPoly build_N_symbolic(const PlanarField& F, const std::vector<InvariantObject>& curves,
                         const std::vector<ParamRational>& alphas, const MultiPoly& g) {
    if (curves.size() != alphas.size() || curves.empty())
        throw LengthMismatch("need one alpha per curve, at least one curve");
    MultiPoly den(Rational(1));
    for (auto& a : alphas) den *= a.den;
    MultiPoly acc;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        MultiPoly scaled = alphas[i].num;
        for (std::size_t j = 0; j < alphas.size(); ++j)
            if (j != i) scaled *= alphas[j].den;
        acc += scaled * curves[i].cofactor;
    }
    RatPoly out;
    out.num = acc * g + den * darboux::lie_derivative(F, g);
    out.den = den;
    return out;
}

namespace {

struct QuadForm {
    Rational A, B, C;
};

// Decompose q as A x^2 + B xy + C y^2 with no other terms; numeric only.
QuadForm pure_quadratic_form(const MultiPoly& q) {
    QuadForm f{Rational(0), Rational(0), Rational(0)};
    poly::Monomial x2 = poly::Monomial("x", 2);
    poly::Monomial xy = poly::Monomial("x") * poly::Monomial("y");
    poly::Monomial y2 = poly::Monomial("y", 2);
    for (auto& [m, c] : q.terms()) {
        if (m == x2)
            f.A = c;
        else if (m == xy)
            f.B = c;
        else if (m == y2)
            f.C = c;
        else
            throw WitnessMismatch("not a pure quadratic form in x, y: " + q.to_string());
    }
    return f;
}

void require_psd_form(const QuadForm& f, int sign) {
    Rational A = f.A * sign, C = f.C * sign;
    if (sgn(A) < 0 || sgn(C) < 0 || sgn(4 * f.A * f.C - f.B * f.B) < 0)
        throw SignViolation("quadratic form is not sign-semidefinite");
}

}  // namespace

Verdict check_witness(const MultiPoly& N, const SignWitness& w) {
    if (std::holds_alternative<IdenticallyZero>(w)) {
        if (!N.is_zero()) throw WitnessMismatch("N is not identically zero");
        return Verdict::Zero;
    }
    if (auto* cs = std::get_if<ConstantSign>(&w)) {
        if (N != MultiPoly(cs->c)) throw WitnessMismatch("N is not the stated constant");
        if (sgn(cs->c) == 0) return Verdict::Zero;
        return sgn(cs->c) > 0 ? Verdict::NonNegative : Verdict::NonPositive;
    }
    if (auto* sq = std::get_if<ScaledSquare>(&w)) {
        if (sq->w * sq->w * sq->r != N)
            throw WitnessMismatch("r*w^2 does not re-expand to N");
        if (sgn(sq->r) == 0) return Verdict::Zero;
        return sgn(sq->r) > 0 ? Verdict::NonNegative : Verdict::NonPositive;
    }
    if (auto* qf = std::get_if<PSDQuadraticForm>(&w)) {
        if (qf->q != N) throw WitnessMismatch("quadratic form differs from N");
        require_psd_form(pure_quadratic_form(qf->q), qf->sign);
        return qf->sign > 0 ? Verdict::NonNegative : Verdict::NonPositive;
    }
    if (auto* up = std::get_if<UnivariatePSD>(&w)) {
        for (auto& v : N.variables())
            if (v != up->var)
                throw WitnessMismatch("N depends on " + v + ", not univariate in " + up->var);
        if (N.is_zero()) return Verdict::Zero;
        auto factors = poly::square_free(N, up->var);
        for (auto& [f, mult] : factors) {
            if (mult % 2 == 0) continue;
            if (poly::real_root_count(f, up->var) != 0)
                throw SignViolation("odd-multiplicity real root in univariate N");
        }
        int lead = sgn(N.leading_coeff());
        // All odd factors are definite positive (monic, no real roots), so the
        // overall sign is the sign of the leading coefficient.
        if (lead != up->sign) throw SignViolation("sign of univariate N disagrees");
        return up->sign > 0 ? Verdict::NonNegative : Verdict::NonPositive;
    }
    auto& st = std::get<SumOfTerms>(w);
    if (st.terms.empty()) throw WitnessMismatch("empty sum of terms");
    MultiPoly sum;
    int common = 0;
    for (auto& t : st.terms) {
        sum += t.s * t.s * t.q * t.c;
        int cs = sgn(t.c);
        if (cs == 0) continue;
        if (common == 0) common = cs;
        if (cs != common) throw SignViolation("mixed signs among coefficients");
        if (!(t.q == MultiPoly(Rational(1)))) require_psd_form(pure_quadratic_form(t.q), +1);
    }
    if (sum != N) throw WitnessMismatch("sum of terms does not re-expand to N");
    if (common == 0) return Verdict::Zero;
    return common > 0 ? Verdict::NonNegative : Verdict::NonPositive;
}

std::vector<MultiPoly> witness_zero_factors(const SignWitness& w) {
    std::vector<MultiPoly> out;
    auto add = [&](const MultiPoly& p) {
        if (!p.is_constant()) out.push_back(p);
    };
    if (auto* sq = std::get_if<ScaledSquare>(&w)) {
        add(sq->w);
    } else if (auto* up = std::get_if<UnivariatePSD>(&w)) {
        (void)up;  // factors are recovered from N by check_zero_set
    } else if (auto* st = std::get_if<SumOfTerms>(&w)) {
        for (auto& t : st->terms) {
            add(t.s);
            if (!(t.q == MultiPoly(Rational(1)))) {
                QuadForm f = pure_quadratic_form(t.q);
                if (sgn(4 * f.A * f.C - f.B * f.B) == 0) {
                    // Degenerate form: a perfect square of one linear factor.
                    if (sgn(f.A) != 0)
                        add(MultiPoly::variable("x") * (2 * f.A) +
                            MultiPoly::variable("y") * f.B);
                    else if (sgn(f.C) != 0)
                        add(MultiPoly::variable("y") * (2 * f.C) +
                            MultiPoly::variable("x") * f.B);
                }
            }
        }
    }
    return out;
}

ZeroSetResult check_zero_set(const PlanarField& F, const SignWitness& w, const MultiPoly& N) {
    std::vector<MultiPoly> factors = witness_zero_factors(w);
    if (auto* up = std::get_if<UnivariatePSD>(&w); up && !N.is_zero()) {
        for (auto& [f, mult] : poly::square_free(N, up->var))
            if (mult % 2 == 0 && poly::real_root_count(f, up->var) > 0)
                factors.push_back(f);
    }
    for (auto& v : factors) {
        if (darboux::is_curve_invariant(F, v)) return {false, v};
    }
    return {true, MultiPoly()};
}

FirstIntegralResult check_first_integral(const PlanarField& F,
                                         const std::vector<InvariantObject>& curves,
                                         const std::vector<Rational>& alphas,
                                         const MultiPoly& g) {
    MultiPoly N = build_N(F, curves, alphas, g);
    if (!N.is_zero()) throw NNotZero("N is not identically zero");
    if (g.is_zero()) return {false, "g vanishes identically"};

    // v = g * prod |f_i|^{alpha_i}; clear the alpha denominators so the test
    // is a polynomial identity v^m = g^m * prod f_i^{m alpha_i}.
    Integer m(1);
    for (auto& a : alphas) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a.get_den().get_mpz_t());
    if (m > 4) return {false, "alpha denominators exceed the exponent bound"};
    long mm = m.get_si();

    MultiPoly positive(Rational(1)), negative(Rational(1));
    bool g_counts = !g.is_constant();
    if (g_counts) positive *= g.pow(unsigned(mm));
    MultiPoly exp_part;  // sum alpha_i h_i for exponential factors
    bool exp_scaled = false;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        Rational e = alphas[i] * Rational(mm);
        Integer en = e.get_num();
        if (curves[i].kind == sysio::CurveSpec::Kind::Exponential) {
            exp_part += curves[i].defining_poly * alphas[i];
            exp_scaled = true;
            continue;
        }
        if (abs(en) > 4 * m) return {false, "curve exponent exceeds the bound"};
        if (sgn(en) > 0)
            positive *= curves[i].defining_poly.pow(unsigned(en.get_ui()));
        else if (sgn(en) < 0)
            negative *= curves[i].defining_poly.pow(unsigned(Integer(-en).get_ui()));
    }
    if (exp_scaled && !exp_part.is_constant())
        return {true, "nonconstant exponential part " + exp_part.to_string()};

    if (positive.is_constant() && negative.is_constant())
        return {false, "candidate first integral is constant"};
    // v^m constant would mean positive == c * negative for a constant c.
    Rational c = positive.leading_coeff() / negative.leading_coeff();
    if (positive == negative * c)
        return {false, "relation " + positive.to_string() + " = c * " + negative.to_string()};
    return {true, "no bounded multiplicative relation"};
}

std::string SideCondition::to_string() const {
    const char* rel_s = rel == Relation::NonZero ? " != 0"
                        : rel == Relation::NonNegative ? " >= 0"
                                                       : " > 0";
    return expr.to_string() + rel_s;
}

std::string witness_description(const SignWitness& w) {
    std::ostringstream os;
    if (auto* cs = std::get_if<ConstantSign>(&w))
        os << "constant " << to_string(cs->c);
    else if (auto* sq = std::get_if<ScaledSquare>(&w))
        os << "scaled_square r=" << to_string(sq->r) << " w=" << sq->w.to_string();
    else if (auto* qf = std::get_if<PSDQuadraticForm>(&w))
        os << "psd_quadratic_form sign=" << qf->sign << " q=" << qf->q.to_string();
    else if (auto* up = std::get_if<UnivariatePSD>(&w))
        os << "univariate_psd var=" << up->var << " sign=" << up->sign;
    else if (auto* st = std::get_if<SumOfTerms>(&w)) {
        os << "sum_of_terms";
        for (auto& t : st->terms)
            os << " [c=" << to_string(t.c) << " s=" << t.s.to_string()
               << " q=" << t.q.to_string() << "]";
    } else {
        os << "identically_zero";
    }
    return os.str();
}

std::string certificate_block(const Certificate& cert) {
    sysio::Block b;
    for (std::size_t i = 0; i < cert.curves.size(); ++i) {
        auto& c = cert.curves[i];
        std::string key = "curve." + std::to_string(i);
        b.add(key + ".kind", c.kind == sysio::CurveSpec::Kind::Algebraic ? "algebraic" : "exp");
        b.add(key + ".poly", c.defining_poly);
        b.add(key + ".cofactor", c.cofactor);
        auto& a = cert.alphas[i];
        b.add(key + ".alpha", a.den == MultiPoly(Rational(1))
                                  ? a.num.to_string()
                                  : "(" + a.num.to_string() + ")/(" + a.den.to_string() + ")");
    }
    b.add("g", cert.g);
    b.add("N", cert.N);
    b.add("witness", witness_description(cert.witness));
    for (std::size_t i = 0; i < cert.side_conditions.size(); ++i)
        b.add("side_condition." + std::to_string(i), cert.side_conditions[i].to_string());
    switch (cert.conclusion.kind) {
        case Conclusion::Kind::NoPeriodicOrbitsOffCurves:
            b.add("conclusion", "no_periodic_orbits_off_curves");
            break;
        case Conclusion::Kind::NoLimitCyclesOffCurves:
            b.add("conclusion", "no_limit_cycles_off_curves");
            break;
        case Conclusion::Kind::Inconclusive:
            b.add("conclusion", "inconclusive: " + cert.conclusion.reason);
            break;
    }
    return b.str();
}

}  // namespace cyclecert::certgen
