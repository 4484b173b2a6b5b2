#include "cyclecert/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace cyclecert::poly {

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r;
    if (sgn(c) == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, coef] : r.terms_) coef *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rational(1));
    MultiPoly b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::diff(const std::string& var) const {
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree(var);
        if (e == 0) continue;
        Monomial dm = Monomial(var).quotient_of(m);
        r.add_term(dm, c * Rational(long(e)));
    }
    return r;
}

MultiPoly MultiPoly::subst(const std::string& var, const MultiPoly& replacement) const {
    // Cache powers of the replacement.
    std::vector<MultiPoly> powers{MultiPoly(Rational(1))};
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree(var);
        while (powers.size() <= e) powers.push_back(powers.back() * replacement);
        Monomial rest = Monomial(var, e).quotient_of(m);
        r += MultiPoly::term(c, rest) * powers[e];
    }
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& binding) const {
    Rational total(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [v, e] : m.exponents()) {
            auto it = binding.find(v);
            if (it == binding.end())
                throw std::domain_error("eval: unbound variable " + v);
            t *= rational_pow(it->second, e);
        }
        total += t;
    }
    return total;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& var) const {
    std::vector<MultiPoly> out(degree(var) + 1);
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree(var);
        Monomial rest = Monomial(var, e).quotient_of(m);
        out[e].add_term(rest, c);
    }
    return out;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (sgn(leading_coeff()) < 0) c = -c;
    return *this * (Rational(1) / c);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool need_coeff = (a != 1) || m.is_one();
        if (need_coeff) os << a.get_str();
        bool first_var = !need_coeff;
        for (auto& [v, e] : m.exponents()) {
            if (!first_var || need_coeff) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            first_var = false;
        }
    }
    return os.str();
}

// --- exact division ---------------------------------------------------------

std::optional<MultiPoly> exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("exact_div: zero divisor");
    MultiPoly q, r = num;
    const Monomial& dm = den.leading_monomial();
    const Rational& dc = den.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        MultiPoly t = MultiPoly::term(r.leading_coeff() / dc, dm.quotient_of(rm));
        q += t;
        r -= t * den;
    }
    return q;
}

// --- resultant / discriminant ----------------------------------------------

namespace {

// Fraction-free Bareiss determinant over the polynomial ring.
MultiPoly bareiss_det(std::vector<std::vector<MultiPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly(Rational(1));
    int sign_flips = 0;
    MultiPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return MultiPoly();  // singular
            std::swap(m[k], m[piv]);
            ++sign_flips;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_div(t, prev);
                // Bareiss guarantees exactness.
                m[i][j] = *q;
            }
            m[i][k] = MultiPoly();
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return (sign_flips % 2) ? -det : det;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    unsigned m = p.degree(var), n = q.degree(var);
    if (m == 0 || n == 0)
        throw std::domain_error("resultant: argument constant in " + var);
    auto pc = p.coeffs_in(var);
    auto qc = q.coeffs_in(var);
    std::size_t size = m + n;
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (unsigned row = 0; row < n; ++row)
        for (unsigned i = 0; i <= m; ++i) s[row][row + (m - i)] = pc[i];
    for (unsigned row = 0; row < m; ++row)
        for (unsigned j = 0; j <= n; ++j) s[n + row][row + (n - j)] = qc[j];
    return bareiss_det(std::move(s));
}

MultiPoly discriminant(const MultiPoly& p, const std::string& var) {
    unsigned n = p.degree(var);
    if (n < 2) throw std::domain_error("discriminant: degree in " + var + " below 2");
    MultiPoly dp = p.diff(var);
    MultiPoly res = dp.is_zero() || dp.degree(var) == 0
                        ? MultiPoly()  // p' constant in var cannot happen for n>=2 over Q
                        : resultant(p, dp, var);
    MultiPoly lc = p.coeffs_in(var)[n];
    auto q = exact_div(res, lc);
    if (!q) throw std::domain_error("discriminant: resultant not divisible by lc");
    unsigned swaps = (n * (n - 1) / 2) % 2;
    return swaps ? -*q : *q;
}

// --- univariate tooling -----------------------------------------------------

namespace {

void require_univariate(const MultiPoly& p, const std::string& var) {
    for (auto& v : p.variables())
        if (v != var) throw std::domain_error("expected polynomial univariate in " + var);
}

// Remainder of univariate division; both args univariate in var, b nonzero.
MultiPoly univariate_rem(MultiPoly a, const MultiPoly& b, const std::string& var) {
    unsigned db = b.degree(var);
    MultiPoly blc = b.coeffs_in(var)[db];
    Rational lc = blc.constant_value();
    while (!a.is_zero() && a.degree(var) >= db) {
        unsigned da = a.degree(var);
        Rational alc = a.coeffs_in(var)[da].constant_value();
        MultiPoly t = MultiPoly::term(alc / lc, Monomial(var, da - db));
        a -= t * b;
    }
    return a;
}

MultiPoly make_monic(const MultiPoly& p, const std::string& var) {
    if (p.is_zero()) return p;
    Rational lc = p.coeffs_in(var)[p.degree(var)].constant_value();
    return p * (Rational(1) / lc);
}

}  // namespace

MultiPoly univariate_gcd(MultiPoly a, MultiPoly b, const std::string& var) {
    require_univariate(a, var);
    require_univariate(b, var);
    while (!b.is_zero()) {
        MultiPoly r = univariate_rem(a, b, var);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return make_monic(a, var);
}

std::vector<std::pair<MultiPoly, int>> square_free(const MultiPoly& p, const std::string& var) {
    require_univariate(p, var);
    std::vector<std::pair<MultiPoly, int>> out;
    if (p.is_constant()) return out;
    // Yun's algorithm.
    MultiPoly a = make_monic(p, var);
    MultiPoly da = a.diff(var);
    MultiPoly g = univariate_gcd(a, da, var);
    MultiPoly w = *exact_div(a, g);
    MultiPoly y = *exact_div(da, g);
    int mult = 1;
    while (w.degree(var) > 0) {
        MultiPoly z = y - w.diff(var);
        if (z.is_zero()) break;
        MultiPoly f = univariate_gcd(w, z, var);
        if (f.degree(var) > 0) out.emplace_back(f, mult);
        w = *exact_div(w, f);
        y = *exact_div(z, f);
        ++mult;
    }
    if (w.degree(var) > 0) out.emplace_back(w, mult);
    return out;
}

SturmData sturm_sequence(const MultiPoly& p, const std::string& var) {
    require_univariate(p, var);
    SturmData s;
    s.var = var;
    s.sequence.push_back(p);
    if (p.degree(var) == 0) return s;
    s.sequence.push_back(p.diff(var));
    while (s.sequence.back().degree(var) > 0) {
        MultiPoly r = univariate_rem(s.sequence[s.sequence.size() - 2],
                                     s.sequence.back(), var);
        if (r.is_zero()) break;
        s.sequence.push_back(-r);
    }
    return s;
}

namespace {

int sign_at(const MultiPoly& p, const std::string& var, const std::optional<Rational>& x,
            bool plus_infinity) {
    if (p.is_zero()) return 0;
    if (x) return sgn(p.eval({{var, *x}}));
    unsigned d = p.degree(var);
    Rational lc = p.coeffs_in(var)[d].constant_value();
    int s = sgn(lc);
    if (!plus_infinity && d % 2 == 1) s = -s;
    return s;
}

int sign_variations(const SturmData& s, const std::optional<Rational>& x, bool plus_infinity) {
    int vars = 0, prev = 0;
    for (auto& p : s.sequence) {
        int sg = sign_at(p, s.var, x, plus_infinity);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++vars;
        prev = sg;
    }
    return vars;
}

}  // namespace

int real_root_count(const MultiPoly& p, const std::string& var,
                    std::optional<Rational> lo, std::optional<Rational> hi) {
    require_univariate(p, var);
    auto sf = square_free(p, var);
    for (auto& [f, mult] : sf)
        if (mult > 1) throw std::domain_error("real_root_count: polynomial not square-free");
    if (p.degree(var) == 0) return 0;
    SturmData s = sturm_sequence(p, var);
    int count = sign_variations(s, lo, false) - sign_variations(s, hi, true);
    // Sturm counts roots in (lo, hi]; the interval here is open.
    if (hi && sgn(p.eval({{var, *hi}})) == 0) --count;
    return count;
}

int distinct_real_roots(const MultiPoly& p, const std::string& var) {
    require_univariate(p, var);
    if (p.is_zero() || p.degree(var) == 0) return 0;
    MultiPoly radical(Rational(1));
    for (auto& [f, mult] : square_free(p, var)) radical *= f;
    return real_root_count(radical, var);
}

// --- polynomial square root -------------------------------------------------

std::optional<SqrtResult> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return SqrtResult{MultiPoly(), Rational(0)};
    if (p.is_constant()) return SqrtResult{MultiPoly(Rational(1)), p.constant_value()};
    const Monomial& lm = p.leading_monomial();
    if (!lm.all_even()) return std::nullopt;
    Rational ratio = p.leading_coeff();
    MultiPoly target = p * (Rational(1) / ratio);
    MultiPoly w = MultiPoly::term(Rational(1), lm.halved());
    const Monomial wlead = w.leading_monomial();
    MultiPoly r = target - w * w;
    std::size_t guard = 4 * p.term_count() + 16;
    while (!r.is_zero()) {
        if (guard-- == 0) return std::nullopt;
        const Monomial& rm = r.leading_monomial();
        if (!wlead.divides(rm)) return std::nullopt;
        Monomial tm = wlead.quotient_of(rm);
        if (!tm.graded_lex_less(wlead)) return std::nullopt;
        MultiPoly t = MultiPoly::term(r.leading_coeff() / (2 * Rational(1)), tm);
        w += t;
        r = target - w * w;
    }
    return SqrtResult{w, ratio};
}

std::vector<Rational> rational_roots(const MultiPoly& p, const std::string& var) {
    require_univariate(p, var);
    std::vector<Rational> roots;
    if (p.is_zero() || p.degree(var) == 0) return roots;
    // Clear to integer coefficients.
    MultiPoly q = p.primitive_part();
    auto coeffs = q.coeffs_in(var);
    unsigned low = 0;
    while (coeffs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    unsigned deg = q.degree(var);
    if (deg == low) {
        return roots;
    }
    Integer a0 = coeffs[low].constant_value().get_num();
    Integer an = coeffs[deg].constant_value().get_num();
    if (sgn(a0) < 0) a0 = -a0;
    if (sgn(an) < 0) an = -an;
    auto divisors = [](Integer n) {
        std::vector<Integer> ds{Integer(1)};
        auto push_prime = [&ds](const Integer& p, unsigned e) {
            std::size_t base = ds.size();
            Integer pk(1);
            for (unsigned i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
            }
        };
        // Trial-divide by small primes; a large cofactor is kept whole, so
        // divisors mixing two large prime factors may be skipped.
        for (Integer d(2); d * d <= n && d < 100000; ++d) {
            if (n % d == 0) {
                unsigned e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                push_prime(d, e);
            }
        }
        if (n > 1) push_prime(n, 1);
        return ds;
    };
    for (auto& num : divisors(a0)) {
        for (auto& den : divisors(an)) {
            for (int s : {1, -1}) {
                Rational cand(s * num, den);
                cand.canonicalize();
                if (sgn(q.eval({{var, cand}})) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Remainder of lb^k * a modulo b with respect to var, lb = lc_var(b).
// Polynomial coefficients are allowed; only exact cancellations occur.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, const std::string& var) {
    unsigned db = b.degree(var);
    MultiPoly lb = b.coeffs_in(var)[db];
    while (!a.is_zero() && a.degree(var) >= db) {
        unsigned d = a.degree(var);
        MultiPoly lead = a.coeffs_in(var)[d];
        a = lb * a - lead * MultiPoly::term(Rational(1), Monomial(var, d - db)) * b;
    }
    return a;
}

MultiPoly content_in(const MultiPoly& p, const std::string& var) {
    MultiPoly g;
    for (auto& c : p.coeffs_in(var))
        if (!c.is_zero()) g = poly_gcd(g, c);
    return g;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    std::string v = std::min(*a.variables().begin(), *b.variables().begin());
    if (!a.depends_on(v)) return poly_gcd(a, content_in(b, v));
    if (!b.depends_on(v)) return poly_gcd(content_in(a, v), b);
    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly cont = poly_gcd(ca, cb);
    MultiPoly pa = *exact_div(a, ca), pb = *exact_div(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        MultiPoly r = pseudo_rem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            pb = MultiPoly(1);
            break;
        }
        r = *exact_div(r, content_in(r, v));
        pa = pb;
        pb = r;
    }
    return (cont * pb.primitive_part()).primitive_part();
}

}  // namespace cyclecert::poly
