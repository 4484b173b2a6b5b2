#ifndef CYCLECERT_MULTIPOLY_HPP
#define CYCLECERT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclecert/rational.hpp"

namespace cyclecert::poly {

// Exponent vector over named variables; zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::string& var, unsigned e = 1) {
        if (e) exp_[var] = e;
    }

    unsigned degree(const std::string& var) const {
        auto it = exp_.find(var);
        return it == exp_.end() ? 0u : it->second;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [v, e] : exp_) d += e;
        return d;
    }
    bool is_one() const { return exp_.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exp_) {
            auto& slot = r.exp_[v];
            slot += e;
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (auto& [v, e] : exp_)
            if (o.degree(v) < e) return false;
        return true;
    }
    // Precondition: this->divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        r.exp_ = o.exp_;
        for (auto& [v, e] : exp_) {
            auto it = r.exp_.find(v);
            it->second -= e;
            if (it->second == 0) r.exp_.erase(it);
        }
        return r;
    }
    Monomial pow(unsigned k) const {
        Monomial r;
        if (k == 0) return r;
        r.exp_ = exp_;
        for (auto& [v, e] : r.exp_) e *= k;
        return r;
    }

    bool all_even() const {
        for (auto& [v, e] : exp_)
            if (e % 2) return false;
        return true;
    }
    Monomial halved() const {
        Monomial r;
        r.exp_ = exp_;
        for (auto& [v, e] : r.exp_) e /= 2;
        return r;
    }

    const std::map<std::string, unsigned>& exponents() const { return exp_; }

    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

    // Graded lexicographic: total degree first, then exponents by variable name.
    bool graded_lex_less(const Monomial& o) const {
        unsigned da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        auto ia = exp_.begin(), ib = o.exp_.begin();
        while (ia != exp_.end() && ib != o.exp_.end()) {
            if (ia->first != ib->first) return ia->first > ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return ia == exp_.end() && ib != o.exp_.end();
    }

private:
    std::map<std::string, unsigned> exp_;
};

struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return b.graded_lex_less(a);
    }
};

// Sparse exact-rational multivariate polynomial. Terms are stored leading
// monomial first (graded-lex descending); no zero coefficients are stored,
// so equality is map equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (sgn(c) != 0) terms_[Monomial()] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.terms_[Monomial(name)] = Rational(1);
        return p;
    }
    static MultiPoly term(const Rational& c, const Monomial& m) {
        MultiPoly p;
        if (sgn(c) != 0) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    unsigned degree(const std::string& var) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree(var));
        return d;
    }
    // Max total degree counting only the given variables.
    unsigned degree_in(const std::set<std::string>& vars) const {
        unsigned d = 0;
        for (auto& [m, c] : terms_) {
            unsigned t = 0;
            for (auto& v : vars) t += m.degree(v);
            d = std::max(d, t);
        }
        return d;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m.exponents()) vs.insert(v);
        return vs;
    }
    bool depends_on(const std::string& var) const { return degree(var) > 0; }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly diff(const std::string& var) const;
    MultiPoly subst(const std::string& var, const MultiPoly& replacement) const;
    Rational eval(const std::map<std::string, Rational>& binding) const;

    // Coefficients of v^0..v^deg, each a polynomial in the other variables.
    std::vector<MultiPoly> coeffs_in(const std::string& var) const;

    // gcd of coefficient numerators over lcm of denominators; positive.
    Rational content() const;
    // content-1, positive leading coefficient (graded-lex).
    MultiPoly primitive_part() const;

    std::string to_string() const;

private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
    friend class MonomialCursor;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

// --- ring helpers -----------------------------------------------------------

// Exact division in Q[vars]; nullopt when den does not divide num.
// Throws std::domain_error on den == 0.
std::optional<MultiPoly> exact_div(const MultiPoly& num, const MultiPoly& den);

// Sylvester resultant with respect to var. Throws std::domain_error when
// either argument is constant in var.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// disc_v(p) = (-1)^{n(n-1)/2} Res(p, p') / lc_v(p).
// Throws std::domain_error when deg_v(p) < 2.
MultiPoly discriminant(const MultiPoly& p, const std::string& var);

// Yun square-free decomposition of a univariate polynomial over Q.
// Throws std::domain_error when p involves variables other than var.
std::vector<std::pair<MultiPoly, int>> square_free(const MultiPoly& p, const std::string& var);

struct SturmData {
    std::vector<MultiPoly> sequence;
    std::string var;
};
SturmData sturm_sequence(const MultiPoly& p, const std::string& var);

// Exact count of distinct real roots in the open interval (lo, hi); an
// unset bound means the corresponding infinity. Requires p univariate and
// square-free. Throws std::domain_error otherwise.
int real_root_count(const MultiPoly& p, const std::string& var,
                    std::optional<Rational> lo = std::nullopt,
                    std::optional<Rational> hi = std::nullopt);

// Like real_root_count but without the square-free precondition.
int distinct_real_roots(const MultiPoly& p, const std::string& var);

struct SqrtResult {
    MultiPoly w;       // monic in graded-lex
    Rational ratio;    // p == ratio * w^2
};
// Decompose p = ratio * w^2 exactly, if possible.
std::optional<SqrtResult> poly_sqrt(const MultiPoly& p);

// Univariate gcd over Q, monic. Both arguments univariate in var.
MultiPoly univariate_gcd(MultiPoly a, MultiPoly b, const std::string& var);

// Multivariate gcd over Q[vars] by recursive primitive pseudo-remainder
// sequences. The result has content 1 and positive leading coefficient.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// All rational roots of a univariate polynomial over Q.
std::vector<Rational> rational_roots(const MultiPoly& p, const std::string& var);

}  // namespace cyclecert::poly

#endif
