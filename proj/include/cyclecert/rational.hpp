#ifndef CYCLECERT_RATIONAL_HPP
#define CYCLECERT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cyclecert {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(), which every constructor below guarantees.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Exact square root of a non-negative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

// Parse "p", "p/q" or a decimal literal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    // base is passed explicitly: mpz's base-0 auto-detection would read a
    // leading zero (as in the digits of "0.25") as octal
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num(text.substr(0, slash), 10);
        Integer den(text.substr(slash + 1), 10);
        if (den == 0) throw std::domain_error("rational with zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        Integer num(digits.empty() ? "0" : digits, 10);
        Integer den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(Integer(text, 10));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cyclecert

#endif
