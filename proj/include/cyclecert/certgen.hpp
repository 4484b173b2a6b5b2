#ifndef CYCLECERT_CERTGEN_HPP
#define CYCLECERT_CERTGEN_HPP

#include <string>
#include <variant>
#include <vector>

#include "cyclecert/darboux.hpp"

namespace cyclecert::certgen {

using darboux::InvariantObject;
using darboux::PlanarField;
using poly::MultiPoly;

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct WitnessMismatch : std::runtime_error {
    explicit WitnessMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct SignViolation : std::runtime_error {
    explicit SignViolation(const std::string& what) : std::runtime_error(what) {}
};
struct NNotZero : std::runtime_error {
    explicit NNotZero(const std::string& what) : std::runtime_error(what) {}
};

// Quotient of parameter polynomials; the paper's multipliers are rational
// functions of the system parameters (e.g. -(7+3a)/(3(10+3a))).
struct ParamRational {
    MultiPoly num;
    MultiPoly den{Rational(1)};

    ParamRational() : num() {}
    ParamRational(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {}
    explicit ParamRational(const Rational& q) : num(MultiPoly(q)) {}
    explicit ParamRational(const MultiPoly& p) : num(p) {}

    bool is_rational() const { return num.is_constant() && den.is_constant(); }
    Rational rational_value() const { return num.constant_value() / den.constant_value(); }
    bool equals(const ParamRational& o) const { return num * o.den == o.num * den; }
};

// N as a quotient num/den; den is a parameter polynomial collected from the
// alpha denominators.
struct RatPoly {
    MultiPoly num;
    MultiPoly den{Rational(1)};
    bool equals(const RatPoly& o) const { return num * o.den == o.num * den; }
};

// --- sign witnesses ---------------------------------------------------------

struct ConstantSign {
    Rational c;
};
struct ScaledSquare {
    Rational r;
    MultiPoly w;
};
struct PSDQuadraticForm {
    MultiPoly q;
    int sign = +1;
};
struct UnivariatePSD {
    std::string var;
    int sign = +1;
};
struct SumOfTerms {
    struct Term {
        Rational c;
        MultiPoly s;
        MultiPoly q;  // PSD quadratic form, or the constant 1
    };
    std::vector<Term> terms;
};
struct IdenticallyZero {};

using SignWitness = std::variant<ConstantSign, ScaledSquare, PSDQuadraticForm,
                                 UnivariatePSD, SumOfTerms, IdenticallyZero>;

enum class Verdict { NonNegative, NonPositive, Zero };

struct SideCondition {
    enum class Relation { NonZero, NonNegative, Positive };
    MultiPoly expr;
    Relation rel = Relation::NonZero;
    std::string to_string() const;
};

struct Conclusion {
    enum class Kind { NoPeriodicOrbitsOffCurves, NoLimitCyclesOffCurves, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::string reason;
};

struct Certificate {
    std::vector<InvariantObject> curves;
    std::vector<ParamRational> alphas;
    MultiPoly g;
    MultiPoly N;
    SignWitness witness = IdenticallyZero{};
    std::vector<SideCondition> side_conditions;
    Conclusion conclusion;
};

// --- operations -------------------------------------------------------------

// N = (sum alpha_i k_i) g + g_x P + g_y Q, exact. Throws LengthMismatch.
MultiPoly build_N(const PlanarField& F, const std::vector<InvariantObject>& curves,
                  const std::vector<Rational>& alphas, const MultiPoly& g);

// Same with rational-function multipliers; returns N = num/den with
// denominators collected, for symbolic golden checks.
RatPoly build_N_symbolic(const PlanarField& F, const std::vector<InvariantObject>& curves,
                         const std::vector<ParamRational>& alphas, const MultiPoly& g);

// Verify the witness against N by exact re-expansion. Throws WitnessMismatch
// or SignViolation on failure.
Verdict check_witness(const MultiPoly& N, const SignWitness& w);

// Polynomial factors whose vanishing the witness exposes as the zero set of N.
std::vector<MultiPoly> witness_zero_factors(const SignWitness& w);

struct ZeroSetResult {
    bool ok = true;
    MultiPoly offender;  // the invariant factor, when !ok
};
ZeroSetResult check_zero_set(const PlanarField& F, const SignWitness& w, const MultiPoly& N);

struct FirstIntegralResult {
    bool certified = false;
    std::string detail;
};
// Precondition: build_N(...) == 0 (throws NNotZero otherwise). Bounded
// sufficient non-constancy test for g * prod |f_i|^{alpha_i}.
FirstIntegralResult check_first_integral(const PlanarField& F,
                                         const std::vector<InvariantObject>& curves,
                                         const std::vector<Rational>& alphas,
                                         const MultiPoly& g);

// Serialize a certificate as a sysio block.
std::string certificate_block(const Certificate& cert);
std::string witness_description(const SignWitness& w);

}  // namespace cyclecert::certgen

#endif
