#ifndef CYCLECERT_CERTSEARCH_HPP
#define CYCLECERT_CERTSEARCH_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclecert/certgen.hpp"

namespace cyclecert::certsearch {

using certgen::Certificate;
using certgen::ParamRational;
using certgen::SideCondition;
using darboux::InvariantObject;
using darboux::PlanarField;
using poly::MultiPoly;

struct NotQuadraticInVar : std::runtime_error {
    explicit NotQuadraticInVar(const std::string& what) : std::runtime_error(what) {}
};

// --- coefficient systems ----------------------------------------------------

struct CoeffSystem {
    std::vector<MultiPoly> equations;
    std::vector<std::string> unknowns;
    std::vector<SideCondition> side_conditions;
};

// One linear elimination step: unknown == num / den over the unknowns
// eliminated later in the chain plus the parameters.
struct Elimination {
    std::string unknown;
    MultiPoly num, den;
};

struct Solved {
    std::map<std::string, ParamRational> values;  // eliminated unknowns only
    std::vector<std::string> free_unknowns;
    std::vector<Elimination> chain;
    std::vector<SideCondition> side_conditions;
};
struct ReducedToUnivariate {
    MultiPoly poly;
    std::string var;
    std::vector<Elimination> chain;
    std::vector<SideCondition> side_conditions;
};
struct Unsolved {
    std::vector<MultiPoly> residual;
    std::vector<Elimination> chain;
    std::vector<SideCondition> side_conditions;
};
using SolveResult = std::variant<Solved, ReducedToUnivariate, Unsolved>;

SolveResult solve_coeff_system(const CoeffSystem& s);

// Substitute rational-function values for variables, clearing denominators.
certgen::RatPoly subst_all(const MultiPoly& p,
                           const std::map<std::string, ParamRational>& vals);

// Resolve an elimination chain bottom-up given values for the free unknowns.
// Returns nullopt when a denominator vanishes.
std::optional<std::map<std::string, ParamRational>> resolve_chain(
    const std::vector<Elimination>& chain,
    std::map<std::string, ParamRational> values);

// --- search ansatze and outcomes --------------------------------------------

struct ScaledSquareTarget {
    unsigned g_degree = 1;
    // one entry per curve: a fixed multiplier, or nullopt for an unknown one
    std::vector<std::optional<Rational>> alphas;
};

struct UnivariateTarget {
    std::string var = "x";
    unsigned g_degree = 2;
    std::vector<poly::Monomial> g_basis;  // empty: dense up to g_degree
    std::vector<std::optional<Rational>> alphas;
    std::vector<Rational> alpha_hints;
};

struct DiscriminantTarget {
    std::string var = "y";
};

struct CertificateTemplate {
    PlanarField field;
    std::vector<InvariantObject> curves;
    std::string alpha_var;
    MultiPoly quad;  // alpha must be a root of this
    // g-coefficient unknowns and the monomial each one multiplies
    std::vector<std::pair<std::string, poly::Monomial>> g_shape;
    std::map<std::string, MultiPoly> direct;  // unknowns fixed as parameter polys
    std::vector<Elimination> chain;           // the remaining g unknowns
    std::vector<SideCondition> side_conditions;
};

struct Found {
    Certificate cert;
};
struct ParametricCondition {
    MultiPoly inequality;  // non-negativity of this settles the family
    CertificateTemplate tmpl;
};
struct NoCertificateFound {
    std::string report;
};
using SearchOutcome = std::variant<Found, ParametricCondition, NoCertificateFound>;

SearchOutcome search_square(const PlanarField& F, const std::vector<InvariantObject>& curves,
                            const ScaledSquareTarget& ansatz);

SearchOutcome search_discriminant(const PlanarField& F, const InvariantObject& curve,
                                  const std::string& var);

SearchOutcome search_univariate(const PlanarField& F, const std::vector<InvariantObject>& curves,
                                const UnivariateTarget& ansatz);

// Bind the parameters of a ParametricCondition and produce a concrete
// verified certificate (the inequality must hold and the relevant root of
// the quadratic must be rational at the binding).
SearchOutcome instantiate(const ParametricCondition& pc,
                          const std::map<std::string, Rational>& binding);

// --- Lienard helpers --------------------------------------------------------

struct LienardQuinticResult {
    bool holds = false;
    Rational U, V, W;
};
LienardQuinticResult lienard_quintic_condition(const Rational& a1, const Rational& a2,
                                               const Rational& a3, const Rational& a4);

// disc_alpha(Q) + 2^32 U W^3 as a polynomial in a1..a4; zero iff the
// printed identity holds.
MultiPoly lienard_quintic_identity_defect();

}  // namespace cyclecert::certsearch

#endif
