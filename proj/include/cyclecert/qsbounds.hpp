#ifndef CYCLECERT_QSBOUNDS_HPP
#define CYCLECERT_QSBOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <variant>

#include "cyclecert/darboux.hpp"

namespace cyclecert::qsbounds {

using darboux::InvariantObject;
using darboux::PlanarField;
using poly::MultiPoly;
using sysio::SystemSpec;

struct CofactorNotLinear : std::runtime_error {
    explicit CofactorNotLinear(const std::string& what) : std::runtime_error(what) {}
};
struct NotQuadraticSystem : std::runtime_error {
    explicit NotQuadraticSystem(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateHypothesis : std::runtime_error {
    explicit DegenerateHypothesis(const std::string& what) : std::runtime_error(what) {}
};
struct NotARoot : std::runtime_error {
    explicit NotARoot(const std::string& what) : std::runtime_error(what) {}
};
struct ANotZero : std::runtime_error {
    explicit ANotZero(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownKind : std::runtime_error {
    explicit UnknownKind(const std::string& what) : std::runtime_error(what) {}
};

// a + b*x + c*y
struct LinearForm {
    Rational a, b, c;

    Rational eval(const Rational& x, const Rational& y) const { return a + b * x + c * y; }
    bool operator==(const LinearForm& o) const = default;
};

// Rows of A = (div; k1; k2). The deltas are never cached so they can not go
// stale when a row is edited.
struct CofactorMatrix {
    LinearForm div, k1, k2;

    Rational detA() const;
    Rational delta12() const { return k1.b * k2.c - k2.b * k1.c; }
    Rational delta1() const { return div.b * k1.c - div.c * k1.b; }
    Rational delta2() const { return div.b * k2.c - div.c * k2.b; }
};

CofactorMatrix cofactor_matrix(const PlanarField& F, const InvariantObject& c1,
                               const InvariantObject& c2);

enum class Branch { Generic, ZeroDetA, ZeroDelta12 };

// u*k1 + v*k2 + w*div identically zero.
struct NullCombination {
    Rational u, v, w;
};

struct BoundReport {
    int M = 0;
    int bound = 0;
    bool nested_only = false;
    Branch branch = Branch::Generic;
    // Set on the ZeroDetA branch only.
    std::optional<NullCombination> null_combination;
};

// M is the number of limit cycles contained in the two curves. On the
// degenerate branches no limit cycle can live off the curves, so the
// returned bound is M itself.
BoundReport bound_limit_cycles(const CofactorMatrix& m, int M, bool no_isolated_points);

// 2([m1/2] + [m2/2]) + 2, without the +2 when the curves carry no isolated
// real points. Requires m1, m2 >= 1.
int degree_bound(int m1, int m2, bool no_isolated_points);

struct StabilitySigns {
    int on_f1 = 0, on_f2 = 0, off_curves = 0;
    // When delta12, delta12 - delta2 and delta12 + delta1 share their sign,
    // the global bound collapses to 2 (0 without isolated real points).
    std::optional<int> collapsed_bound;
};

// Throws DegenerateHypothesis when delta12*(delta12-delta2)*(delta12+delta1)*detA == 0.
StabilitySigns stability_signs(const CofactorMatrix& m, bool no_isolated_points = false);

struct CriticalPoint {
    Rational x, y;
    // div at the point; equals detA/delta12 whenever delta12 != 0.
    Rational d;
};
struct NoSolution {};
struct LineOfSolutions {};
using CriticalPointResult = std::variant<CriticalPoint, NoSolution, LineOfSolutions>;

// Common zero of the two cofactors; any critical point off the curves must
// sit there.
CriticalPointResult critical_point_off_curves(const CofactorMatrix& m);

// Parameters of the invariant-parabola normal form:
//   dot_x = a + b*x + h*y + c*(y - x^2) + e*x*y
//   dot_y = 2*x*(a + b*x + h*y) + d*(y - x^2) + 2*e*y^2
struct ParabolaParams {
    Rational a, b, c, d, e, h;
};

// Move a root x0 of e*x^3 + h*x^2 + b*x + a to the origin along the
// parabola. The shifted system has a = 0 and keeps y - x^2 invariant.
// Throws NotARoot when x0 is not a root.
ParabolaParams parabola_shift(const ParabolaParams& p, const Rational& x0);

// Birational image of the a = 0 parabola system: a quadratic field with the
// invariant straight line y - 1 = 0 (checked internally). Throws ANotZero.
PlanarField parabola_to_line(const ParabolaParams& p);

// Printed normal forms with their verified invariant curves. Kinds:
// "parabola" (a,b,c,d,e,h), "hyperbola" (a,b,c,u,v),
// "lotka_volterra" (a0,a1,a2,b0,b1,b2). Parameters missing from the binding
// stay symbolic.
SystemSpec qs_normal_forms(const std::string& kind,
                           const std::map<std::string, Rational>& binding = {});

}  // namespace cyclecert::qsbounds

#endif
