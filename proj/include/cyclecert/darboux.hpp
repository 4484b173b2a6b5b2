#ifndef CYCLECERT_DARBOUX_HPP
#define CYCLECERT_DARBOUX_HPP

#include <stdexcept>

#include "cyclecert/multipoly.hpp"
#include "cyclecert/sysio.hpp"

namespace cyclecert::darboux {

using poly::MultiPoly;
using sysio::CurveSpec;

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};
struct CofactorDegreeTooHigh : std::runtime_error {
    explicit CofactorDegreeTooHigh(const std::string& what) : std::runtime_error(what) {}
};
struct DeclaredCofactorMismatch : std::runtime_error {
    explicit DeclaredCofactorMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct SymbolicParametersPresent : std::runtime_error {
    explicit SymbolicParametersPresent(const std::string& what) : std::runtime_error(what) {}
};

// Planar polynomial vector field (P, Q); degree counts x and y only, so
// symbolic parameters are transparent.
struct PlanarField {
    MultiPoly dot_x, dot_y;

    unsigned degree() const {
        return std::max(dot_x.degree_in({"x", "y"}), dot_y.degree_in({"x", "y"}));
    }
    static PlanarField of(const sysio::SystemSpec& s) { return {s.dot_x, s.dot_y}; }
};

// Invariant algebraic curve f = 0 or exponential factor exp(h), with its
// verified cofactor.
struct InvariantObject {
    CurveSpec::Kind kind = CurveSpec::Kind::Algebraic;
    MultiPoly defining_poly;  // f or h
    MultiPoly cofactor;
};

// p_x P + p_y Q
MultiPoly lie_derivative(const PlanarField& F, const MultiPoly& p);

// P_x + Q_y
MultiPoly divergence(const PlanarField& F);

// Extract and verify the cofactor of a declared curve. Throws NotInvariant,
// CofactorDegreeTooHigh or DeclaredCofactorMismatch.
InvariantObject cofactor_of(const PlanarField& F, const CurveSpec& c);

// True iff w divides its own Lie derivative. w must be nonconstant with
// numeric coefficients; throws SymbolicParametersPresent otherwise.
bool is_curve_invariant(const PlanarField& F, const MultiPoly& w);

}  // namespace cyclecert::darboux

#endif
