#include "cyclecert/darboux.hpp"

namespace cyclecert::darboux {

MultiPoly lie_derivative(const PlanarField& F, const MultiPoly& p) {
    return p.diff("x") * F.dot_x + p.diff("y") * F.dot_y;
}

MultiPoly divergence(const PlanarField& F) {
    return F.dot_x.diff("x") + F.dot_y.diff("y");
}

InvariantObject cofactor_of(const PlanarField& F, const CurveSpec& c) {
    if (c.defining_poly.is_constant())
        throw NotInvariant("defining polynomial is constant");
    InvariantObject obj;
    obj.kind = c.kind;
    obj.defining_poly = c.defining_poly;
    if (c.kind == CurveSpec::Kind::Algebraic) {
        MultiPoly ld = lie_derivative(F, c.defining_poly);
        auto k = poly::exact_div(ld, c.defining_poly);
        if (!k)
            throw NotInvariant("Lie derivative of " + c.defining_poly.to_string() +
                               " is not a multiple of it");
        obj.cofactor = *k;
    } else {
        obj.cofactor = lie_derivative(F, c.defining_poly);
    }
    unsigned n = F.degree();
    if (n >= 1 && obj.cofactor.degree_in({"x", "y"}) > n - 1)
        throw CofactorDegreeTooHigh("cofactor degree " +
                                    std::to_string(obj.cofactor.degree_in({"x", "y"})) +
                                    " exceeds n-1 = " + std::to_string(n - 1));
    if (c.declared_cofactor && *c.declared_cofactor != obj.cofactor)
        throw DeclaredCofactorMismatch("declared " + c.declared_cofactor->to_string() +
                                       ", computed " + obj.cofactor.to_string());
    return obj;
}

bool is_curve_invariant(const PlanarField& F, const MultiPoly& w) {
    if (w.is_constant()) throw NotInvariant("constant test polynomial");
    for (auto& v : w.variables())
        if (v != "x" && v != "y")
            throw SymbolicParametersPresent("bind parameters before invariance test: " + v);
    for (auto& field : {F.dot_x, F.dot_y})
        for (auto& v : field.variables())
            if (v != "x" && v != "y")
                throw SymbolicParametersPresent("bind parameters before invariance test: " + v);
    MultiPoly ld = lie_derivative(F, w);
    if (ld.is_zero()) return true;
    return poly::exact_div(ld, w).has_value();
}

}  // namespace cyclecert::darboux
