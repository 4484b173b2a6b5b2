#ifndef CYCLECERT_NUMLAB_HPP
#define CYCLECERT_NUMLAB_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cyclecert/corpus.hpp"
#include "cyclecert/darboux.hpp"

namespace cyclecert::numlab {

using poly::MultiPoly;

struct StepUnderflow : std::runtime_error {
    explicit StepUnderflow(const std::string& what) : std::runtime_error(what) {}
};
struct NoReturn : std::runtime_error {
    // Escaped orbits left the working domain; bounded ones never crossed the
    // section again before t_max (e.g. spiralled into a focus).
    bool escaped;
    explicit NoReturn(const std::string& what, bool escaped_ = false)
        : std::runtime_error(what), escaped(escaped_) {}
};
struct NotTransversal : std::runtime_error {
    explicit NotTransversal(const std::string& what) : std::runtime_error(what) {}
};

// A bivariate polynomial compiled to floating point. Construction fails on
// unbound parameters.
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const MultiPoly& p);
    double operator()(double x, double y) const;

  private:
    struct Term {
        double c;
        unsigned i, j;
    };
    std::vector<Term> terms_;
};

struct NumericField {
    ScalarField dot_x, dot_y, div;
};

NumericField numeric_field(const darboux::PlanarField& F);

struct Trajectory {
    struct Sample {
        double t, x, y;
    };
    std::vector<Sample> samples;
    std::size_t accepted = 0, rejected = 0;

    // Whitespace-separated "t x y" lines for external plotting.
    void dump(std::ostream& os) const;
};

struct IntegrateOptions {
    double tol = 1e-10;
    double h_min = 1e-13;
    std::size_t max_steps = 2000000;
};

// Dormand-Prince 5(4) with PI step-size control from (x0, y0) over [0, t_end].
Trajectory integrate(const NumericField& f, double x0, double y0, double t_end,
                     const IntegrateOptions& opt = {});

// Oriented section line through (px, py) with unit-free direction (dx, dy).
// A crossing counts when the signed offset passes zero with the given
// orientation of the normal velocity.
struct Section {
    double px = 0, py = 0;
    double dx = 1, dy = 0;
    int orientation = +1;

    double coordinate(double x, double y) const;  // position along the line
    double offset(double x, double y) const;      // signed normal distance
};

struct CycleInfo {
    Section section;
    double x = 0, y = 0;  // fixed point of the first-return map
    double T = 0;         // period
    double h = 0;         // characteristic exponent, integral of div over [0, T]
    double residual = 0;  // |return(u*) - u*|
};
struct NoneFound {};
using CycleResult = std::variant<CycleInfo, NoneFound>;

struct FindCycleOptions {
    double tol = 1e-10;       // integration tolerance
    double residual = 1e-9;   // acceptance bound for the return-map residual
    double t_max = 200.0;     // give up (NoReturn) past this time
};

// Fixed point of the first-return map, bracketed on [lo, hi] along the
// section and polished by regula falsi. Throws NotTransversal when the field
// is tangent to the section at a bracket endpoint; NoReturn propagates from
// orbits that escape.
CycleResult find_cycle(const NumericField& f, const Section& sec, double lo, double hi,
                       const FindCycleOptions& opt = {});

// Integral of q along the cycle over one period, by augmented quadrature.
double cycle_integral(const NumericField& f, const CycleInfo& c, const ScalarField& q,
                      double tol = 1e-10);

struct ExponentVerdict {
    double h = 0;
    enum class Kind { Attractor, Repellor, Inconclusive } kind = Kind::Inconclusive;
};

// Sign verdict on h; |h| < 1e-6 is flagged inconclusive.
ExponentVerdict characteristic_exponent(const CycleInfo& c);

struct Grid {
    Section section;
    double lo = 0, hi = 1;
    int cells = 8;
};

struct CycleHit {
    CycleInfo cycle;
    bool on_curve = false;
};

struct Consistency {
    bool pass = false;
    std::vector<CycleHit> hits;
    std::string detail;
};

// Sweep find_cycle over the grid cells; PASS iff every located cycle lies on
// a declared algebraic invariant curve (relative threshold on |f|).
Consistency cross_validate(const corpus::CorpusEntry& e,
                           const std::map<std::string, Rational>& binding, const Grid& grid,
                           double on_curve_tol = 1e-6);

}  // namespace cyclecert::numlab

#endif
