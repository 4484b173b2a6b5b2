#include "cyclecert/numlab.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <ostream>
#include <sstream>

namespace cyclecert::numlab {

ScalarField::ScalarField(const MultiPoly& p) {
    for (const auto& v : p.variables())
        if (v != "x" && v != "y")
            throw darboux::SymbolicParametersPresent("unbound parameter " + v);
    for (const auto& [m, c] : p.terms()) {
        Term t{c.get_d(), 0, 0};
        for (const auto& [v, ex] : m.exponents())
            (v == "x" ? t.i : t.j) = ex;
        terms_.push_back(t);
    }
}

double ScalarField::operator()(double x, double y) const {
    double acc = 0;
    for (const auto& t : terms_) {
        double m = t.c;
        for (unsigned k = 0; k < t.i; ++k) m *= x;
        for (unsigned k = 0; k < t.j; ++k) m *= y;
        acc += m;
    }
    return acc;
}

NumericField numeric_field(const darboux::PlanarField& F) {
    return NumericField{ScalarField(F.dot_x), ScalarField(F.dot_y),
                        ScalarField(darboux::divergence(F))};
}

double Section::coordinate(double x, double y) const {
    double n = std::hypot(dx, dy);
    return ((x - px) * dx + (y - py) * dy) / n;
}

double Section::offset(double x, double y) const {
    double n = std::hypot(dx, dy);
    return ((x - px) * -dy + (y - py) * dx) / n;
}

void Trajectory::dump(std::ostream& os) const {
    for (const auto& s : samples) os << s.t << " " << s.x << " " << s.y << "\n";
}

namespace {

using State = std::array<double, 3>;  // x, y, accumulated weight

State deriv(const NumericField& f, const ScalarField& weight, const State& s) {
    return {f.dot_x(s[0], s[1]), f.dot_y(s[0], s[1]), weight(s[0], s[1])};
}

// One accepted Dormand-Prince 5(4) step, with the FSAL stage derivatives kept
// for dense output.
struct Step {
    double t0 = 0, h = 0;
    State y0{}, y1{}, f0{}, f1{};
};

class Dopri5 {
  public:
    Dopri5(const NumericField& f, const ScalarField& weight, const State& y0, double tol,
           double h_min)
        : f_(f), w_(weight), y_(y0), tol_(tol), h_min_(h_min) {
        f0_ = deriv(f_, w_, y_);
        double v = std::max({1.0, std::fabs(f0_[0]), std::fabs(f0_[1])});
        h_ = std::min(0.1, 0.01 / v);
    }

    double t() const { return t_; }
    const State& y() const { return y_; }
    std::size_t accepted = 0, rejected = 0;

    Step advance() {
        while (true) {
            if (!(h_ >= h_min_)) underflow();
            State k[7];
            k[0] = f0_;
            State yt;
            for (int s = 1; s < 7; ++s) {
                for (int i = 0; i < 3; ++i) {
                    double acc = 0;
                    for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
                    yt[i] = y_[i] + h_ * acc;
                }
                k[s] = deriv(f_, w_, yt);
            }
            State y1 = yt;  // stage 7 is evaluated at the 5th-order solution
            double err = 0;
            for (int i = 0; i < 3; ++i) {
                double e = 0;
                for (int j = 0; j < 7; ++j) e += kE[j] * k[j][i];
                double sc = tol_ + tol_ * std::max(std::fabs(y_[i]), std::fabs(y1[i]));
                e = h_ * e / sc;
                err += e * e;
            }
            err = std::sqrt(err / 3);
            if (!std::isfinite(err)) {
                h_ *= 0.1;
                ++rejected;
                continue;
            }
            double fac = std::pow(std::max(err, 1e-16), 0.17) / std::pow(facold_, 0.03);
            double hnew = h_ * std::clamp(0.9 / fac, 0.2, 10.0);
            if (err <= 1.0) {
                Step st{t_, h_, y_, y1, k[0], k[6]};
                t_ += h_;
                y_ = y1;
                f0_ = k[6];
                facold_ = std::max(err, 1e-16);
                h_ = hnew;
                ++accepted;
                return st;
            }
            h_ = std::min(hnew, h_);
            ++rejected;
        }
    }

    void clamp_to(double t_end) { h_ = std::min(h_, t_end - t_); }

  private:
    [[noreturn]] void underflow() const {
        std::ostringstream os;
        os << "step size underflow at t = " << t_ << ", state (" << y_[0] << ", " << y_[1]
           << ")";
        throw StepUnderflow(os.str());
    }

    static constexpr double kA[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static constexpr double kE[7] = {71.0 / 57600,      0.0,        -71.0 / 16695, 71.0 / 1920,
                                     -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

    const NumericField& f_;
    const ScalarField& w_;
    State y_;
    State f0_;
    double t_ = 0, h_ = 0;
    double tol_, h_min_;
    double facold_ = 1e-4;
};

State hermite(const Step& st, double theta) {
    State out;
    for (int i = 0; i < 3; ++i) {
        double d = st.y1[i] - st.y0[i];
        double a = st.h * st.f0[i] - d;
        double b = -st.h * st.f1[i] + d;
        out[i] = st.y0[i] + theta * d + theta * (1 - theta) * ((1 - theta) * a + theta * b);
    }
    return out;
}

// Classical RK4 with fixed substeps; used only to polish event times over a
// fraction of one accepted step.
State advance_rk4(const NumericField& f, const ScalarField& w, State y, double dt, int sub) {
    double h = dt / sub;
    for (int s = 0; s < sub; ++s) {
        State k1 = deriv(f, w, y);
        State k2, k3, k4, yt;
        for (int i = 0; i < 3; ++i) yt[i] = y[i] + 0.5 * h * k1[i];
        k2 = deriv(f, w, yt);
        for (int i = 0; i < 3; ++i) yt[i] = y[i] + 0.5 * h * k2[i];
        k3 = deriv(f, w, yt);
        for (int i = 0; i < 3; ++i) yt[i] = y[i] + h * k3[i];
        k4 = deriv(f, w, yt);
        for (int i = 0; i < 3; ++i)
            y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    return y;
}

struct ReturnHit {
    double t;
    State y;
};

// First admissible crossing of the section after leaving it.
ReturnHit first_return(const NumericField& f, const ScalarField& weight, const Section& sec,
                       const State& start, double tol, double t_max) {
    Dopri5 stepper(f, weight, start, tol, 1e-13);
    while (stepper.t() < t_max) {
        Step st = stepper.advance();
        if (std::fabs(st.y1[0]) > 1e6 || std::fabs(st.y1[1]) > 1e6)
            throw NoReturn("orbit escaped the working domain", true);
        double s0 = sec.offset(st.y0[0], st.y0[1]);
        double s1 = sec.offset(st.y1[0], st.y1[1]);
        bool crossing = sec.orientation > 0 ? (s0 < 0 && s1 >= 0) : (s0 > 0 && s1 <= 0);
        if (!crossing) continue;

        // Bracket the root of the Hermite interpolant of the offset, then
        // polish against the true flow by Newton on micro-integrated states.
        double a = 0, b = 1;
        for (int it = 0; it < 60 && (b - a) * st.h > 1e-12; ++it) {
            double m = 0.5 * (a + b);
            State ym = hermite(st, m);
            double sm = sec.offset(ym[0], ym[1]);
            if ((sm < 0) == (s0 < 0))
                a = m;
            else
                b = m;
        }
        double dt = 0.5 * (a + b) * st.h;
        State yc{};
        for (int it = 0; it < 12; ++it) {
            yc = advance_rk4(f, weight, st.y0, dt, 8);
            double s = sec.offset(yc[0], yc[1]);
            double sd = sec.offset(yc[0] + f.dot_x(yc[0], yc[1]), yc[1] + f.dot_y(yc[0], yc[1])) -
                        sec.offset(yc[0], yc[1]);
            if (std::fabs(sd) < 1e-14) break;
            double corr = s / sd;
            dt -= corr;
            dt = std::clamp(dt, 0.0, st.h);
            if (std::fabs(corr) < 1e-15) break;
        }
        yc = advance_rk4(f, weight, st.y0, dt, 8);
        double t_cross = st.t0 + dt;
        if (t_cross < 1e-8) continue;  // still on the departure
        return ReturnHit{t_cross, yc};
    }
    throw NoReturn("no section crossing before t_max");
}

State on_section(const Section& sec, double u) {
    double n = std::hypot(sec.dx, sec.dy);
    return {sec.px + u * sec.dx / n, sec.py + u * sec.dy / n, 0.0};
}

}  // namespace

Trajectory integrate(const NumericField& f, double x0, double y0, double t_end,
                     const IntegrateOptions& opt) {
    if (!(opt.tol > 0)) throw std::invalid_argument("tolerance must be positive");
    Trajectory tr;
    Dopri5 stepper(f, f.div, {x0, y0, 0.0}, opt.tol, opt.h_min);
    tr.samples.push_back({0.0, x0, y0});
    while (tr.samples.size() < opt.max_steps) {
        if (t_end - stepper.t() <= 1e-12) break;
        stepper.clamp_to(t_end);
        Step st = stepper.advance();
        tr.samples.push_back({st.t0 + st.h, st.y1[0], st.y1[1]});
    }
    tr.accepted = stepper.accepted;
    tr.rejected = stepper.rejected;
    return tr;
}

CycleResult find_cycle(const NumericField& f, const Section& sec, double lo, double hi,
                       const FindCycleOptions& opt) {
    for (double u : {lo, hi}) {
        State p = on_section(sec, u);
        double sd = sec.offset(p[0] + f.dot_x(p[0], p[1]), p[1] + f.dot_y(p[0], p[1])) -
                    sec.offset(p[0], p[1]);
        if (std::fabs(sd) < 1e-12)
            throw NotTransversal("field tangent to the section at a bracket endpoint");
    }

    struct Probe {
        bool finite = false;
        double phi = 0;  // displacement of the return map, or +-1e30 by fate
        double T = 0, h = 0;
    };
    auto probe = [&](double u) -> Probe {
        State p = on_section(sec, u);
        try {
            ReturnHit hit = first_return(f, f.div, sec, p, opt.tol, opt.t_max);
            return {true, sec.coordinate(hit.y[0], hit.y[1]) - u, hit.t, hit.y[2]};
        } catch (const NoReturn& e) {
            // An orbit that blows up moved outward; a bounded one that stops
            // crossing the section spiralled inward. Either fate still gives
            // the displacement a usable sign for bisection.
            return {false, e.escaped ? 1e30 : -1e30, 0, 0};
        } catch (const StepUnderflow&) {
            return {false, 1e30, 0, 0};
        }
    };
    auto cycle_at = [&](double u, const Probe& p) -> CycleInfo {
        State s = on_section(sec, u);
        return CycleInfo{sec, s[0], s[1], p.T, p.h, std::fabs(p.phi)};
    };

    double a = lo, b = hi;
    Probe pa = probe(a), pb = probe(b);
    if (pa.finite && std::fabs(pa.phi) <= opt.residual) return cycle_at(a, pa);
    if (pb.finite && std::fabs(pb.phi) <= opt.residual) return cycle_at(b, pb);
    if ((pa.phi < 0) == (pb.phi < 0)) return NoneFound{};

    for (int it = 0; it < 200; ++it) {
        double c;
        if (pa.finite && pb.finite) {
            c = (a * pb.phi - b * pa.phi) / (pb.phi - pa.phi);
            if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
        } else {
            c = 0.5 * (a + b);
        }
        Probe pc = probe(c);
        if (pc.finite && std::fabs(pc.phi) <= opt.residual) return cycle_at(c, pc);
        if ((pc.phi < 0) == (pa.phi < 0)) {
            a = c;
            pa = pc;
            if (pb.finite) pb.phi *= 0.5;  // Illinois damping
        } else {
            b = c;
            pb = pc;
            if (pa.finite) pa.phi *= 0.5;
        }
        if (std::fabs(b - a) < 1e-12 * std::max(1.0, std::fabs(a))) {
            if (pa.finite && std::fabs(pa.phi) <= opt.residual) return cycle_at(a, pa);
            if (pb.finite && std::fabs(pb.phi) <= opt.residual) return cycle_at(b, pb);
            return NoneFound{};
        }
    }
    return NoneFound{};
}

double cycle_integral(const NumericField& f, const CycleInfo& c, const ScalarField& q,
                      double tol) {
    State start{c.x, c.y, 0.0};
    ReturnHit hit = first_return(f, q, c.section, start, tol, 4 * c.T + 1);
    return hit.y[2];
}

ExponentVerdict characteristic_exponent(const CycleInfo& c) {
    ExponentVerdict v;
    v.h = c.h;
    if (std::fabs(c.h) < 1e-6)
        v.kind = ExponentVerdict::Kind::Inconclusive;
    else
        v.kind = c.h < 0 ? ExponentVerdict::Kind::Attractor : ExponentVerdict::Kind::Repellor;
    return v;
}

Consistency cross_validate(const corpus::CorpusEntry& e,
                           const std::map<std::string, Rational>& binding, const Grid& grid,
                           double on_curve_tol) {
    sysio::SystemSpec sb = e.spec.bind(binding);
    darboux::PlanarField F{sb.dot_x, sb.dot_y};
    NumericField f = numeric_field(F);

    std::vector<ScalarField> curves, grad_x, grad_y;
    for (const auto& c : sb.curves) {
        if (c.kind != sysio::CurveSpec::Kind::Algebraic) continue;
        curves.emplace_back(c.defining_poly);
        grad_x.emplace_back(c.defining_poly.diff("x"));
        grad_y.emplace_back(c.defining_poly.diff("y"));
    }

    double width = (grid.hi - grid.lo) / grid.cells;
    std::vector<std::future<CycleResult>> cells;
    for (int i = 0; i < grid.cells; ++i)
        cells.push_back(std::async(std::launch::async, [&, i]() -> CycleResult {
            try {
                return find_cycle(f, grid.section, grid.lo + i * width,
                                  grid.lo + (i + 1) * width);
            } catch (const std::exception&) {
                return NoneFound{};
            }
        }));

    Consistency out;
    out.pass = true;
    std::vector<double> seen;
    for (auto& cell : cells) {
        CycleResult r = cell.get();
        auto* ci = std::get_if<CycleInfo>(&r);
        if (!ci) continue;
        double u = grid.section.coordinate(ci->x, ci->y);
        bool dup = false;
        for (double v : seen)
            if (std::fabs(u - v) <= 1e-6) dup = true;
        if (dup) continue;
        seen.push_back(u);

        Trajectory tr = integrate(f, ci->x, ci->y, ci->T);
        bool on_curve = false;
        for (std::size_t k = 0; k < curves.size() && !on_curve; ++k) {
            bool all = true;
            for (const auto& s : tr.samples) {
                double g = std::hypot(grad_x[k](s.x, s.y), grad_y[k](s.x, s.y));
                if (std::fabs(curves[k](s.x, s.y)) > on_curve_tol * std::max(1.0, g)) {
                    all = false;
                    break;
                }
            }
            on_curve = all;
        }
        out.hits.push_back({*ci, on_curve});
        if (!on_curve) out.pass = false;
    }
    std::ostringstream os;
    os << out.hits.size() << " cycle(s) located, "
       << (out.pass ? "all on declared curves" : "off-curve cycle present");
    out.detail = os.str();
    return out;
}

}  // namespace cyclecert::numlab
