#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclecert/corpus.hpp"
#include "cyclecert/numlab.hpp"
#include "cyclecert/qsbounds.hpp"

namespace cc = cyclecert;
using cc::Rational;
using cc::poly::MultiPoly;

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// "corpus:<id>" picks a built-in entry, anything else is a file path.
cc::sysio::SystemSpec load_spec(const std::string& ref) {
    if (ref.rfind("corpus:", 0) == 0) return cc::corpus::get(ref.substr(7)).spec;
    std::ifstream in(ref);
    if (!in) throw UsageError("cannot open " + ref);
    std::ostringstream ss;
    ss << in.rdbuf();
    return cc::sysio::parse_system(ss.str());
}

Rational parse_rational(const std::string& text) {
    MultiPoly p = cc::sysio::P(text);
    if (!p.is_constant()) throw UsageError("not a rational constant: " + text);
    return p.constant_value();
}

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& kvs) {
    std::map<std::string, Rational> out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("expected name=value: " + kv);
        out[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    return out;
}

cc::sysio::SystemSpec bind_spec(const cc::sysio::SystemSpec& s,
                                const std::map<std::string, Rational>& binding) {
    return s.bind(binding).bound();
}

void require_numeric(const cc::sysio::SystemSpec& s) {
    for (const auto& [n, v] : s.params)
        if (!v) throw UsageError("parameter " + n + " is unbound; pass --param " + n + "=...");
}

std::vector<cc::darboux::InvariantObject> checked_curves(const cc::darboux::PlanarField& F,
                                                         const cc::sysio::SystemSpec& s) {
    std::vector<cc::darboux::InvariantObject> out;
    for (const auto& c : s.curves) out.push_back(cc::darboux::cofactor_of(F, c));
    return out;
}

bool g_block = false;

void emit(const cc::sysio::Block& b, const std::string& human) {
    if (g_block)
        std::cout << b.str();
    else
        std::cout << human;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t lo, std::size_t hi,
                                  const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw UsageError("bad number in " + what + ": " + part);
        }
    }
    if (out.size() < lo || out.size() > hi)
        throw UsageError(what + " wants " + std::to_string(lo) + ".." + std::to_string(hi) +
                         " comma-separated numbers");
    return out;
}

int cmd_verify(const std::string& ref, const std::map<std::string, Rational>& binding) {
    if (ref.rfind("corpus:", 0) == 0 && binding.empty()) {
        auto r = cc::corpus::run_entry(ref.substr(7), cc::corpus::RunMode::Verify);
        cc::sysio::Block b;
        b.add("entry", r.id);
        b.add("status", r.pass ? "PASS" : "FAIL");
        b.add("detail", r.detail);
        emit(b, r.id + ": " + (r.pass ? "PASS" : "FAIL") + " (" + r.detail + ")\n");
        return r.pass ? 0 : 1;
    }
    auto s = bind_spec(load_spec(ref), binding);
    cc::darboux::PlanarField F{s.dot_x, s.dot_y};
    try {
        auto curves = checked_curves(F, s);
        cc::sysio::Block b;
        b.add("system", s.name);
        b.add("status", "PASS");
        std::ostringstream human;
        human << s.name << ": all declared curves invariant\n";
        for (std::size_t i = 0; i < curves.size(); ++i) {
            b.add("cofactor_" + std::to_string(i), curves[i].cofactor);
            human << "  cofactor " << i << ": " << curves[i].cofactor.to_string() << "\n";
        }
        emit(b, human.str());
        return 0;
    } catch (const cc::darboux::NotInvariant& ex) {
        std::cerr << "invariance check failed: " << ex.what() << "\n";
        return 1;
    }
}

int emit_certificate(const cc::certgen::Certificate& cert) {
    if (g_block) {
        std::cout << cc::certgen::certificate_block(cert);
    } else {
        std::cout << "certificate found\n" << cc::certgen::certificate_block(cert);
    }
    return 0;
}

int cmd_certify(const std::string& ref, const std::map<std::string, Rational>& binding,
                const std::vector<std::string>& alpha_texts, const std::string& g_text) {
    auto s = bind_spec(load_spec(ref), binding);
    require_numeric(s);
    cc::darboux::PlanarField F{s.dot_x, s.dot_y};
    auto curves = checked_curves(F, s);
    if (alpha_texts.size() != curves.size())
        throw UsageError("need one --alpha per declared curve (" +
                         std::to_string(curves.size()) + ")");
    std::vector<Rational> alphas;
    for (const auto& t : alpha_texts) alphas.push_back(parse_rational(t));
    MultiPoly g = cc::sysio::parse_poly(g_text, cc::sysio::ParseContext::xy());

    MultiPoly N = cc::certgen::build_N(F, curves, alphas, g);
    cc::certgen::Certificate cert;
    cert.curves = curves;
    for (const auto& a : alphas) cert.alphas.push_back(cc::certgen::ParamRational(a));
    cert.g = g;
    cert.N = N;
    if (N.is_zero()) {
        auto fi = cc::certgen::check_first_integral(F, curves, alphas, g);
        if (!fi.certified) {
            std::cerr << "N vanishes but the first-integral test is inconclusive\n";
            return 1;
        }
        cert.witness = cc::certgen::IdenticallyZero{};
        cert.conclusion = {cc::certgen::Conclusion::Kind::NoLimitCyclesOffCurves, fi.detail};
        return emit_certificate(cert);
    }
    if (auto sq = cc::poly::poly_sqrt(N)) {
        cc::certgen::SignWitness w = cc::certgen::ScaledSquare{sq->ratio, sq->w};
        cc::certgen::check_witness(N, w);
        if (cc::certgen::check_zero_set(F, w, N).ok) {
            cert.witness = w;
            cert.conclusion = {cc::certgen::Conclusion::Kind::NoPeriodicOrbitsOffCurves,
                               "N is a scaled square"};
            return emit_certificate(cert);
        }
        std::cerr << "the zero set of N contains an invariant factor\n";
        return 1;
    }
    std::cerr << "N is not sign-semidefinite by any supported witness\n";
    return 1;
}

int cmd_search(const std::string& ref, const std::map<std::string, Rational>& binding,
               unsigned gdeg, const std::string& strategy) {
    auto s = bind_spec(load_spec(ref), binding);
    cc::darboux::PlanarField F{s.dot_x, s.dot_y};
    auto curves = checked_curves(F, s);
    cc::certsearch::SearchOutcome out = cc::certsearch::NoCertificateFound{"unreached"};
    if (strategy == "square") {
        require_numeric(s);
        cc::certsearch::ScaledSquareTarget t;
        t.g_degree = gdeg;
        out = cc::certsearch::search_square(F, curves, t);
    } else if (strategy == "univar") {
        require_numeric(s);
        cc::certsearch::UnivariateTarget t;
        t.g_degree = gdeg;
        out = cc::certsearch::search_univariate(F, curves, t);
    } else if (strategy == "disc") {
        if (curves.empty()) throw UsageError("discriminant search needs a declared curve");
        out = cc::certsearch::search_discriminant(F, curves[0], "y");
    } else {
        throw UsageError("unknown strategy: " + strategy);
    }
    if (auto* f = std::get_if<cc::certsearch::Found>(&out)) return emit_certificate(f->cert);
    if (auto* pc = std::get_if<cc::certsearch::ParametricCondition>(&out)) {
        cc::sysio::Block b;
        b.add("outcome", "parametric condition");
        b.add("inequality", pc->inequality);
        emit(b, "certificate exists wherever this is nonnegative:\n  " +
                    pc->inequality.to_string() + "\n");
        return 0;
    }
    std::cerr << std::get<cc::certsearch::NoCertificateFound>(out).report << "\n";
    return 1;
}

int cmd_qs_bounds(const std::string& ref, const std::map<std::string, Rational>& binding,
                  int M, bool no_isolated) {
    auto s = bind_spec(load_spec(ref), binding);
    require_numeric(s);
    cc::darboux::PlanarField F{s.dot_x, s.dot_y};
    auto curves = checked_curves(F, s);
    if (curves.size() < 2)
        throw UsageError("qs-bounds needs two declared invariant curves");
    auto m = cc::qsbounds::cofactor_matrix(F, curves[0], curves[1]);
    auto r = cc::qsbounds::bound_limit_cycles(m, M, no_isolated);
    int m1 = (int)curves[0].defining_poly.degree_in({"x", "y"});
    int m2 = (int)curves[1].defining_poly.degree_in({"x", "y"});
    int db = cc::qsbounds::degree_bound(m1, m2, no_isolated);
    const char* branch = r.branch == cc::qsbounds::Branch::Generic     ? "generic"
                         : r.branch == cc::qsbounds::Branch::ZeroDetA ? "detA = 0"
                                                                      : "delta12 = 0";
    cc::sysio::Block b;
    b.add("M", std::to_string(r.M));
    b.add("bound", std::to_string(r.bound));
    b.add("branch", branch);
    b.add("degree_bound", std::to_string(db));
    std::ostringstream human;
    human << "at most " << r.bound << " limit cycles (M = " << r.M << ", " << branch
          << " branch); degree bound " << db << "\n";
    emit(b, human.str());
    return 0;
}

int cmd_transform_parabola(const std::string& ref,
                           const std::map<std::string, Rational>& binding) {
    auto s = bind_spec(load_spec(ref), binding);
    require_numeric(s);
    auto value = [&](const char* n) -> Rational {
        auto it = s.params.find(n);
        if (it == s.params.end() || !it->second)
            throw UsageError(std::string("parabola form needs parameter ") + n);
        return *it->second;
    };
    cc::qsbounds::ParabolaParams p{value("a"), value("b"), value("c"),
                                   value("d"), value("e"), value("h")};
    auto F = cc::qsbounds::parabola_to_line(p);
    cc::sysio::Block b;
    b.add("dot_x", F.dot_x);
    b.add("dot_y", F.dot_y);
    b.add("invariant_line", "y - 1");
    emit(b, "transformed system with invariant line y - 1:\n  dot_x = " +
                F.dot_x.to_string() + "\n  dot_y = " + F.dot_y.to_string() + "\n");
    return 0;
}

int cmd_corpus_run(const std::string& mode) {
    if (mode != "verify" && mode != "search") throw UsageError("mode must be verify|search");
    auto report = cc::corpus::run_all(mode == "verify" ? cc::corpus::RunMode::Verify
                                                       : cc::corpus::RunMode::Search);
    cc::sysio::Block b;
    for (const auto& e : report.entries) {
        b.add(e.id, std::string(e.pass ? "PASS" : "FAIL") + ": " + e.detail);
        if (!g_block)
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.id << " (" << e.detail << ")\n";
    }
    if (g_block) std::cout << b.str();
    return report.all_pass() ? 0 : 1;
}

int cmd_simulate(const std::string& ref, const std::map<std::string, Rational>& binding,
                 const std::string& from, double t_end, double tol) {
    auto s = bind_spec(load_spec(ref), binding);
    require_numeric(s);
    auto f = cc::numlab::numeric_field(cc::darboux::PlanarField{s.dot_x, s.dot_y});
    auto p0 = parse_doubles(from, 2, 2, "--from");
    cc::numlab::IntegrateOptions opt;
    opt.tol = tol;
    try {
        auto tr = cc::numlab::integrate(f, p0[0], p0[1], t_end, opt);
        tr.dump(std::cout);
        return 0;
    } catch (const cc::numlab::StepUnderflow& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
    }
}

int cmd_find_cycle(const std::string& ref, const std::map<std::string, Rational>& binding,
                   const std::string& section, const std::string& bracket) {
    auto s = bind_spec(load_spec(ref), binding);
    require_numeric(s);
    auto f = cc::numlab::numeric_field(cc::darboux::PlanarField{s.dot_x, s.dot_y});
    auto sv = parse_doubles(section, 4, 5, "--section");
    cc::numlab::Section sec{sv[0], sv[1], sv[2], sv[3], sv.size() == 5 && sv[4] < 0 ? -1 : +1};
    auto bv = parse_doubles(bracket, 2, 2, "--bracket");
    auto r = cc::numlab::find_cycle(f, sec, bv[0], bv[1]);
    if (auto* c = std::get_if<cc::numlab::CycleInfo>(&r)) {
        auto v = cc::numlab::characteristic_exponent(*c);
        const char* kind = v.kind == cc::numlab::ExponentVerdict::Kind::Attractor   ? "attractor"
                           : v.kind == cc::numlab::ExponentVerdict::Kind::Repellor ? "repellor"
                                                                                   : "inconclusive";
        cc::sysio::Block b;
        b.add("x", std::to_string(c->x));
        b.add("y", std::to_string(c->y));
        b.add("period", std::to_string(c->T));
        b.add("exponent", std::to_string(c->h));
        b.add("stability", kind);
        b.add("residual", std::to_string(c->residual));
        std::ostringstream human;
        human << "cycle through (" << c->x << ", " << c->y << "), period " << c->T
              << ", exponent " << c->h << " (" << kind << ")\n";
        emit(b, human.str());
        return 0;
    }
    std::cerr << "no cycle in the bracket\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates of limit-cycle non-existence for planar systems"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text|block");

    std::string ref, g_text, strategy = "square", mode = "verify", from, section, bracket;
    std::vector<std::string> params, alpha_texts;
    unsigned gdeg = 1;
    int M = 0;
    bool no_isolated = false;
    double t_end = 10.0, tol = 1e-10;

    auto add_ref = [&](CLI::App* sub) {
        sub->add_option("ref", ref, "system file or corpus:<id>")->required();
        sub->add_option("--param", params, "parameter binding name=value");
    };

    auto* verify = app.add_subcommand("verify", "check declared invariant curves");
    add_ref(verify);
    auto* certify = app.add_subcommand("certify", "verify a user-supplied certificate");
    add_ref(certify);
    certify->add_option("--alpha", alpha_texts, "multiplier, one per curve")->required();
    certify->add_option("--g", g_text, "polynomial g in x, y")->required();
    auto* search = app.add_subcommand("search", "search for a certificate");
    add_ref(search);
    search->add_option("--gdeg", gdeg, "degree of the g ansatz");
    search->add_option("--strategy", strategy, "square|disc|univar");
    auto* qs = app.add_subcommand("qs-bounds", "limit-cycle bounds for quadratic systems");
    add_ref(qs);
    qs->add_option("--M", M, "limit cycles contained in the curves");
    qs->add_flag("--no-isolated-points", no_isolated, "curves carry no isolated real points");
    auto* transform = app.add_subcommand("transform", "coordinate transformations");
    auto* parabola = transform->add_subcommand("parabola", "parabola to invariant line");
    add_ref(parabola);
    transform->require_subcommand(1);
    auto* corpus_cmd = app.add_subcommand("corpus", "built-in example systems");
    auto* corpus_run = corpus_cmd->add_subcommand("run", "run the whole corpus");
    corpus_run->add_option("--mode", mode, "verify|search");
    corpus_cmd->require_subcommand(1);
    auto* simulate = app.add_subcommand("simulate", "integrate and dump a trajectory");
    add_ref(simulate);
    simulate->add_option("--from", from, "initial point x,y")->required();
    simulate->add_option("--t", t_end, "time horizon");
    simulate->add_option("--tol", tol, "integration tolerance");
    auto* findc = app.add_subcommand("find-cycle", "locate a limit cycle by return map");
    add_ref(findc);
    findc->add_option("--section", section, "px,py,dx,dy[,orientation]")->required();
    findc->add_option("--bracket", bracket, "lo,hi along the section")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        g_block = format == "block";
        if (format != "text" && format != "block") throw UsageError("format must be text|block");
        auto binding = parse_bindings(params);
        if (*verify) return cmd_verify(ref, binding);
        if (*certify) return cmd_certify(ref, binding, alpha_texts, g_text);
        if (*search) return cmd_search(ref, binding, gdeg, strategy);
        if (*qs) return cmd_qs_bounds(ref, binding, M, no_isolated);
        if (*parabola) return cmd_transform_parabola(ref, binding);
        if (*corpus_run) return cmd_corpus_run(mode);
        if (*simulate) return cmd_simulate(ref, binding, from, t_end, tol);
        if (*findc) return cmd_find_cycle(ref, binding, section, bracket);
        return 2;
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::sysio::SyntaxError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::sysio::UnknownSymbol& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::sysio::NonPolynomial& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::sysio::DuplicateName& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::sysio::UndeclaredParameter& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const cc::corpus::UnknownId& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "failed: " << ex.what() << "\n";
        return 1;
    }
}
