#include "cyclecert/sysio.hpp"

#include <cctype>
#include <sstream>

namespace cyclecert::sysio {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line, col); }
};

class ExprParser {
public:
    ExprParser(const std::string& text, const ParseContext& ctx) : lex_(text), ctx_(ctx) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (lex_.peek() != '\0') lex_.fail("trailing input");
        return p;
    }

private:
    Lexer lex_;
    const ParseContext& ctx_;

    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.advance();
                p += term();
            } else if (c == '-') {
                lex_.advance();
                p -= term();
            } else {
                return p;
            }
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            char c = lex_.peek();
            if (c == '*') {
                lex_.advance();
                p *= factor();
            } else if (c == '/') {
                lex_.advance();
                MultiPoly d = factor();
                if (!d.is_constant())
                    throw NonPolynomial("division by non-constant: " + d.to_string());
                if (d.is_zero()) throw NonPolynomial("division by zero");
                p *= MultiPoly(Rational(1) / d.constant_value());
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        char c = lex_.peek();
        if (c == '-') {
            lex_.advance();
            return -factor();
        }
        MultiPoly base = atom();
        if (lex_.peek() == '^') {
            lex_.advance();
            unsigned e = exponent();
            return base.pow(e);
        }
        return base;
    }

    unsigned exponent() {
        char c = lex_.peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) lex_.fail("expected exponent");
        unsigned e = 0;
        while (lex_.pos < lex_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            e = e * 10 + unsigned(lex_.text[lex_.pos] - '0');
            lex_.advance();
        }
        return e;
    }

    MultiPoly atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.advance();
            MultiPoly p = expr();
            if (lex_.peek() != ')') lex_.fail("expected ')'");
            lex_.advance();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (lex_.pos < lex_.text.size()) {
                char d = lex_.text[lex_.pos];
                if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
                    num += d;
                    lex_.advance();
                } else {
                    break;
                }
            }
            return MultiPoly(parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (lex_.pos < lex_.text.size()) {
                char d = lex_.text[lex_.pos];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                    id += d;
                    lex_.advance();
                } else {
                    break;
                }
            }
            if (!ctx_.accept_any_symbol && !ctx_.symbols.count(id)) throw UnknownSymbol(id);
            return MultiPoly::variable(id);
        }
        lex_.fail("unexpected character");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const ParseContext& ctx) {
    return ExprParser(text, ctx).parse();
}

MultiPoly P(const std::string& text) { return parse_poly(text, ParseContext::open()); }

SystemSpec SystemSpec::bound() const {
    std::map<std::string, Rational> values;
    for (auto& [name, v] : params)
        if (v) values[name] = *v;
    return bind(values);
}

SystemSpec SystemSpec::bind(const std::map<std::string, Rational>& values) const {
    SystemSpec out = *this;
    auto apply = [&](MultiPoly p) {
        for (auto& [name, v] : values) p = p.subst(name, MultiPoly(v));
        return p;
    };
    out.dot_x = apply(out.dot_x);
    out.dot_y = apply(out.dot_y);
    for (auto& c : out.curves) {
        c.defining_poly = apply(c.defining_poly);
        if (c.declared_cofactor) c.declared_cofactor = apply(*c.declared_cofactor);
    }
    for (auto& [name, v] : values) {
        auto it = out.params.find(name);
        if (it == out.params.end()) throw UndeclaredParameter(name);
        it->second = v;
    }
    return out;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SystemSpec parse_system(const std::string& text) {
    SystemSpec spec;
    ParseContext ctx = ParseContext::xy();
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_x = false, have_y = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        auto rest_of = [&]() {
            std::string rest;
            std::getline(ls, rest);
            return trim(rest);
        };
        if (kw == "system") {
            spec.name = rest_of();
            if (spec.name.empty()) throw SyntaxError("missing system name", lineno, 1);
        } else if (kw == "param") {
            std::string id;
            ls >> id;
            if (id.empty()) throw SyntaxError("missing parameter name", lineno, 1);
            if (spec.params.count(id) || id == "x" || id == "y") throw DuplicateName(id);
            std::string eq;
            std::optional<Rational> value;
            if (ls >> eq) {
                if (eq != "=") throw SyntaxError("expected '='", lineno, 1);
                std::string v;
                ls >> v;
                value = parse_rational(v);
            }
            spec.params[id] = value;
            ctx.symbols.insert(id);
        } else if (kw == "dot_x" || kw == "dot_y") {
            std::string eq;
            ls >> eq;
            if (eq != "=") throw SyntaxError("expected '='", lineno, 1);
            MultiPoly p = parse_poly(rest_of(), ctx);
            if (kw == "dot_x") {
                spec.dot_x = p;
                have_x = true;
            } else {
                spec.dot_y = p;
                have_y = true;
            }
        } else if (kw == "curve") {
            std::string kind;
            ls >> kind;
            CurveSpec c;
            if (kind == "algebraic")
                c.kind = CurveSpec::Kind::Algebraic;
            else if (kind == "exp")
                c.kind = CurveSpec::Kind::Exponential;
            else
                throw SyntaxError("curve kind must be algebraic or exp", lineno, 1);
            std::string rest = rest_of();
            std::string expr_text = rest;
            auto cof = rest.find("cofactor");
            if (cof != std::string::npos) {
                expr_text = trim(rest.substr(0, cof));
                c.declared_cofactor = parse_poly(trim(rest.substr(cof + 8)), ctx);
            }
            c.defining_poly = parse_poly(expr_text, ctx);
            if (c.defining_poly.is_constant())
                throw NonPolynomial("curve defining polynomial is constant");
            spec.curves.push_back(std::move(c));
        } else if (kw == "note") {
            spec.notes.push_back(rest_of());
        } else {
            throw SyntaxError("unknown keyword: " + kw, lineno, 1);
        }
    }
    if (!have_x || !have_y) throw SyntaxError("system needs dot_x and dot_y", lineno, 1);
    return spec.bound();
}

std::string print_system(const SystemSpec& s) {
    std::ostringstream os;
    os << "system " << (s.name.empty() ? "unnamed" : s.name) << "\n";
    for (auto& [name, v] : s.params) {
        os << "param " << name;
        if (v) os << " = " << to_string(*v);
        os << "\n";
    }
    os << "dot_x = " << s.dot_x.to_string() << "\n";
    os << "dot_y = " << s.dot_y.to_string() << "\n";
    for (auto& c : s.curves) {
        os << "curve " << (c.kind == CurveSpec::Kind::Algebraic ? "algebraic" : "exp")
           << " " << c.defining_poly.to_string();
        if (c.declared_cofactor) os << " cofactor " << c.declared_cofactor->to_string();
        os << "\n";
    }
    for (auto& n : s.notes) os << "note " << n << "\n";
    return os.str();
}

std::string Block::str() const {
    std::ostringstream os;
    for (auto& [k, v] : entries_) os << k << ": " << v << "\n";
    return os.str();
}

}  // namespace cyclecert::sysio
