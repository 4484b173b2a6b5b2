#ifndef CYCLECERT_SYSIO_HPP
#define CYCLECERT_SYSIO_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclecert/multipoly.hpp"

namespace cyclecert::sysio {

using poly::MultiPoly;

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(const std::string& what, int l, int c)
        : std::runtime_error(what + " at " + std::to_string(l) + ":" + std::to_string(c)),
          line(l), column(c) {}
};
struct UnknownSymbol : std::runtime_error {
    explicit UnknownSymbol(const std::string& sym)
        : std::runtime_error("unknown symbol: " + sym) {}
};
struct NonPolynomial : std::runtime_error {
    explicit NonPolynomial(const std::string& what) : std::runtime_error(what) {}
};
struct DuplicateName : std::runtime_error {
    explicit DuplicateName(const std::string& n)
        : std::runtime_error("duplicate name: " + n) {}
};
struct UndeclaredParameter : std::runtime_error {
    explicit UndeclaredParameter(const std::string& n)
        : std::runtime_error("undeclared parameter: " + n) {}
};

struct ParseContext {
    std::set<std::string> symbols;  // state variables plus declared parameters
    bool accept_any_symbol = false;

    static ParseContext xy() { return ParseContext{{"x", "y"}, false}; }
    static ParseContext open() { return ParseContext{{}, true}; }
    ParseContext& with(std::initializer_list<std::string> more) {
        for (auto& s : more) symbols.insert(s);
        return *this;
    }
};

// Grammar: integers, rationals p/q, decimal literals (exactified),
// identifiers, + - * / ^, unary minus, parentheses. Division only by a
// nonzero constant. No implicit multiplication.
MultiPoly parse_poly(const std::string& text, const ParseContext& ctx);

// Shorthand used throughout the tests: any identifier allowed.
MultiPoly P(const std::string& text);

struct CurveSpec {
    enum class Kind { Algebraic, Exponential };
    Kind kind = Kind::Algebraic;
    MultiPoly defining_poly;                   // f for algebraic, h for exp(h)
    std::optional<MultiPoly> declared_cofactor;
};

struct SystemSpec {
    std::string name;
    MultiPoly dot_x, dot_y;
    std::vector<CurveSpec> curves;
    // Declared parameters; bound ones carry a value.
    std::map<std::string, std::optional<Rational>> params;
    std::vector<std::string> notes;

    // Substitute all bound parameters into dot_x, dot_y and the curves.
    SystemSpec bound() const;
    // Substitute the given values (they must be declared parameters).
    SystemSpec bind(const std::map<std::string, Rational>& values) const;
};

// Line-oriented keyword format:
//   system <name>
//   param <id> [= <rational>]
//   dot_x = <expr>
//   dot_y = <expr>
//   curve algebraic|exp <expr> [cofactor <expr>]
//   note <text>
SystemSpec parse_system(const std::string& text);
std::string print_system(const SystemSpec& s);

// Stable key/value serialization block.
class Block {
public:
    void add(const std::string& key, const std::string& value) {
        entries_.emplace_back(key, value);
    }
    void add(const std::string& key, const MultiPoly& p) { add(key, p.to_string()); }
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace cyclecert::sysio

#endif
