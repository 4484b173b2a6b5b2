#ifndef CYCLECERT_CORPUS_HPP
#define CYCLECERT_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cyclecert/certgen.hpp"
#include "cyclecert/certsearch.hpp"

namespace cyclecert::corpus {

using certgen::ParamRational;
using poly::MultiPoly;

struct UnknownId : std::runtime_error {
    explicit UnknownId(const std::string& id) : std::runtime_error("unknown corpus id: " + id) {}
};

// Sign witnesses with parameter-dependent scales, stated once for the whole
// family. They are checked symbolically and re-instantiated at numeric
// bindings as certgen witnesses.
struct SymbolicSquare {
    ParamRational r;
    MultiPoly w;
};
struct SymbolicConstant {
    ParamRational c;
};
struct SymbolicSOS {
    struct Term {
        ParamRational c;
        MultiPoly s;                  // squared factor
        MultiPoly q{Rational(1)};     // PSD quadratic form, or the constant 1
    };
    std::vector<Term> terms;
};
using SymbolicWitness = std::variant<SymbolicSquare, SymbolicConstant, SymbolicSOS>;

struct ExpectedCertificate {
    std::vector<ParamRational> alphas;
    MultiPoly g;
    certgen::RatPoly N;
    SymbolicWitness witness;
    certgen::Conclusion::Kind conclusion = certgen::Conclusion::Kind::NoPeriodicOrbitsOffCurves;
};

struct SearchPlan {
    enum class Kind { None, Square, Univariate, Discriminant };
    Kind kind = Kind::None;
    unsigned g_degree = 1;
    bool fix_alphas = true;  // seed the search with the entry's multipliers
};

struct CorpusEntry {
    std::string id;
    sysio::SystemSpec spec;  // curves carry the expected cofactors
    std::optional<ExpectedCertificate> expected;
    bool numeric_only = false;
    std::vector<certgen::SideCondition> side_conditions;
    std::string provenance;
    std::vector<std::string> notes;
    // Admissible parameter bindings used for the numeric replay; entries
    // with unconstrained parameters leave this empty and get random ones.
    std::vector<std::map<std::string, Rational>> sample_bindings;
    SearchPlan search;
};

std::vector<std::string> list();
const CorpusEntry& get(const std::string& id);

enum class RunMode { Verify, Search };

struct EntryResult {
    std::string id;
    bool pass = false;
    std::string detail;
};
struct Report {
    std::vector<EntryResult> entries;
    bool all_pass() const {
        for (auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

EntryResult run_entry(const std::string& id, RunMode mode);
Report run_all(RunMode mode);

}  // namespace cyclecert::corpus

#endif
