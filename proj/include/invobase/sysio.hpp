#ifndef INVOBASE_SYSIO_HPP
#define INVOBASE_SYSIO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invobase/basis.hpp"
#include "invobase/monomial.hpp"
#include "invobase/ordering.hpp"
#include "invobase/polynomial.hpp"

namespace invobase {

/// A parsed input system: variable table (declaration order = precedence),
/// ordering kind and at least one polynomial.
struct SystemDocument {
    VarTable vars;
    OrderKind order = OrderKind::DegRevLex;
    std::vector<Polynomial> polynomials;

    MonomialOrdering ordering() const { return MonomialOrdering(order, vars.arity()); }
};

/// Polynomial grammar: integer or rational literals (a/b), declared variable
/// names, '^' with a positive integer exponent, explicit '*', binary '+'/'-',
/// unary '-', parentheses. Juxtaposition is not multiplication.
/// Throws ParseError with a 1-based position.
Polynomial parse_polynomial(std::string_view text, const VarTable& vars,
                            const MonomialOrdering& ord);

/// Document grammar: a required `vars: a,b,c` header, an optional
/// `order: lex|deglex|degrevlex` header (degrevlex by default), then one
/// polynomial per non-empty line. '#' starts a comment.
SystemDocument parse_system(std::string_view text);

std::string format_monomial(const Monomial& m, const VarTable& vars);

/// Canonical rendering; parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p, const VarTable& vars);

enum class ReportFormat { Text, Json };

/// Result document for one engine run.
struct RunReport {
    std::vector<std::string> input; // echo of the parsed polynomials
    std::string division;
    std::string ordering;
    RunStatus status = RunStatus::Ok;
    std::vector<std::string> basis;
    BasisStats stats;

    struct SeparationEntry {
        std::string monomial;
        std::vector<std::string> multiplicative;
        std::vector<std::string> nonmultiplicative;
    };
    std::vector<SeparationEntry> separations;

    int budget = 0;
    std::size_t partial_size = 0; // meaningful when status is NonTermination
};

/// Deterministic serialization; the structured form has stable key names
/// and is byte-identical for identical reports.
std::string emit_report(const RunReport& report, ReportFormat format);

std::string_view run_status_name(RunStatus status);

} // namespace invobase

#endif
