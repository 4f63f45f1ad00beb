#include "invobase/sysio.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "invobase/errors.hpp"

namespace invobase {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
    enum Kind { Int, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int column; // 1-based
};

std::vector<Token> tokenize(std::string_view text, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        const int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Int, std::string(text.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && is_ident_char(text[j])) ++j;
            out.push_back({Token::Var, std::string(text.substr(i, j - i)), col});
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Plus; break;
            case '-': kind = Token::Minus; break;
            case '*': kind = Token::Star; break;
            case '^': kind = Token::Caret; break;
            case '/': kind = Token::Slash; break;
            case '(': kind = Token::LParen; break;
            case ')': kind = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({kind, std::string(1, c), col});
        ++i;
    }
    out.push_back({Token::End, "", static_cast<int>(text.size()) + 1});
    return out;
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := '-' factor | atom ['^' INT]
// atom   := INT ['/' INT] | VAR | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::vector<Token> tokens, const VarTable& vars,
               const MonomialOrdering& ord, int line)
        : toks_(std::move(tokens)), vars_(vars), ord_(ord), line_(line) {}

    Polynomial run() {
        if (peek().kind == Token::End) throw err("empty polynomial", peek());
        Polynomial p = expr();
        if (peek().kind != Token::End) {
            if (peek().kind == Token::Slash)
                throw err("division is only allowed between integer literals", peek());
            throw err("unexpected '" + peek().text + "'", peek());
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    ParseError err(const std::string& message, const Token& at) const {
        return ParseError(message, line_, at.column);
    }

    Polynomial expr() {
        bool negative = false;
        if (peek().kind == Token::Plus) {
            take();
        } else if (peek().kind == Token::Minus) {
            take();
            negative = true;
        }
        Polynomial acc = term();
        if (negative) acc = negated(acc);
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool minus = take().kind == Token::Minus;
            Polynomial rhs = term();
            acc = minus ? subtract(acc, rhs, ord_) : add(acc, rhs, ord_);
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (peek().kind == Token::Star) {
            take();
            acc = multiplied(acc, factor(), ord_);
        }
        return acc;
    }

    Polynomial factor() {
        if (peek().kind == Token::Minus) {
            take();
            return negated(factor());
        }
        Polynomial base = atom();
        if (peek().kind == Token::Caret) {
            const Token& caret = take();
            if (peek().kind != Token::Int)
                throw err("exponent must be a positive integer", peek().kind == Token::End ? caret : peek());
            const Token& e = take();
            long value = 0;
            try {
                value = std::stol(e.text);
            } catch (const std::exception&) {
                throw err("exponent out of range", e);
            }
            if (value <= 0) throw err("exponent must be a positive integer", e);
            if (value > 100000) throw err("exponent out of range", e);
            Polynomial acc = base;
            for (long k = 1; k < value; ++k) acc = multiplied(acc, base, ord_);
            return acc;
        }
        return base;
    }

    Polynomial atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Int: {
                take();
                mpz_class num(t.text);
                if (peek().kind == Token::Slash) {
                    const Token& slash = take();
                    if (peek().kind != Token::Int)
                        throw err("division is only allowed between integer literals", slash);
                    const Token& d = take();
                    mpz_class den(d.text);
                    if (den == 0) throw err("zero denominator", d);
                    Rational q(num, den);
                    q.canonicalize();
                    return constant(q);
                }
                return constant(Rational(num));
            }
            case Token::Var: {
                take();
                const auto idx = vars_.index_of(t.text);
                if (!idx) throw err("unknown variable '" + t.text + "'", t);
                return canonicalize(
                    {Term{Rational(1), Monomial::variable(vars_.arity(), *idx)}}, ord_);
            }
            case Token::LParen: {
                take();
                Polynomial inner = expr();
                if (peek().kind != Token::RParen) throw err("expected ')'", peek());
                take();
                return inner;
            }
            default:
                throw err("expected a number, a variable or '('", t);
        }
    }

    Polynomial constant(const Rational& value) {
        return canonicalize({Term{value, Monomial::one(vars_.arity())}}, ord_);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const VarTable& vars_;
    const MonomialOrdering& ord_;
    int line_;
};

Polynomial parse_polynomial_line(std::string_view text, const VarTable& vars,
                                 const MonomialOrdering& ord, int line) {
    return PolyParser(tokenize(text, line), vars, ord, line).run();
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const VarTable& vars,
                            const MonomialOrdering& ord) {
    return parse_polynomial_line(text, vars, ord, 1);
}

SystemDocument parse_system(std::string_view text) {
    std::optional<VarTable> vars;
    std::optional<OrderKind> order;
    std::vector<std::string> poly_lines;
    std::vector<int> poly_linenos;

    int lineno = 0;
    std::size_t start = 0;
    bool more = !text.empty();
    while (more) {
        ++lineno;
        std::size_t nl = text.find('\n', start);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(start)
                                   : text.substr(start, nl - start);
        more = nl != std::string_view::npos;
        start = nl + 1;

        std::string_view content = raw.substr(0, std::min(raw.find('#'), raw.size()));
        const std::string line = trim(content);
        if (line.empty()) continue;

        const std::size_t colon = line.find(':');
        if (colon != std::string::npos) {
            if (!poly_lines.empty())
                throw ParseError("header after polynomials", lineno, 1);
            const std::string key = trim(line.substr(0, colon));
            const std::string value = trim(line.substr(colon + 1));
            if (key == "vars") {
                if (vars) throw ParseError("duplicate vars header", lineno, 1);
                std::vector<std::string> names;
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    const std::string name = trim(item);
                    if (name.empty())
                        throw ParseError("empty variable name", lineno, 1);
                    if (!is_ident_start(name[0]) ||
                        !std::all_of(name.begin(), name.end(), is_ident_char))
                        throw ParseError("invalid variable name '" + name + "'", lineno, 1);
                    if (std::find(names.begin(), names.end(), name) != names.end())
                        throw ParseError("duplicate variable '" + name + "'", lineno, 1);
                    names.push_back(name);
                }
                if (names.empty()) throw ParseError("vars header lists no variables", lineno, 1);
                vars = VarTable(std::move(names));
            } else if (key == "order") {
                if (order) throw ParseError("duplicate order header", lineno, 1);
                const auto kind = order_kind_from_name(value);
                if (!kind) throw ParseError("unknown ordering '" + value + "'", lineno, 1);
                order = *kind;
            } else {
                throw ParseError("unknown header '" + key + "'", lineno, 1);
            }
            continue;
        }

        if (!vars) throw ParseError("missing vars header", lineno, 1);
        poly_lines.push_back(line);
        poly_linenos.push_back(lineno);
    }

    if (!vars) throw ParseError("missing vars header", lineno == 0 ? 1 : lineno, 1);
    if (poly_lines.empty()) throw ParseError("no polynomials", lineno == 0 ? 1 : lineno, 1);

    SystemDocument doc{*vars, order.value_or(OrderKind::DegRevLex), {}};
    const MonomialOrdering ord = doc.ordering();
    for (std::size_t i = 0; i < poly_lines.size(); ++i)
        doc.polynomials.push_back(
            parse_polynomial_line(poly_lines[i], doc.vars, ord, poly_linenos[i]));
    return doc;
}

std::string format_monomial(const Monomial& m, const VarTable& vars) {
    if (m.is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string format_polynomial(const Polynomial& p, const VarTable& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : p.terms()) {
        const bool negative = t.coeff < 0;
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += format_monomial(t.mono, vars);
        }
    }
    return out;
}

std::string_view run_status_name(RunStatus status) {
    return status == RunStatus::Ok ? "ok" : "non_termination";
}

namespace {

nlohmann::json stats_to_json(const BasisStats& s) {
    return nlohmann::json{{"prolongations_examined", s.prolongations_examined},
                          {"criterion_skips", s.criterion_skips},
                          {"nf_calls", s.nf_calls},
                          {"zero_reductions", s.zero_reductions},
                          {"basis_size", s.basis_size}};
}

std::string join(const std::vector<std::string>& parts) {
    if (parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += parts[i];
    }
    return out;
}

} // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::json j;
        j["status"] = std::string(run_status_name(report.status));
        j["division"] = report.division;
        j["ordering"] = report.ordering;
        j["input"] = report.input;
        j["basis"] = report.basis;
        j["stats"] = stats_to_json(report.stats);
        j["budget"] = report.budget;
        j["partial_size"] = report.partial_size;
        nlohmann::json seps = nlohmann::json::array();
        for (const auto& row : report.separations) {
            seps.push_back({{"monomial", row.monomial},
                            {"multiplicative", row.multiplicative},
                            {"nonmultiplicative", row.nonmultiplicative}});
        }
        j["separations"] = seps;
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "division: " << report.division << "\n";
    out << "ordering: " << report.ordering << "\n";
    out << "status: " << run_status_name(report.status) << "\n";
    if (report.status == RunStatus::NonTermination) {
        out << "budget: " << report.budget << "\n";
        out << "partial size: " << report.partial_size << "\n";
    }
    if (!report.input.empty()) {
        out << "input (" << report.input.size() << "):\n";
        for (const auto& p : report.input) out << "  " << p << "\n";
    }
    if (!report.basis.empty()) {
        out << (report.status == RunStatus::Ok ? "basis (" : "partial basis (")
            << report.basis.size() << "):\n";
        for (const auto& p : report.basis) out << "  " << p << "\n";
    }
    if (!report.separations.empty()) {
        std::size_t w0 = 8, w1 = 14;
        std::vector<std::array<std::string, 3>> rows;
        for (const auto& row : report.separations) {
            rows.push_back({row.monomial, join(row.multiplicative),
                            join(row.nonmultiplicative)});
            w0 = std::max(w0, rows.back()[0].size());
            w1 = std::max(w1, rows.back()[1].size());
        }
        out << "separations:\n";
        out << "  " << std::string("monomial") << std::string(w0 - 8 + 2, ' ')
            << "multiplicative" << std::string(w1 - 14 + 2, ' ')
            << "nonmultiplicative\n";
        for (const auto& r : rows) {
            out << "  " << r[0] << std::string(w0 - r[0].size() + 2, ' ') << r[1]
                << std::string(w1 - r[1].size() + 2, ' ') << r[2] << "\n";
        }
    }
    out << "stats: prolongations_examined=" << report.stats.prolongations_examined
        << " criterion_skips=" << report.stats.criterion_skips
        << " nf_calls=" << report.stats.nf_calls
        << " zero_reductions=" << report.stats.zero_reductions
        << " basis_size=" << report.stats.basis_size << "\n";
    return out.str();
}

} // namespace invobase
