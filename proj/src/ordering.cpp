#include "invobase/ordering.hpp"

#include "invobase/errors.hpp"

namespace invobase {

std::optional<OrderKind> order_kind_from_name(std::string_view name) {
    if (name == "lex") return OrderKind::Lex;
    if (name == "deglex") return OrderKind::DegLex;
    if (name == "degrevlex") return OrderKind::DegRevLex;
    return std::nullopt;
}

std::string_view order_kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegLex: return "deglex";
        case OrderKind::DegRevLex: return "degrevlex";
    }
    return "?";
}

namespace {

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
    for (std::size_t i = 0; i < u.arity(); ++i) {
        if (u.exponent(i) != v.exponent(i))
            return u.exponent(i) <=> v.exponent(i);
    }
    return std::strong_ordering::equal;
}

std::strong_ordering revlex_tiebreak(const Monomial& u, const Monomial& v) {
    // Last nonzero entry of exp(u) - exp(v): negative means u greater.
    for (std::size_t i = u.arity(); i-- > 0;) {
        const int d = u.exponent(i) - v.exponent(i);
        if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering MonomialOrdering::compare(const Monomial& u, const Monomial& v) const {
    if (u.arity() != arity_ || v.arity() != arity_)
        throw DimensionError("monomial arity does not match the ordering");
    switch (kind_) {
        case OrderKind::Lex:
            return lex_compare(u, v);
        case OrderKind::DegLex:
            if (u.degree() != v.degree()) return u.degree() <=> v.degree();
            return lex_compare(u, v);
        case OrderKind::DegRevLex:
            if (u.degree() != v.degree()) return u.degree() <=> v.degree();
            return revlex_tiebreak(u, v);
    }
    return std::strong_ordering::equal;
}

} // namespace invobase
