#ifndef INVOBASE_ORDERING_HPP
#define INVOBASE_ORDERING_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

#include "invobase/monomial.hpp"

namespace invobase {

enum class OrderKind { Lex, DegLex, DegRevLex };

std::optional<OrderKind> order_kind_from_name(std::string_view name);
std::string_view order_kind_name(OrderKind kind);

/// Admissible monomial ordering over a fixed arity. Variable precedence is
/// positional: position 0 is the greatest variable.
///
///   lex        first differing exponent decides, higher wins;
///   deglex     total degree first, ties broken by lex;
///   degrevlex  total degree first; on ties the last nonzero entry of
///              exp(u) - exp(v) decides, negative meaning u greater.
class MonomialOrdering {
public:
    MonomialOrdering(OrderKind kind, std::size_t arity)
        : kind_(kind), arity_(arity) {}

    OrderKind kind() const noexcept { return kind_; }
    std::size_t arity() const noexcept { return arity_; }

    /// Throws DimensionError on arity mismatch.
    std::strong_ordering compare(const Monomial& u, const Monomial& v) const;

    bool less(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }
    bool greater(const Monomial& u, const Monomial& v) const {
        return compare(u, v) == std::strong_ordering::greater;
    }

    bool operator==(const MonomialOrdering&) const = default;

private:
    OrderKind kind_;
    std::size_t arity_;
};

inline std::strong_ordering compare_monomials(const MonomialOrdering& ord,
                                              const Monomial& u,
                                              const Monomial& v) {
    return ord.compare(u, v);
}

} // namespace invobase

#endif
