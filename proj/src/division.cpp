#include "invobase/division.hpp"

#include <algorithm>

#include "invobase/errors.hpp"

namespace invobase {

std::vector<std::size_t> Separation::multiplicative() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> Separation::nonmultiplicative() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (!mask_[i]) out.push_back(i);
    return out;
}

std::optional<DivisionKind> division_kind_from_name(std::string_view name) {
    if (name == "thomas") return DivisionKind::Thomas;
    if (name == "janet") return DivisionKind::Janet;
    if (name == "pommaret") return DivisionKind::Pommaret;
    if (name == "table") return DivisionKind::Table;
    return std::nullopt;
}

std::string_view division_kind_name(DivisionKind kind) {
    switch (kind) {
        case DivisionKind::Thomas: return "thomas";
        case DivisionKind::Janet: return "janet";
        case DivisionKind::Pommaret: return "pommaret";
        case DivisionKind::Table: return "table";
    }
    return "?";
}

Division Division::table(SeparationTable table) {
    Division d(DivisionKind::Table);
    d.table_ = std::make_shared<const SeparationTable>(std::move(table));
    return d;
}

const SeparationTable& Division::table() const {
    if (!table_) throw FixtureError("division carries no separation table");
    return *table_;
}

namespace {

void require_member(const Monomial& u, const std::vector<Monomial>& U) {
    if (std::find(U.begin(), U.end(), u) == U.end())
        throw InputError("monomial is not a member of the reference set");
}

std::vector<bool> thomas_mask(const Monomial& u, const std::vector<Monomial>& U) {
    const std::size_t n = u.arity();
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) {
        int h = 0;
        for (const Monomial& v : U) h = std::max(h, v.exponent(i));
        mask[i] = (u.exponent(i) == h);
    }
    return mask;
}

std::vector<bool> janet_mask(const Monomial& u, const std::vector<Monomial>& U) {
    const std::size_t n = u.arity();
    std::vector<bool> mask(n);
    // Narrow the group position by position: after handling x_i only the
    // elements agreeing with u on the first i exponents stay.
    std::vector<const Monomial*> group;
    group.reserve(U.size());
    for (const Monomial& v : U) group.push_back(&v);
    for (std::size_t i = 0; i < n; ++i) {
        int maxd = 0;
        for (const Monomial* v : group) maxd = std::max(maxd, v->exponent(i));
        mask[i] = (u.exponent(i) == maxd);
        std::erase_if(group, [&](const Monomial* v) {
            return v->exponent(i) != u.exponent(i);
        });
    }
    return mask;
}

std::vector<bool> pommaret_mask(const Monomial& u) {
    const std::size_t n = u.arity();
    std::vector<bool> mask(n, true);
    if (const auto k = u.trailing_variable()) {
        for (std::size_t i = 0; i < *k; ++i) mask[i] = false;
    }
    return mask;
}

std::vector<bool> table_mask(const SeparationTable& table, const Monomial& u) {
    if (const auto it = table.entries.find(u); it != table.entries.end()) {
        if (it->second.size() != u.arity())
            throw FixtureError("separation table entry has the wrong arity");
        return it->second;
    }
    if (table.fallback) {
        if (table.fallback->size() != u.arity())
            throw FixtureError("separation table fallback has the wrong arity");
        return *table.fallback;
    }
    throw FixtureError("separation table has no entry for the queried monomial");
}

} // namespace

bool involutive_divides_with(const Monomial& u, const Separation& sep, const Monomial& w) {
    if (u.arity() != w.arity())
        throw DimensionError("involutive divisibility over mismatched arities");
    for (std::size_t i = 0; i < u.arity(); ++i) {
        const int d = w.exponent(i) - u.exponent(i);
        if (d < 0) return false;
        if (d > 0 && !sep.is_multiplicative(i)) return false;
    }
    return true;
}

Separation separation(const Division& div, const Monomial& u,
                      const std::vector<Monomial>& U) {
    switch (div.kind()) {
        case DivisionKind::Thomas:
            require_member(u, U);
            return Separation(thomas_mask(u, U));
        case DivisionKind::Janet:
            require_member(u, U);
            return Separation(janet_mask(u, U));
        case DivisionKind::Pommaret:
            return Separation(pommaret_mask(u));
        case DivisionKind::Table:
            return Separation(table_mask(div.table(), u));
    }
    throw InputError("unknown division kind");
}

std::vector<Separation> separations(const Division& div, const std::vector<Monomial>& U) {
    std::vector<Separation> out;
    out.reserve(U.size());
    for (const Monomial& u : U) out.push_back(separation(div, u, U));
    return out;
}

bool involutive_divides(const Division& div, const Monomial& u,
                        const std::vector<Monomial>& U, const Monomial& w) {
    return involutive_divides_with(u, separation(div, u, U), w);
}

std::optional<Monomial> find_involutive_divisor(const Division& div,
                                                const std::vector<Monomial>& U,
                                                const Monomial& w) {
    const auto seps = separations(div, U);
    if (const auto i = find_involutive_divisor_index(U, seps, w)) return U[*i];
    return std::nullopt;
}

std::optional<std::size_t> find_involutive_divisor_index(
    const std::vector<Monomial>& U, const std::vector<Separation>& seps,
    const Monomial& w) {
    for (std::size_t i = 0; i < U.size(); ++i)
        if (involutive_divides_with(U[i], seps[i], w)) return i;
    return std::nullopt;
}

bool is_monomial_autoreduced(const Division& div, const std::vector<Monomial>& U) {
    const auto seps = separations(div, U);
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = 0; j < U.size(); ++j)
            if (i != j && U[i] != U[j] && involutive_divides_with(U[j], seps[j], U[i]))
                return false;
    return true;
}

} // namespace invobase
