#ifndef INVOBASE_DIVISION_HPP
#define INVOBASE_DIVISION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "invobase/monomial.hpp"

namespace invobase {

/// Split of the variables of one monomial into multiplicative and
/// non-multiplicative ones; the two sets are disjoint and cover everything.
class Separation {
public:
    explicit Separation(std::vector<bool> multiplicative_mask)
        : mask_(std::move(multiplicative_mask)) {}

    std::size_t arity() const noexcept { return mask_.size(); }
    bool is_multiplicative(std::size_t var) const { return mask_[var]; }

    std::vector<std::size_t> multiplicative() const;
    std::vector<std::size_t> nonmultiplicative() const;

    bool operator==(const Separation&) const = default;

private:
    std::vector<bool> mask_;
};

enum class DivisionKind { Thomas, Janet, Pommaret, Table };

std::optional<DivisionKind> division_kind_from_name(std::string_view name);
std::string_view division_kind_name(DivisionKind kind);

/// Explicit per-monomial separations, used as a test fixture. Monomials
/// without an entry fall back to `fallback` when one is configured.
struct SeparationTable {
    std::unordered_map<Monomial, std::vector<bool>, MonomialHash> entries;
    std::optional<std::vector<bool>> fallback;
};

/// Involutive division strategy. Thomas, Janet and Pommaret are the three
/// classical separations; Table carries an explicit mapping.
class Division {
public:
    static Division thomas() { return Division(DivisionKind::Thomas); }
    static Division janet() { return Division(DivisionKind::Janet); }
    static Division pommaret() { return Division(DivisionKind::Pommaret); }
    static Division table(SeparationTable table);

    DivisionKind kind() const noexcept { return kind_; }

    /// Thomas and Janet are set-relative and also noetherian; Pommaret is
    /// determined by the monomial alone. All three are continuous; a Table
    /// division carries no such guarantee.
    bool is_continuous() const noexcept { return kind_ != DivisionKind::Table; }
    bool is_noetherian() const noexcept {
        return kind_ == DivisionKind::Thomas || kind_ == DivisionKind::Janet;
    }

    const SeparationTable& table() const;

private:
    explicit Division(DivisionKind kind) : kind_(kind) {}

    DivisionKind kind_;
    std::shared_ptr<const SeparationTable> table_;
};

/// Multiplicative/non-multiplicative split of u within the finite set U.
///
///   Thomas:   x_i multiplicative iff deg_i(u) = max{deg_i(v) : v in U};
///   Janet:    x_i multiplicative iff deg_i(u) is maximal within the group
///             of elements agreeing with u on the first i-1 exponents;
///   Pommaret: for trailing variable x_k of u, multiplicative = {x_j : j >= k};
///             all variables are multiplicative for u = 1.
///
/// Thomas and Janet require u to be a member of U (InputError otherwise);
/// Pommaret and Table ignore U. A Table without an entry for u and without
/// a fallback throws FixtureError.
Separation separation(const Division& div, const Monomial& u,
                      const std::vector<Monomial>& U);

/// Separations of every element of U, aligned with U.
std::vector<Separation> separations(const Division& div, const std::vector<Monomial>& U);

/// True iff u divides w and the quotient uses only variables that are
/// multiplicative for u within U.
bool involutive_divides(const Division& div, const Monomial& u,
                        const std::vector<Monomial>& U, const Monomial& w);

/// Same test against a separation that was computed beforehand.
bool involutive_divides_with(const Monomial& u, const Separation& sep, const Monomial& w);

/// First element of U (in storage order) that involutively divides w.
/// On an autoreduced U the divisor is unique, so the scan order does not
/// matter; callers that care keep U sorted ascending under their ordering.
std::optional<Monomial> find_involutive_divisor(const Division& div,
                                                const std::vector<Monomial>& U,
                                                const Monomial& w);

/// Index variant working from precomputed separations (aligned with U).
std::optional<std::size_t> find_involutive_divisor_index(
    const std::vector<Monomial>& U, const std::vector<Separation>& seps,
    const Monomial& w);

/// True iff no element of U is involutively divided by a different element.
bool is_monomial_autoreduced(const Division& div, const std::vector<Monomial>& U);

} // namespace invobase

#endif
