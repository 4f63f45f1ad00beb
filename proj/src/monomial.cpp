#include "invobase/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "invobase/errors.hpp"

namespace invobase {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("variable table needs at least one name");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second)
            throw InputError("duplicate variable '" + n + "'");
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    for (int e : exponents_) {
        if (e < 0) throw InputError("negative exponent in monomial");
        degree_ += e;
    }
}

Monomial Monomial::one(std::size_t arity) {
    return Monomial(std::vector<int>(arity, 0));
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, int power) {
    if (index >= arity) throw DimensionError("variable index out of range");
    if (power <= 0) throw InputError("variable power must be positive");
    std::vector<int> e(arity, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

std::optional<std::size_t> Monomial::trailing_variable() const {
    for (std::size_t i = exponents_.size(); i-- > 0;)
        if (exponents_[i] > 0) return i;
    return std::nullopt;
}

Monomial Monomial::times(const Monomial& other) const {
    if (arity() != other.arity())
        throw DimensionError("monomial product over mismatched arities");
    Monomial out;
    out.exponents_.resize(arity());
    for (std::size_t i = 0; i < arity(); ++i)
        out.exponents_[i] = exponents_[i] + other.exponents_[i];
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::times_var(std::size_t index) const {
    if (index >= arity()) throw DimensionError("variable index out of range");
    Monomial out = *this;
    ++out.exponents_[index];
    ++out.degree_;
    return out;
}

std::optional<Monomial> monomial_divides(const Monomial& u, const Monomial& v) {
    if (u.arity() != v.arity())
        throw DimensionError("divisibility test over mismatched arities");
    Monomial q;
    std::vector<int> e(u.arity());
    for (std::size_t i = 0; i < u.arity(); ++i) {
        e[i] = v.exponent(i) - u.exponent(i);
        if (e[i] < 0) return std::nullopt;
    }
    return Monomial(std::move(e));
}

Monomial monomial_lcm(const Monomial& u, const Monomial& v) {
    if (u.arity() != v.arity())
        throw DimensionError("lcm over mismatched arities");
    std::vector<int> e(u.arity());
    for (std::size_t i = 0; i < u.arity(); ++i)
        e[i] = std::max(u.exponent(i), v.exponent(i));
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace invobase
