#ifndef INVOBASE_MONOMIAL_HPP
#define INVOBASE_MONOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invobase {

/// Ordered list of variable names. Position i holds the variable of
/// precedence rank i, i.e. declaration order means x1 > x2 > ... > xn.
class VarTable {
public:
    /// Throws InputError unless the names are nonempty, pairwise distinct
    /// and there is at least one of them.
    explicit VarTable(std::vector<std::string> names);

    std::size_t arity() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarTable&) const = default;

private:
    std::vector<std::string> names_;
};

/// Power product stored as a dense exponent vector.
class Monomial {
public:
    Monomial() = default; // unit over zero variables

    /// Throws InputError if any exponent is negative.
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(std::size_t arity);
    static Monomial variable(std::size_t arity, std::size_t index, int power = 1);

    std::size_t arity() const noexcept { return exponents_.size(); }
    int exponent(std::size_t i) const { return exponents_[i]; }
    const std::vector<int>& exponents() const noexcept { return exponents_; }
    int degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// Index of the least-precedence variable occurring in the monomial
    /// (the largest position with a positive exponent); nullopt for 1.
    std::optional<std::size_t> trailing_variable() const;

    Monomial times(const Monomial& other) const;
    Monomial times_var(std::size_t index) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Quotient v/u when u divides v componentwise, absent otherwise.
std::optional<Monomial> monomial_divides(const Monomial& u, const Monomial& v);

/// Componentwise maximum of the exponent vectors.
Monomial monomial_lcm(const Monomial& u, const Monomial& v);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

} // namespace invobase

#endif
