#ifndef INVOBASE_POLYNOMIAL_HPP
#define INVOBASE_POLYNOMIAL_HPP

#include <vector>

#include "invobase/monomial.hpp"
#include "invobase/ordering.hpp"
#include "invobase/rational.hpp"

namespace invobase {

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term&) const = default;
};

/// Canonical polynomial: terms with nonzero coefficients, strictly
/// descending under the ordering used to build it. Empty means zero.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool operator==(const Polynomial&) const = default;

private:
    explicit Polynomial(std::vector<Term> sorted_terms)
        : terms_(std::move(sorted_terms)) {}

    friend Polynomial canonicalize(std::vector<Term> raw, const MonomialOrdering& ord);
    friend Polynomial subtract_scaled(const Polynomial& h, const Rational& factor,
                                      const Monomial& shift, const Polynomial& f,
                                      const MonomialOrdering& ord);
    friend Polynomial term_multiplied(const Polynomial& p, const Term& t);
    friend Polynomial scaled(const Polynomial& p, const Rational& factor);
    friend Polynomial negated(const Polynomial& p);

    std::vector<Term> terms_;
};

/// Merges duplicate monomials, drops zero coefficients and sorts terms
/// strictly descending under ord. Purely syntactic normalization.
Polynomial canonicalize(std::vector<Term> raw, const MonomialOrdering& ord);

/// Leading data; all throw InputError on the zero polynomial.
const Term& leading_term(const Polynomial& p);
const Monomial& leading_monomial(const Polynomial& p);
const Rational& leading_coefficient(const Polynomial& p);

Polynomial add(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord);
Polynomial subtract(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord);
Polynomial negated(const Polynomial& p);
Polynomial scaled(const Polynomial& p, const Rational& factor);

/// p * t. Multiplication compatibility of admissible orderings keeps the
/// term sequence sorted, so no re-sort happens.
Polynomial term_multiplied(const Polynomial& p, const Term& t);

Polynomial multiplied(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord);

/// h - factor * x^shift * f, the elementary reduction step.
Polynomial subtract_scaled(const Polynomial& h, const Rational& factor,
                           const Monomial& shift, const Polynomial& f,
                           const MonomialOrdering& ord);

/// Divides by the leading coefficient; zero stays zero.
Polynomial monic(const Polynomial& p);

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& polys);

} // namespace invobase

#endif
