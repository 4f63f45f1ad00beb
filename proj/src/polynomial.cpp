#include "invobase/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "invobase/errors.hpp"

namespace invobase {

Polynomial canonicalize(std::vector<Term> raw, const MonomialOrdering& ord) {
    for (const Term& t : raw)
        if (t.mono.arity() != ord.arity())
            throw DimensionError("term arity does not match the ordering");

    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });

    std::vector<Term> out;
    out.reserve(raw.size());
    for (Term& t : raw) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    return Polynomial(std::move(out));
}

const Term& leading_term(const Polynomial& p) {
    if (p.is_zero()) throw InputError("zero polynomial has no leading term");
    return p.terms().front();
}

const Monomial& leading_monomial(const Polynomial& p) { return leading_term(p).mono; }

const Rational& leading_coefficient(const Polynomial& p) { return leading_term(p).coeff; }

namespace {

// Merge of two descending term sequences; rhs terms are transformed on the
// fly by `map`. Cancellations are dropped, so the result is canonical.
template <typename MapFn>
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs,
                              const MonomialOrdering& ord, MapFn map) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        Term mapped = map(rhs[j]);
        const auto cmp = ord.compare(lhs[i].mono, mapped.mono);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(lhs[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back(std::move(mapped));
            ++j;
        } else {
            Rational c = lhs[i].coeff + mapped.coeff;
            if (c != 0) out.push_back(Term{std::move(c), lhs[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < lhs.size(); ++i) out.push_back(lhs[i]);
    for (; j < rhs.size(); ++j) out.push_back(map(rhs[j]));
    return out;
}

} // namespace

Polynomial add(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord) {
    std::vector<Term> raw;
    raw.reserve(p.size() + q.size());
    for (const Term& t : p.terms()) raw.push_back(t);
    for (const Term& t : q.terms()) raw.push_back(t);
    return canonicalize(std::move(raw), ord);
}

Polynomial subtract(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord) {
    std::vector<Term> raw;
    raw.reserve(p.size() + q.size());
    for (const Term& t : p.terms()) raw.push_back(t);
    for (const Term& t : q.terms()) raw.push_back(Term{-t.coeff, t.mono});
    return canonicalize(std::move(raw), ord);
}

Polynomial negated(const Polynomial& p) {
    std::vector<Term> out = p.terms();
    for (Term& t : out) t.coeff = -t.coeff;
    return Polynomial(std::move(out));
}

Polynomial scaled(const Polynomial& p, const Rational& factor) {
    if (factor == 0) return Polynomial::zero();
    std::vector<Term> out = p.terms();
    for (Term& t : out) t.coeff *= factor;
    return Polynomial(std::move(out));
}

Polynomial term_multiplied(const Polynomial& p, const Term& t) {
    if (t.coeff == 0) return Polynomial::zero();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const Term& s : p.terms())
        out.push_back(Term{s.coeff * t.coeff, s.mono.times(t.mono)});
    return Polynomial(std::move(out));
}

Polynomial multiplied(const Polynomial& p, const Polynomial& q, const MonomialOrdering& ord) {
    std::vector<Term> raw;
    raw.reserve(p.size() * q.size());
    for (const Term& a : p.terms())
        for (const Term& b : q.terms())
            raw.push_back(Term{a.coeff * b.coeff, a.mono.times(b.mono)});
    return canonicalize(std::move(raw), ord);
}

Polynomial subtract_scaled(const Polynomial& h, const Rational& factor,
                           const Monomial& shift, const Polynomial& f,
                           const MonomialOrdering& ord) {
    return Polynomial(merge_terms(h.terms(), f.terms(), ord, [&](const Term& t) {
        return Term{-(t.coeff * factor), t.mono.times(shift)};
    }));
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational& lc = leading_coefficient(p);
    if (lc == 1) return p;
    return scaled(p, Rational(1) / lc);
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& polys) {
    std::vector<Monomial> out;
    out.reserve(polys.size());
    for (const Polynomial& p : polys) out.push_back(leading_monomial(p));
    return out;
}

} // namespace invobase
