#ifndef INVOBASE_TESTS_SUPPORT_HPP
#define INVOBASE_TESTS_SUPPORT_HPP

// Helpers shared by the test suites: readable constructors on top of the
// parser plus deterministic random generators.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "invobase/basis.hpp"
#include "invobase/completion.hpp"
#include "invobase/division.hpp"
#include "invobase/errors.hpp"
#include "invobase/monomial.hpp"
#include "invobase/ordering.hpp"
#include "invobase/polynomial.hpp"
#include "invobase/reduction.hpp"
#include "invobase/sysio.hpp"

namespace testsupport {

using namespace invobase;

inline MonomialOrdering ord_of(const VarTable& vars, OrderKind kind) {
    return MonomialOrdering(kind, vars.arity());
}

inline Polynomial poly(const VarTable& vars, const MonomialOrdering& ord,
                       const std::string& text) {
    return parse_polynomial(text, vars, ord);
}

inline std::vector<Polynomial> polys(const VarTable& vars, const MonomialOrdering& ord,
                                     const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(poly(vars, ord, t));
    return out;
}

/// Parses a single monomial like "x*y^2"; "1" gives the unit.
inline Monomial mono(const VarTable& vars, const std::string& text) {
    const MonomialOrdering ord(OrderKind::DegRevLex, vars.arity());
    const Polynomial p = parse_polynomial(text, vars, ord);
    if (p.size() != 1 || !(p.terms()[0].coeff == 1))
        throw InputError("not a monomial: " + text);
    return p.terms()[0].mono;
}

inline std::vector<Monomial> monos(const VarTable& vars,
                                   const std::vector<std::string>& texts) {
    std::vector<Monomial> out;
    for (const auto& t : texts) out.push_back(mono(vars, t));
    return out;
}

inline std::vector<std::size_t> mult_of(const Division& div, const VarTable& vars,
                                        const std::vector<Monomial>& U,
                                        const std::string& u) {
    return separation(div, mono(vars, u), U).multiplicative();
}

inline std::vector<std::size_t> nonmult_of(const Division& div, const VarTable& vars,
                                           const std::vector<Monomial>& U,
                                           const std::string& u) {
    return separation(div, mono(vars, u), U).nonmultiplicative();
}

/// The three-variable table fixture: separations given explicitly for
/// 1, x, y, z; everything of degree two or more has no multiplicative
/// variables at all.
inline Division counterexample_table() {
    SeparationTable t;
    t.entries[Monomial({0, 0, 0})] = {true, true, true};
    t.entries[Monomial({1, 0, 0})] = {true, false, true};   // x: {x,z}
    t.entries[Monomial({0, 1, 0})] = {true, true, false};   // y: {x,y}
    t.entries[Monomial({0, 0, 1})] = {false, true, true};   // z: {y,z}
    t.fallback = std::vector<bool>{false, false, false};
    return Division::table(std::move(t));
}

struct Gen {
    std::mt19937 rng;

    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Monomial monomial(std::size_t arity, int maxdeg) {
        std::vector<int> e(arity, 0);
        int budget = uniform(0, maxdeg);
        for (int d = 0; d < budget; ++d)
            ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))];
        return Monomial(std::move(e));
    }

    std::vector<Monomial> monomial_set(std::size_t arity, int maxdeg, std::size_t maxcount) {
        std::vector<Monomial> out;
        const std::size_t count = 1 + static_cast<std::size_t>(uniform(0, static_cast<int>(maxcount) - 1));
        while (out.size() < count) {
            Monomial m = monomial(arity, maxdeg);
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
        }
        return out;
    }

    Rational rational(int magnitude = 9) {
        int num = uniform(-magnitude, magnitude);
        int den = uniform(1, magnitude);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    Rational big_rational(int digits = 40) {
        std::string num = uniform(0, 1) ? "-" : "";
        num += std::to_string(uniform(1, 9));
        for (int i = 1; i < digits; ++i) num += std::to_string(uniform(0, 9));
        std::string den = std::to_string(uniform(1, 9));
        for (int i = 1; i < digits; ++i) den += std::to_string(uniform(0, 9));
        Rational q{mpz_class(num), mpz_class(den)};
        q.canonicalize();
        return q;
    }

    Polynomial polynomial(const MonomialOrdering& ord, int maxdeg, int maxterms,
                          bool allow_zero = false) {
        std::vector<Term> raw;
        const int nterms = uniform(allow_zero ? 0 : 1, maxterms);
        for (int t = 0; t < nterms; ++t) {
            int c = uniform(-3, 3);
            if (c == 0) c = 1;
            raw.push_back(Term{Rational(c), monomial(ord.arity(), maxdeg)});
        }
        return canonicalize(std::move(raw), ord);
    }

    std::vector<Polynomial> system(const MonomialOrdering& ord, int maxdeg, int maxterms,
                                   int maxgens) {
        std::vector<Polynomial> out;
        const int gens = uniform(1, maxgens);
        for (int g = 0; g < gens; ++g) {
            Polynomial p = polynomial(ord, maxdeg, maxterms);
            if (!p.is_zero()) out.push_back(std::move(p));
        }
        if (out.empty()) out.push_back(polynomial(ord, maxdeg, maxterms));
        return out;
    }
};

/// Involutive normal form with a randomized reduction strategy; used as the
/// independent check of normal-form uniqueness. At every step a random
/// reducible (term, reducer) pair is eliminated.
inline Polynomial normal_form_random_strategy(const Polynomial& p,
                                              const std::vector<Polynomial>& F,
                                              const Division& div,
                                              const MonomialOrdering& ord,
                                              std::mt19937& rng) {
    const std::vector<Monomial> lms = leading_monomials(F);
    const auto seps = separations(div, lms);
    Polynomial h = p;
    for (;;) {
        struct Hit {
            std::size_t term;
            std::size_t reducer;
        };
        std::vector<Hit> hits;
        for (std::size_t t = 0; t < h.size(); ++t)
            for (std::size_t f = 0; f < F.size(); ++f)
                if (involutive_divides_with(leading_monomial(F[f]), seps[f],
                                            h.terms()[t].mono))
                    hits.push_back({t, f});
        if (hits.empty()) return h;
        const Hit pick = hits[std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(rng)];
        const Polynomial& f = F[pick.reducer];
        const Term& t = h.terms()[pick.term];
        const Monomial shift = *monomial_divides(leading_monomial(f), t.mono);
        h = subtract_scaled(h, t.coeff / leading_coefficient(f), shift, f, ord);
    }
}

inline std::vector<std::string> format_all(const std::vector<Polynomial>& ps,
                                           const VarTable& vars) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(format_polynomial(p, vars));
    return out;
}

} // namespace testsupport

#endif
