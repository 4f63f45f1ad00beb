#ifndef INVOBASE_REDUCTION_HPP
#define INVOBASE_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "invobase/division.hpp"
#include "invobase/ordering.hpp"
#include "invobase/polynomial.hpp"

namespace invobase {

struct ReductionStep {
    std::size_t reducer;  // index into the reducer sequence
    Monomial eliminated;  // monomial removed at this step
    Term multiplier;      // the reducer was scaled by this term
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
};

/// Reduction engine against a fixed polynomial set. Reducers are kept
/// sorted ascending by leading monomial and their separations are computed
/// once from the whole leading-monomial set, which is what makes the
/// involutive reducibility test set-consistent.
class InvolutiveReducer {
public:
    /// Throws InputError if F contains a zero polynomial. When `ambient`
    /// is given, separations are computed over that leading set instead of
    /// lm(F); interreduction passes the full set here while reducing
    /// against the others.
    InvolutiveReducer(std::vector<Polynomial> F, Division div, MonomialOrdering ord,
                      std::optional<std::vector<Monomial>> ambient = std::nullopt);

    const std::vector<Polynomial>& reducers() const noexcept { return reducers_; }
    const std::vector<Monomial>& leading_set() const noexcept { return lms_; }

    /// Index of the reducer whose leading monomial involutively divides w,
    /// scanning ascending; absent when w is involutively irreducible.
    std::optional<std::size_t> find_reducer(const Monomial& w) const;

    /// Involutive normal form of p: eliminates the highest reducible term
    /// first, always picking the lowest eligible reducer.
    Polynomial normal_form(const Polynomial& p, ReductionTrace* trace = nullptr) const;

private:
    std::vector<Polynomial> reducers_;
    std::vector<Monomial> lms_;         // unique leading monomials
    std::vector<Separation> seps_;      // aligned with lms_
    std::vector<std::size_t> lm_index_; // reducer -> position in lms_
    Division div_;
    MonomialOrdering ord_;
};

/// NF_L(p, F): no term of the result is involutively divisible by any
/// leading monomial of F. Unique whenever F is involutively autoreduced.
Polynomial involutive_normal_form(const Polynomial& p, const std::vector<Polynomial>& F,
                                  const Division& div, const MonomialOrdering& ord,
                                  ReductionTrace* trace = nullptr);

/// Involutive interreduction: the result generates the same ideal, its
/// leading monomials are involutively autoreduced, no tail term lies in the
/// involutive cone of the leading set, and every element is monic. Zero
/// inputs and zero reduction results are dropped.
std::vector<Polynomial> involutive_autoreduce(std::vector<Polynomial> F,
                                              const Division& div,
                                              const MonomialOrdering& ord);

/// Conventional full normal form with the same deterministic choices.
Polynomial conventional_normal_form(const Polynomial& p, const std::vector<Polynomial>& F,
                                    const MonomialOrdering& ord,
                                    ReductionTrace* trace = nullptr);

/// Conventional interreduction; output is monic and pairwise fully reduced.
std::vector<Polynomial> conventional_autoreduce(std::vector<Polynomial> F,
                                                const MonomialOrdering& ord);

/// S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g. Throws InputError on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrdering& ord);

/// The unique reduced monic Groebner basis of Id(F). Plain Buchberger with
/// the coprime-leading-monomial skip; serves as the verification oracle.
std::vector<Polynomial> buchberger_reduced_basis(std::vector<Polynomial> F,
                                                 const MonomialOrdering& ord);

} // namespace invobase

#endif
