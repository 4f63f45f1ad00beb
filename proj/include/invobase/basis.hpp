#ifndef INVOBASE_BASIS_HPP
#define INVOBASE_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "invobase/completion.hpp"
#include "invobase/division.hpp"
#include "invobase/ordering.hpp"
#include "invobase/polynomial.hpp"
#include "invobase/reduction.hpp"

namespace invobase {

/// Bookkeeping record of the basis loop: a basis member, the leading
/// monomial of the generator whose non-multiplicative prolongation produced
/// it (its own leading monomial when there is no such predecessor), and the
/// variables already used to prolong it.
struct Triple {
    Polynomial poly;
    Monomial ancestor_lm;
    std::vector<bool> processed; // per variable index
    std::uint64_t seq = 0;       // insertion order, used for tie-breaking
};

struct BasisOptions {
    Division division = Division::janet();
    MonomialOrdering ordering{OrderKind::DegRevLex, 0};
    CompletionBudget budget{};
    bool criterion_enabled = true;
};

struct BasisStats {
    std::uint64_t prolongations_examined = 0;
    std::uint64_t criterion_skips = 0;
    std::uint64_t nf_calls = 0;
    std::uint64_t zero_reductions = 0;
    std::size_t basis_size = 0;
};

struct BasisResult {
    RunStatus status = RunStatus::Ok;
    /// Monic, sorted ascending by leading monomial (partial on NonTermination).
    std::vector<Polynomial> basis;
    BasisStats stats;
    /// Leading monomials of kept reduction results, in addition order.
    std::vector<Monomial> added_lms;
    /// (leading monomial, variable) pairs in examination order.
    std::vector<std::pair<Monomial, std::size_t>> prolongations;
    /// Leading monomials that left the basis during autoreduction.
    std::vector<Monomial> retired_lms;
    /// Set when a retired leading monomial showed up again (never expected).
    bool lm_regrowth_detected = false;
};

/// Completion-style computation of an involutive basis: conventional
/// autoreduction, then treatment of non-multiplicative prolongations in
/// ascending order with the lcm-based criterion deciding which normal forms
/// are provably zero. The result is an involutively autoreduced monic basis
/// of Id(F), hence also a Groebner basis. Divergence (possible for Pommaret)
/// is reported as NonTermination once a kept leading monomial exceeds the
/// degree budget.
BasisResult involutive_basis(const std::vector<Polynomial>& F, const BasisOptions& opts);

/// True iff G is involutively autoreduced and every non-multiplicative
/// prolongation of every element has involutive normal form zero.
bool is_involutive_basis(const std::vector<Polynomial>& G, const Division& div,
                         const MonomialOrdering& ord);

struct GroebnerCompletionResult {
    RunStatus status = RunStatus::Ok;
    std::vector<Polynomial> basis;
    std::vector<Monomial> added_lms;
};

/// Builds an involutive basis along the second route: reduced Groebner
/// basis first, then completion by non-multiplicative prolongations and a
/// final involutive interreduction of the tails.
GroebnerCompletionResult involutive_basis_from_groebner(const std::vector<Polynomial>& F,
                                                        const Division& div,
                                                        const MonomialOrdering& ord,
                                                        CompletionBudget budget);

/// Membership via NF_L(p, G) = 0. G must pass is_involutive_basis
/// (InputError otherwise).
bool ideal_member(const Polynomial& p, const std::vector<Polynomial>& G,
                  const Division& div, const MonomialOrdering& ord);

/// Groebner property check: every pairwise S-polynomial conventionally
/// reduces to zero modulo G.
bool verify_groebner(const std::vector<Polynomial>& G, const MonomialOrdering& ord);

} // namespace invobase

#endif
