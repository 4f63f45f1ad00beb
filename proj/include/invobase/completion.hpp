#ifndef INVOBASE_COMPLETION_HPP
#define INVOBASE_COMPLETION_HPP

#include <vector>

#include "invobase/division.hpp"
#include "invobase/monomial.hpp"
#include "invobase/ordering.hpp"

namespace invobase {

enum class RunStatus { Ok, NonTermination };

/// Degree cap that turns a diverging completion into a clean failure
/// (Pommaret is not noetherian).
struct CompletionBudget {
    int max_total_degree = 30;

    /// Default policy: max(30, 3 * largest input total degree).
    static CompletionBudget for_monomials(const std::vector<Monomial>& U);
};

struct CompletionResult {
    RunStatus status = RunStatus::Ok;
    /// Final set on success, the partial set when the budget was exhausted.
    std::vector<Monomial> completed;
    /// Prolongations appended, in addition order.
    std::vector<Monomial> added;
};

/// True iff every non-multiplicative prolongation u*x of every u in U has
/// an involutive divisor in U.
bool is_locally_involutive(const Division& div, const std::vector<Monomial>& U);

/// True iff some element of U involutively divides w.
bool involutive_cone_member(const Division& div, const std::vector<Monomial>& U,
                            const Monomial& w);

/// Checks that every multiple of an element of U with total degree at most
/// degree_bound lies in the involutive cone of U.
bool is_involutive_bounded(const Division& div, const std::vector<Monomial>& U,
                           int degree_bound);

/// Grows U by its lowest unresolved non-multiplicative prolongation until
/// the set is locally involutive, giving the minimal completion. Requires a
/// continuous division (Table is refused with FixtureError) and a nonempty U.
CompletionResult complete_monomial_set(const Division& div, std::vector<Monomial> U,
                                       const MonomialOrdering& ord,
                                       CompletionBudget budget);

} // namespace invobase

#endif
