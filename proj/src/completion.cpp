#include "invobase/completion.hpp"

#include <algorithm>

#include "invobase/errors.hpp"

namespace invobase {

CompletionBudget CompletionBudget::for_monomials(const std::vector<Monomial>& U) {
    int maxdeg = 0;
    for (const Monomial& u : U) maxdeg = std::max(maxdeg, u.degree());
    return CompletionBudget{std::max(30, 3 * maxdeg)};
}

bool is_locally_involutive(const Division& div, const std::vector<Monomial>& U) {
    const auto seps = separations(div, U);
    for (std::size_t i = 0; i < U.size(); ++i) {
        for (std::size_t x = 0; x < U[i].arity(); ++x) {
            if (seps[i].is_multiplicative(x)) continue;
            if (!find_involutive_divisor_index(U, seps, U[i].times_var(x)))
                return false;
        }
    }
    return true;
}

bool involutive_cone_member(const Division& div, const std::vector<Monomial>& U,
                            const Monomial& w) {
    const auto seps = separations(div, U);
    return find_involutive_divisor_index(U, seps, w).has_value();
}

namespace {

template <typename Fn>
void for_each_monomial_upto(std::size_t arity, int degree_bound, Fn fn) {
    std::vector<int> exps(arity, 0);
    // Odometer enumeration of all exponent vectors with total degree <= bound.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == arity) {
            for (int d = 0; d <= remaining; ++d) {
                exps[pos] = d;
                fn(Monomial(exps));
            }
            exps[pos] = 0;
            return;
        }
        for (int d = 0; d <= remaining; ++d) {
            exps[pos] = d;
            self(self, pos + 1, remaining - d);
        }
        exps[pos] = 0;
    };
    if (arity == 0) return;
    rec(rec, 0, degree_bound);
}

} // namespace

bool is_involutive_bounded(const Division& div, const std::vector<Monomial>& U,
                           int degree_bound) {
    if (U.empty()) return true;
    const auto seps = separations(div, U);
    bool ok = true;
    for_each_monomial_upto(U.front().arity(), degree_bound, [&](const Monomial& w) {
        if (!ok) return;
        const bool in_cone = std::any_of(U.begin(), U.end(), [&](const Monomial& u) {
            return monomial_divides(u, w).has_value();
        });
        if (in_cone && !find_involutive_divisor_index(U, seps, w)) ok = false;
    });
    return ok;
}

CompletionResult complete_monomial_set(const Division& div, std::vector<Monomial> U,
                                       const MonomialOrdering& ord,
                                       CompletionBudget budget) {
    if (!div.is_continuous())
        throw FixtureError("completion requires a continuous division");
    if (U.empty()) throw InputError("completion needs a nonempty monomial set");
    for (const Monomial& u : U)
        if (u.degree() > budget.max_total_degree)
            throw InputError("budget is below the degree of the input set");

    // Keep the working set sorted ascending and free of duplicates.
    std::sort(U.begin(), U.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    U.erase(std::unique(U.begin(), U.end()), U.end());

    CompletionResult result;
    for (;;) {
        const auto seps = separations(div, U);
        struct Candidate {
            Monomial product;
            std::size_t source;
            std::size_t var;
        };
        std::optional<Candidate> best;
        for (std::size_t i = 0; i < U.size(); ++i) {
            for (std::size_t x = 0; x < U[i].arity(); ++x) {
                if (seps[i].is_multiplicative(x)) continue;
                Monomial prod = U[i].times_var(x);
                if (find_involutive_divisor_index(U, seps, prod)) continue;
                // Lowest product wins; ties prefer the lower source, then
                // the lower variable index. U is sorted, so index order is
                // order under ord.
                if (!best || ord.less(prod, best->product) ||
                    (prod == best->product &&
                     (i < best->source || (i == best->source && x < best->var)))) {
                    best = Candidate{std::move(prod), i, x};
                }
            }
        }
        if (!best) break;
        if (best->product.degree() > budget.max_total_degree) {
            result.status = RunStatus::NonTermination;
            break;
        }
        const auto pos = std::lower_bound(
            U.begin(), U.end(), best->product,
            [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
        U.insert(pos, best->product);
        result.added.push_back(best->product);
    }
    result.completed = std::move(U);
    return result;
}

} // namespace invobase
