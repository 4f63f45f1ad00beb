#include "invobase/basis.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>

#include "invobase/errors.hpp"

namespace invobase {

namespace {

std::vector<Polynomial> polys_of(const std::vector<Triple>& triples) {
    std::vector<Polynomial> out;
    out.reserve(triples.size());
    for (const Triple& t : triples) out.push_back(t.poly);
    return out;
}

void sort_basis(std::vector<Polynomial>& basis, const MonomialOrdering& ord) {
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a), leading_monomial(b));
    });
}

} // namespace

BasisResult involutive_basis(const std::vector<Polynomial>& F, const BasisOptions& opts) {
    const Division& div = opts.division;
    const MonomialOrdering& ord = opts.ordering;
    if (!div.is_continuous())
        throw FixtureError("basis computation requires a continuous division");

    std::vector<Polynomial> nonzero;
    for (const Polynomial& f : F) {
        if (f.is_zero()) continue;
        // Re-sort the terms in case the caller built the input under a
        // different ordering.
        nonzero.push_back(canonicalize(f.terms(), ord));
    }
    if (nonzero.empty()) throw InputError("basis of an all-zero input");

    BasisResult result;
    BasisStats& stats = result.stats;

    std::vector<Polynomial> start = conventional_autoreduce(std::move(nonzero), ord);
    const std::size_t n = ord.arity();

    std::vector<Triple> triples;
    std::uint64_t next_seq = 0;
    for (Polynomial& g : start) {
        Monomial lm = leading_monomial(g);
        triples.push_back(Triple{std::move(g), std::move(lm),
                                 std::vector<bool>(n, false), next_seq++});
    }

    std::unordered_set<Monomial, MonomialHash> retired;

    // The leading set, separations and reducer only change when the basis
    // does, which lets runs of zero reductions and skips share them.
    std::vector<Monomial> lms;
    std::vector<Separation> seps;
    std::optional<InvolutiveReducer> reducer;
    const auto refresh_cache = [&]() {
        lms.clear();
        lms.reserve(triples.size());
        for (const Triple& t : triples) lms.push_back(leading_monomial(t.poly));
        seps = separations(div, lms);
        reducer.emplace(polys_of(triples), div, ord);
    };
    refresh_cache();

    for (;;) {

        // Normal strategy: lowest prolongation first; equal products go to
        // the triple that entered the set first.
        struct Choice {
            Monomial product;
            std::size_t triple;
            std::size_t var;
        };
        std::optional<Choice> pick;
        for (std::size_t i = 0; i < triples.size(); ++i) {
            for (std::size_t x = 0; x < n; ++x) {
                if (seps[i].is_multiplicative(x) || triples[i].processed[x]) continue;
                Monomial prod = lms[i].times_var(x);
                if (!pick || ord.less(prod, pick->product) ||
                    (prod == pick->product && triples[i].seq < triples[pick->triple].seq)) {
                    pick = Choice{std::move(prod), i, x};
                }
            }
        }
        if (!pick) break; // every prolongation handled: the set is involutive

        Triple& g = triples[pick->triple];
        g.processed[pick->var] = true;
        ++stats.prolongations_examined;
        result.prolongations.emplace_back(lms[pick->triple], pick->var);

        const auto divisor = find_involutive_divisor_index(lms, seps, pick->product);
        Monomial next_ancestor;
        if (divisor && opts.criterion_enabled) {
            // Chain criterion: the normal form is provably zero unless the
            // lcm of the two ancestors equals the prolongation itself.
            const bool chain =
                !(monomial_lcm(g.ancestor_lm, triples[*divisor].ancestor_lm) ==
                  pick->product);
            // Product criterion, the degenerate case where the divisor's
            // leading monomial is the prolongation variable itself, so the
            // leads are coprime.
            const bool product = lms[*divisor] == Monomial::variable(n, pick->var);
            if (chain || product) {
                ++stats.criterion_skips;
                continue;
            }
        }

        const Polynomial prolonged =
            term_multiplied(g.poly, Term{Rational(1), Monomial::variable(n, pick->var)});
        Polynomial h = reducer->normal_form(prolonged);
        ++stats.nf_calls;
        if (h.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        h = monic(h);
        // A surviving leading monomial continues its ancestral line; a
        // reduced one starts a fresh line.
        next_ancestor = divisor ? leading_monomial(h) : g.ancestor_lm;

        if (leading_monomial(h).degree() > opts.budget.max_total_degree) {
            result.status = RunStatus::NonTermination;
            break;
        }
        if (retired.contains(leading_monomial(h))) result.lm_regrowth_detected = true;
        result.added_lms.push_back(leading_monomial(h));

        // Involutive autoreduction of the enlarged set, then the triple
        // refresh: surviving leading monomials keep their processed sets and
        // have the ancestor replaced by its unique involutive divisor among
        // the new leading monomials; genuinely new ones start clean.
        struct Snapshot {
            Monomial lm;
            Monomial ancestor;
            std::vector<bool> processed;
            std::uint64_t seq;
        };
        std::vector<Snapshot> snapshot;
        snapshot.reserve(triples.size() + 1);
        for (const Triple& t : triples)
            snapshot.push_back({leading_monomial(t.poly), t.ancestor_lm, t.processed, t.seq});
        snapshot.push_back({leading_monomial(h), next_ancestor,
                            std::vector<bool>(n, false), next_seq++});

        std::vector<Polynomial> enlarged = polys_of(triples);
        enlarged.push_back(std::move(h));
        std::vector<Polynomial> reduced = involutive_autoreduce(std::move(enlarged), div, ord);

        std::vector<Monomial> new_lms = leading_monomials(reduced);
        const auto new_seps = separations(div, new_lms);
        for (const Snapshot& s : snapshot) {
            if (std::find(new_lms.begin(), new_lms.end(), s.lm) == new_lms.end())
                retired.insert(s.lm);
        }

        std::vector<Triple> next;
        next.reserve(reduced.size());
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            const Monomial& lm = new_lms[k];
            const auto match = std::find_if(snapshot.begin(), snapshot.end(),
                                            [&](const Snapshot& s) { return s.lm == lm; });
            if (match != snapshot.end()) {
                Monomial ancestor = match->ancestor;
                if (const auto d = find_involutive_divisor_index(new_lms, new_seps, ancestor))
                    ancestor = new_lms[*d];
                else
                    ancestor = lm;
                next.push_back(Triple{std::move(reduced[k]), std::move(ancestor),
                                      match->processed, match->seq});
            } else {
                if (retired.contains(lm)) result.lm_regrowth_detected = true;
                next.push_back(Triple{std::move(reduced[k]), lm,
                                      std::vector<bool>(n, false), next_seq++});
            }
        }
        triples = std::move(next);
        refresh_cache();
    }

    result.basis = polys_of(triples);
    sort_basis(result.basis, ord);
    stats.basis_size = result.basis.size();
    return result;
}

bool is_involutive_basis(const std::vector<Polynomial>& G, const Division& div,
                         const MonomialOrdering& ord) {
    if (G.empty()) return true;
    for (const Polynomial& g : G)
        if (g.is_zero()) return false;

    const std::vector<Monomial> lms = leading_monomials(G);
    for (std::size_t i = 0; i < lms.size(); ++i)
        for (std::size_t j = i + 1; j < lms.size(); ++j)
            if (lms[i] == lms[j]) return false;
    if (!is_monomial_autoreduced(div, lms)) return false;

    // No tail term may lie in the involutive cone of the leading set.
    const auto seps = separations(div, lms);
    for (const Polynomial& g : G) {
        const auto& terms = g.terms();
        for (std::size_t t = 1; t < terms.size(); ++t)
            if (find_involutive_divisor_index(lms, seps, terms[t].mono)) return false;
    }

    const InvolutiveReducer reducer(G, div, ord);
    const std::size_t n = ord.arity();
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Separation sep = separation(div, lms[i], lms);
        for (std::size_t x = 0; x < n; ++x) {
            if (sep.is_multiplicative(x)) continue;
            const Polynomial prolonged =
                term_multiplied(G[i], Term{Rational(1), Monomial::variable(n, x)});
            if (!reducer.normal_form(prolonged).is_zero()) return false;
        }
    }
    return true;
}

GroebnerCompletionResult involutive_basis_from_groebner(const std::vector<Polynomial>& F,
                                                        const Division& div,
                                                        const MonomialOrdering& ord,
                                                        CompletionBudget budget) {
    if (!div.is_continuous())
        throw FixtureError("basis completion requires a continuous division");

    GroebnerCompletionResult result;
    std::vector<Polynomial> work = buchberger_reduced_basis(F, ord);
    if (work.empty()) return result;
    const std::size_t n = ord.arity();

    for (;;) {
        const std::vector<Monomial> lms = leading_monomials(work);
        const auto seps = separations(div, lms);
        struct Choice {
            Monomial product;
            std::size_t source;
            std::size_t var;
        };
        std::optional<Choice> pick;
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (std::size_t x = 0; x < n; ++x) {
                if (seps[i].is_multiplicative(x)) continue;
                Monomial prod = lms[i].times_var(x);
                if (find_involutive_divisor_index(lms, seps, prod)) continue;
                if (!pick || ord.less(prod, pick->product) ||
                    (prod == pick->product &&
                     (i < pick->source || (i == pick->source && x < pick->var)))) {
                    pick = Choice{std::move(prod), i, x};
                }
            }
        }
        if (!pick) break;
        if (pick->product.degree() > budget.max_total_degree) {
            result.status = RunStatus::NonTermination;
            break;
        }
        Polynomial prolonged = term_multiplied(
            work[pick->source], Term{Rational(1), Monomial::variable(n, pick->var)});
        const auto at = std::lower_bound(
            work.begin(), work.end(), prolonged,
            [&](const Polynomial& a, const Polynomial& b) {
                return ord.less(leading_monomial(a), leading_monomial(b));
            });
        work.insert(at, std::move(prolonged));
        result.added_lms.push_back(pick->product);
    }

    if (result.status == RunStatus::Ok)
        work = involutive_autoreduce(std::move(work), div, ord);
    result.basis = std::move(work);
    return result;
}

bool ideal_member(const Polynomial& p, const std::vector<Polynomial>& G,
                  const Division& div, const MonomialOrdering& ord) {
    if (!is_involutive_basis(G, div, ord))
        throw InputError("membership test needs an involutive basis");
    if (p.is_zero()) return true;
    return involutive_normal_form(p, G, div, ord).is_zero();
}

bool verify_groebner(const std::vector<Polynomial>& G, const MonomialOrdering& ord) {
    for (const Polynomial& g : G)
        if (g.is_zero()) throw InputError("zero polynomial in a basis candidate");
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!conventional_normal_form(s_polynomial(G[i], G[j], ord), G, ord).is_zero())
                return false;
    return true;
}

} // namespace invobase
