#include "invobase/reduction.hpp"

#include <algorithm>
#include <utility>

#include "invobase/errors.hpp"

namespace invobase {

namespace {

void sort_by_leading_monomial(std::vector<Polynomial>& polys, const MonomialOrdering& ord) {
    std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a), leading_monomial(b));
    });
}

void reject_zeros(const std::vector<Polynomial>& F) {
    for (const Polynomial& f : F)
        if (f.is_zero()) throw InputError("zero polynomial among the reducers");
}

} // namespace

InvolutiveReducer::InvolutiveReducer(std::vector<Polynomial> F, Division div,
                                     MonomialOrdering ord,
                                     std::optional<std::vector<Monomial>> ambient)
    : reducers_(std::move(F)), div_(std::move(div)), ord_(std::move(ord)) {
    reject_zeros(reducers_);
    sort_by_leading_monomial(reducers_, ord_);

    for (const Polynomial& f : reducers_) {
        const Monomial& lm = leading_monomial(f);
        if (lms_.empty() || !(lms_.back() == lm)) lms_.push_back(lm);
        lm_index_.push_back(lms_.size() - 1);
    }
    if (ambient) {
        seps_.reserve(lms_.size());
        for (const Monomial& lm : lms_) seps_.push_back(separation(div_, lm, *ambient));
    } else {
        seps_ = separations(div_, lms_);
    }
}

std::optional<std::size_t> InvolutiveReducer::find_reducer(const Monomial& w) const {
    for (std::size_t i = 0; i < reducers_.size(); ++i) {
        const std::size_t k = lm_index_[i];
        if (involutive_divides_with(lms_[k], seps_[k], w)) return i;
    }
    return std::nullopt;
}

Polynomial InvolutiveReducer::normal_form(const Polynomial& p, ReductionTrace* trace) const {
    Polynomial h = p;
    std::size_t pos = 0;
    // Terms before pos are involutively irreducible; a reduction replaces
    // the term at pos by strictly lower ones, so the prefix never reopens.
    while (pos < h.size()) {
        const Term& t = h.terms()[pos];
        const auto r = find_reducer(t.mono);
        if (!r) {
            ++pos;
            continue;
        }
        const Polynomial& f = reducers_[*r];
        const Monomial shift = *monomial_divides(leading_monomial(f), t.mono);
        Rational factor = t.coeff / leading_coefficient(f);
        if (trace) trace->steps.push_back({*r, t.mono, Term{factor, shift}});
        h = subtract_scaled(h, factor, shift, f, ord_);
    }
    return h;
}

Polynomial involutive_normal_form(const Polynomial& p, const std::vector<Polynomial>& F,
                                  const Division& div, const MonomialOrdering& ord,
                                  ReductionTrace* trace) {
    if (F.empty()) return p;
    return InvolutiveReducer(F, div, ord).normal_form(p, trace);
}

namespace {

// Conventional counterpart of InvolutiveReducer.
class ConventionalReducer {
public:
    ConventionalReducer(std::vector<Polynomial> F, const MonomialOrdering& ord)
        : reducers_(std::move(F)), ord_(ord) {
        reject_zeros(reducers_);
        sort_by_leading_monomial(reducers_, ord_);
        lms_ = leading_monomials(reducers_);
    }

    Polynomial normal_form(const Polynomial& p, ReductionTrace* trace = nullptr) const {
        Polynomial h = p;
        std::size_t pos = 0;
        while (pos < h.size()) {
            const Term& t = h.terms()[pos];
            std::optional<std::size_t> hit;
            for (std::size_t i = 0; i < reducers_.size(); ++i) {
                if (monomial_divides(lms_[i], t.mono)) {
                    hit = i;
                    break;
                }
            }
            if (!hit) {
                ++pos;
                continue;
            }
            const Polynomial& f = reducers_[*hit];
            const Monomial shift = *monomial_divides(lms_[*hit], t.mono);
            Rational factor = t.coeff / leading_coefficient(f);
            if (trace) trace->steps.push_back({*hit, t.mono, Term{factor, shift}});
            h = subtract_scaled(h, factor, shift, f, ord_);
        }
        return h;
    }

private:
    std::vector<Polynomial> reducers_;
    std::vector<Monomial> lms_;
    MonomialOrdering ord_;
};

} // namespace

Polynomial conventional_normal_form(const Polynomial& p, const std::vector<Polynomial>& F,
                                    const MonomialOrdering& ord, ReductionTrace* trace) {
    if (F.empty()) return p;
    return ConventionalReducer(F, ord).normal_form(p, trace);
}

namespace {

// Interreduction: while some element has a term reducible by another
// element, replace it by its normal form modulo the others. The guard for
// one pass is built once from the current leading set; the reduction itself
// sees the set with the candidate removed.
template <typename GuardMaker, typename ReduceFn>
std::vector<Polynomial> interreduce(std::vector<Polynomial> H, const MonomialOrdering& ord,
                                    GuardMaker make_guard, ReduceFn reduce) {
    std::erase_if(H, [](const Polynomial& p) { return p.is_zero(); });
    for (Polynomial& h : H) h = monic(h);
    sort_by_leading_monomial(H, ord);

    for (;;) {
        if (H.size() < 2) break;
        const std::vector<Monomial> lms = leading_monomials(H);
        const auto reducible_by_other = make_guard(lms); // (element, monomial) -> bool
        std::size_t victim = H.size();
        for (std::size_t k = 0; k < H.size() && victim == H.size(); ++k)
            for (const Term& t : H[k].terms())
                if (reducible_by_other(k, t.mono)) {
                    victim = k;
                    break;
                }
        if (victim == H.size()) break;

        std::vector<Polynomial> others;
        others.reserve(H.size() - 1);
        for (std::size_t j = 0; j < H.size(); ++j)
            if (j != victim) others.push_back(H[j]);
        Polynomial reduced = reduce(H[victim], others, lms);
        H.erase(H.begin() + static_cast<std::ptrdiff_t>(victim));
        if (!reduced.is_zero()) {
            reduced = monic(reduced);
            const auto at = std::lower_bound(
                H.begin(), H.end(), reduced, [&](const Polynomial& a, const Polynomial& b) {
                    return ord.less(leading_monomial(a), leading_monomial(b));
                });
            H.insert(at, std::move(reduced));
        }
    }
    return H;
}

} // namespace

std::vector<Polynomial> involutive_autoreduce(std::vector<Polynomial> F,
                                              const Division& div,
                                              const MonomialOrdering& ord) {
    return interreduce(
        std::move(F), ord,
        [&](const std::vector<Monomial>& lms) {
            auto seps = std::make_shared<std::vector<Separation>>(separations(div, lms));
            const std::vector<Monomial>* plms = &lms; // outlives the pass
            return [plms, seps](std::size_t k, const Monomial& mono) {
                for (std::size_t j = 0; j < plms->size(); ++j)
                    if (j != k && involutive_divides_with((*plms)[j], (*seps)[j], mono))
                        return true;
                return false;
            };
        },
        [&](const Polynomial& h, const std::vector<Polynomial>& others,
            const std::vector<Monomial>& full_lms) {
            return InvolutiveReducer(others, div, ord, full_lms).normal_form(h);
        });
}

std::vector<Polynomial> conventional_autoreduce(std::vector<Polynomial> F,
                                                const MonomialOrdering& ord) {
    return interreduce(
        std::move(F), ord,
        [&](const std::vector<Monomial>& lms) {
            const std::vector<Monomial>* plms = &lms;
            return [plms](std::size_t k, const Monomial& mono) {
                for (std::size_t j = 0; j < plms->size(); ++j)
                    if (j != k && monomial_divides((*plms)[j], mono)) return true;
                return false;
            };
        },
        [&](const Polynomial& h, const std::vector<Polynomial>& others,
            const std::vector<Monomial>&) {
            return ConventionalReducer(others, ord).normal_form(h);
        });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrdering& ord) {
    if (f.is_zero() || g.is_zero())
        throw InputError("s-polynomial of a zero polynomial");
    const Monomial l = monomial_lcm(leading_monomial(f), leading_monomial(g));
    const Term tf{Rational(1) / leading_coefficient(f),
                  *monomial_divides(leading_monomial(f), l)};
    const Term tg{Rational(1) / leading_coefficient(g),
                  *monomial_divides(leading_monomial(g), l)};
    return subtract(term_multiplied(f, tf), term_multiplied(g, tg), ord);
}

std::vector<Polynomial> buchberger_reduced_basis(std::vector<Polynomial> F,
                                                 const MonomialOrdering& ord) {
    std::vector<Polynomial> G = conventional_autoreduce(std::move(F), ord);
    if (G.size() > 1) {
        struct Pair {
            std::size_t i, j;
            Monomial lcm;
        };
        const auto later = [&](const Pair& a, const Pair& b) {
            const auto c = ord.compare(a.lcm, b.lcm);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::greater;
            if (a.i != b.i) return a.i > b.i;
            return a.j > b.j;
        };
        std::vector<Pair> queue;
        const auto push_pairs = [&](std::size_t upto) {
            for (std::size_t i = 0; i < upto; ++i) {
                queue.push_back({i, upto,
                                 monomial_lcm(leading_monomial(G[i]), leading_monomial(G[upto]))});
                std::push_heap(queue.begin(), queue.end(), later);
            }
        };
        for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);
        ConventionalReducer reducer(G, ord);

        while (!queue.empty()) {
            std::pop_heap(queue.begin(), queue.end(), later);
            const Pair p = std::move(queue.back());
            queue.pop_back();
            const Monomial& u = leading_monomial(G[p.i]);
            const Monomial& v = leading_monomial(G[p.j]);
            if (p.lcm.degree() == u.degree() + v.degree()) continue; // coprime leads
            Polynomial r = reducer.normal_form(s_polynomial(G[p.i], G[p.j], ord));
            if (r.is_zero()) continue;
            G.push_back(monic(r));
            push_pairs(G.size() - 1);
            reducer = ConventionalReducer(G, ord);
        }
    }
    return conventional_autoreduce(std::move(G), ord);
}

} // namespace invobase
