#include "doctest.h"

#include <set>

#include "support.hpp"

using namespace testsupport;

namespace {

const VarTable kXY({"x", "y"});
const MonomialOrdering kLex2(OrderKind::Lex, 2);

const std::vector<std::string> kCyclic4Gens = {
    "x1 + x2 + x3 + x4",
    "x1*x2 + x2*x3 + x3*x4 + x4*x1",
    "x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2",
    "x1*x2*x3*x4 - 1",
};

const std::vector<std::string> kCyclic4Basis = {
    "x1 + x2 + x3 + x4",
    "x2^2 + 2*x2*x4 + x4^2",
    "x2*x3^2 + x3^2*x4 - x2*x4^2 - x4^3",
    "x2*x3*x4^2 + x3^2*x4^2 - x2*x4^3 + x3*x4^3 - x4^4 - 1",
    "x2*x4^4 + x4^5 - x2 - x4",
    "x3^2*x4^4 + x2*x3 - x2*x4 + x3*x4 - 2*x4^2",
    "x3^3*x4^2 + x3^2*x4^3 - x3 - x4",
};

BasisOptions janet_lex2() {
    BasisOptions opts;
    opts.division = Division::janet();
    opts.ordering = kLex2;
    opts.budget = CompletionBudget{30};
    return opts;
}

std::vector<Polynomial> sorted_by_lm(std::vector<Polynomial> ps, const MonomialOrdering& ord) {
    std::sort(ps.begin(), ps.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(leading_monomial(a), leading_monomial(b));
    });
    return ps;
}

void check_stats(const BasisResult& r) {
    CHECK(r.stats.criterion_skips + r.stats.nf_calls == r.stats.prolongations_examined);
    CHECK(r.stats.zero_reductions <= r.stats.nf_calls);
    CHECK(!r.lm_regrowth_detected);
    // No (leading monomial, variable) pair is examined twice.
    std::set<std::pair<std::vector<int>, std::size_t>> seen;
    for (const auto& [lm, var] : r.prolongations)
        CHECK(seen.emplace(lm.exponents(), var).second);
}

} // namespace

TEST_CASE("the collapsing Janet basis example") {
    const auto F1 = polys(
        kXY, kLex2, {"x*y^3 - y", "x*y^2 - 1", "x*y - y^2", "x - y", "y^3 - 1"});
    const BasisResult r = involutive_basis(F1, janet_lex2());
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.basis == polys(kXY, kLex2, {"y^3 - 1", "x - y"}));
    check_stats(r);
    CHECK(is_involutive_basis(r.basis, Division::janet(), kLex2));
}

TEST_CASE("a singleton is its own basis") {
    for (const Division& div :
         {Division::thomas(), Division::janet(), Division::pommaret()}) {
        BasisOptions opts;
        opts.division = div;
        opts.ordering = kLex2;
        const BasisResult r = involutive_basis(polys(kXY, kLex2, {"x"}), opts);
        CHECK(r.status == RunStatus::Ok);
        CHECK(r.basis == polys(kXY, kLex2, {"x"}));
        check_stats(r);
    }
}

TEST_CASE("Pommaret diverges on the lexicographic example") {
    const VarTable xyz({"x", "y", "z"});
    const MonomialOrdering lex3(OrderKind::Lex, 3);
    BasisOptions opts;
    opts.division = Division::pommaret();
    opts.ordering = lex3;
    opts.budget = CompletionBudget{30};

    const auto F = polys(xyz, lex3, {"x^2 - 1", "x*y - 1", "z"});
    const BasisResult r = involutive_basis(F, opts);
    CHECK(r.status == RunStatus::NonTermination);
    REQUIRE(r.added_lms.size() >= 2);
    CHECK(r.added_lms[0] == mono(xyz, "y*z"));
    CHECK(r.added_lms[1] == mono(xyz, "y^2*z"));
    check_stats(r);

    // The same ideal has a finite Pommaret basis, reachable through the
    // Groebner route.
    const GroebnerCompletionResult g =
        involutive_basis_from_groebner(F, Division::pommaret(), lex3, CompletionBudget{30});
    CHECK(g.status == RunStatus::Ok);
    CHECK(g.basis == polys(xyz, lex3, {"z", "y*z", "y^2 - 1", "x - y"}));
    CHECK(is_involutive_basis(g.basis, Division::pommaret(), lex3));
}

TEST_CASE("cyclic-4 Janet basis under degrevlex") {
    const VarTable v4({"x1", "x2", "x3", "x4"});
    const MonomialOrdering drl(OrderKind::DegRevLex, 4);
    BasisOptions opts;
    opts.division = Division::janet();
    opts.ordering = drl;
    opts.budget = CompletionBudget{30};

    const BasisResult r = involutive_basis(polys(v4, drl, kCyclic4Gens), opts);
    CHECK(r.status == RunStatus::Ok);
    CHECK(r.basis == sorted_by_lm(polys(v4, drl, kCyclic4Basis), drl));
    check_stats(r);
    CHECK(is_involutive_basis(r.basis, Division::janet(), drl));
    CHECK(verify_groebner(r.basis, drl));

    // Same basis through the Groebner route.
    const GroebnerCompletionResult g = involutive_basis_from_groebner(
        polys(v4, drl, kCyclic4Gens), Division::janet(), drl, CompletionBudget{30});
    CHECK(g.status == RunStatus::Ok);
    CHECK(g.basis == r.basis);

    // The criterion only skips reductions, never changes the answer.
    BasisOptions no_criterion = opts;
    no_criterion.criterion_enabled = false;
    const BasisResult r2 = involutive_basis(polys(v4, drl, kCyclic4Gens), no_criterion);
    CHECK(r2.basis == r.basis);
    CHECK(r2.stats.criterion_skips == 0);
    CHECK(r.stats.criterion_skips > 0);
    CHECK(r.stats.nf_calls < r2.stats.nf_calls);
}

TEST_CASE("is_involutive_basis on the two Janet bases of one ideal") {
    const auto F1 = polys(
        kXY, kLex2, {"x*y^3 - y", "x*y^2 - 1", "x*y - y^2", "x - y", "y^3 - 1"});
    CHECK(is_involutive_basis(F1, Division::janet(), kLex2));

    const auto F2 = polys(kXY, kLex2,
                          {"x^2*y^3 - y^2", "x^2*y^2 - y", "x^2*y - 1", "x^2 - y^2",
                           "x*y^3 - y", "x*y^2 - 1", "x*y - y^2", "x - y", "y^3 - 1"});
    CHECK(is_involutive_basis(F2, Division::janet(), kLex2));

    // Their common reduced Groebner basis, which is a Janet basis as well.
    const auto gb = buchberger_reduced_basis(F1, kLex2);
    CHECK(gb == polys(kXY, kLex2, {"y^3 - 1", "x - y"}));
    CHECK(buchberger_reduced_basis(F2, kLex2) == gb);
    CHECK(is_involutive_basis(gb, Division::janet(), kLex2));
}

TEST_CASE("is_involutive_basis negatives and edge cases") {
    CHECK(is_involutive_basis(polys(kXY, kLex2, {"x^2"}), Division::pommaret(), kLex2));
    CHECK(!is_involutive_basis(polys(kXY, kLex2, {"x", "x*y"}), Division::pommaret(), kLex2));
    // y*z's prolongation x*y*z only reduces when x - y is present.
    const VarTable xyz({"x", "y", "z"});
    const MonomialOrdering lex3(OrderKind::Lex, 3);
    CHECK(is_involutive_basis(polys(xyz, lex3, {"x - y", "y^2 - 1", "y*z", "z"}),
                              Division::pommaret(), lex3));
    CHECK(!is_involutive_basis(polys(xyz, lex3, {"y^2 - 1", "y*z", "z"}),
                               Division::pommaret(), lex3));
    CHECK(is_involutive_basis({}, Division::janet(), kLex2));
}

TEST_CASE("groebner-route completion leaves an involutive reduced basis alone") {
    const auto gb = polys(kXY, kLex2, {"y^3 - 1", "x - y"});
    const GroebnerCompletionResult g =
        involutive_basis_from_groebner(gb, Division::janet(), kLex2, CompletionBudget{30});
    CHECK(g.status == RunStatus::Ok);
    CHECK(g.added_lms.empty());
    CHECK(g.basis == gb);
}

TEST_CASE("ideal membership through the involutive basis") {
    const auto G = polys(kXY, kLex2, {"x - y", "y^3 - 1"});
    const Division janet = Division::janet();
    CHECK(ideal_member(
        multiplied(poly(kXY, kLex2, "x - y"), poly(kXY, kLex2, "y^5 + 3"), kLex2), G,
        janet, kLex2));
    CHECK(ideal_member(Polynomial::zero(), G, janet, kLex2));
    CHECK(!ideal_member(poly(kXY, kLex2, "y"), G, janet, kLex2));

    const auto not_a_basis = polys(kXY, kLex2, {"x", "x*y"});
    CHECK_THROWS_AS(ideal_member(poly(kXY, kLex2, "y"), not_a_basis, Division::pommaret(),
                                 kLex2),
                    InputError);
}

TEST_CASE("verify_groebner") {
    CHECK(verify_groebner(polys(kXY, kLex2, {"x - y", "y^3 - 1"}), kLex2));
    CHECK(!verify_groebner(polys(kXY, kLex2, {"x*y - 1", "x"}), kLex2));
    CHECK(verify_groebner({}, kLex2));
    CHECK_THROWS_AS(verify_groebner({Polynomial::zero()}, kLex2), InputError);
}

TEST_CASE("involutive_basis rejects bad inputs") {
    CHECK_THROWS_AS(involutive_basis({}, janet_lex2()), InputError);
    CHECK_THROWS_AS(involutive_basis({Polynomial::zero()}, janet_lex2()), InputError);
    BasisOptions opts = janet_lex2();
    opts.division = counterexample_table();
    CHECK_THROWS_AS(involutive_basis(polys(kXY, kLex2, {"x"}), opts), FixtureError);
}

TEST_CASE("reapplying involutive_basis settles immediately") {
    // Janet bases are not unique: when a computed basis carries members that
    // are conventionally redundant, the entry autoreduction of a second run
    // strips them and completes to a (possibly smaller) basis of the same
    // ideal. That second result is a fixpoint.
    Gen gen(51);
    const MonomialOrdering ord(OrderKind::DegRevLex, 3);
    BasisOptions opts;
    opts.division = Division::janet();
    opts.ordering = ord;
    opts.budget = CompletionBudget{40};
    for (int round = 0; round < 25; ++round) {
        const auto F = gen.system(ord, 3, 3, 3);
        const BasisResult r = involutive_basis(F, opts);
        REQUIRE(r.status == RunStatus::Ok);
        check_stats(r);
        const BasisResult again = involutive_basis(r.basis, opts);
        CHECK(is_involutive_basis(again.basis, opts.division, ord));
        CHECK(conventional_autoreduce(again.basis, ord) ==
              conventional_autoreduce(r.basis, ord));
        const BasisResult third = involutive_basis(again.basis, opts);
        CHECK(third.basis == again.basis);
        check_stats(again);
    }

    // On a conventionally interreduced involutive basis the rerun returns
    // its input unchanged.
    const auto f1 = polys(kXY, kLex2,
                          {"x*y^3 - y", "x*y^2 - 1", "x*y - y^2", "x - y", "y^3 - 1"});
    const BasisResult once = involutive_basis(f1, janet_lex2());
    const BasisResult twice = involutive_basis(once.basis, janet_lex2());
    CHECK(twice.basis == once.basis);
}

TEST_CASE("the criterion changes work, not answers, on random systems") {
    Gen gen(52);
    const MonomialOrdering ord(OrderKind::DegRevLex, 3);
    for (int round = 0; round < 25; ++round) {
        const auto F = gen.system(ord, 3, 3, 3);
        for (const Division& div : {Division::janet(), Division::thomas()}) {
            BasisOptions on;
            on.division = div;
            on.ordering = ord;
            on.budget = CompletionBudget{40};
            BasisOptions off = on;
            off.criterion_enabled = false;
            const BasisResult a = involutive_basis(F, on);
            const BasisResult b = involutive_basis(F, off);
            REQUIRE(a.status == RunStatus::Ok);
            CHECK(a.basis == b.basis);
            CHECK(a.stats.nf_calls <= b.stats.nf_calls);
            check_stats(a);
            check_stats(b);
        }
    }
}

TEST_CASE("involutive bases land on the reduced Groebner basis") {
    Gen gen(53);
    const MonomialOrdering ord(OrderKind::DegRevLex, 3);
    for (int round = 0; round < 25; ++round) {
        const auto F = gen.system(ord, 3, 3, 3);
        const auto expected = buchberger_reduced_basis(F, ord);
        for (const Division& div : {Division::janet(), Division::thomas()}) {
            BasisOptions opts;
            opts.division = div;
            opts.ordering = ord;
            opts.budget = CompletionBudget{40};
            const BasisResult r = involutive_basis(F, opts);
            REQUIRE(r.status == RunStatus::Ok);
            CHECK(is_involutive_basis(r.basis, div, ord));
            CHECK(conventional_autoreduce(r.basis, ord) == expected);
        }
    }
}
