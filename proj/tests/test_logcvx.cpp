#include <set>

#include "doctest.h"
#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/logcvx.hpp"
#include "qlogcvx/oracles.hpp"
#include "test_support.hpp"

using namespace qlogcvx;
using testsup::C;
using testsup::P;

namespace {

BiPoly bi(const char* text) { return eval_bipoly(parse_expr(text)); }

}  // namespace

TEST_SUITE("logcvx") {

TEST_CASE("one convexity step") {
    std::vector<Poly> e = {C(1), C(2), C(5), C(16), C(61)};
    CHECK(l_operator(e) == std::vector<Poly>{C(1), C(7), C(49)});
    CHECK_THROWS_AS(l_operator({C(1), C(2)}), std::invalid_argument);

    auto bell = expand_jacobi(family_spec(FamilyId::bell), 4);
    auto l1 = l_operator(bell);
    CHECK(l1.size() == 3);
    CHECK(l1[0] == bell[0] * bell[2] - bell[1] * bell[1]);
}

TEST_CASE("iterated convexity verdicts") {
    auto bell = expand_jacobi(family_spec(FamilyId::bell), 10);
    LogConvexReport r = is_m_q_log_convex(bell, 3);
    CHECK(r.verdict);
    CHECK(r.levels_requested == 3);
    CHECK(r.levels_checked == 3);
    CHECK(!r.failure.has_value());
}

TEST_CASE("effective depth is reported, not failed") {
    std::vector<Poly> five = {C(1), C(1), C(2), C(5), C(15)};
    LogConvexReport r = is_m_q_log_convex(five, 3);
    CHECK(r.levels_requested == 3);
    CHECK(r.levels_checked == 2);  // each step consumes two terms
    LogConvexReport tiny = is_m_q_log_convex({C(1), C(1), C(2)}, 5);
    CHECK(tiny.levels_checked == 1);
}

TEST_CASE("first failure is witnessed") {
    std::vector<Poly> seq = {C(1), C(1), C(1), Poly()};
    LogConvexReport r = is_m_q_log_convex(seq, 2);
    CHECK(!r.verdict);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->level == 1);
    CHECK(r.failure->index == 1);
    CHECK(r.failure->residual == C(-1));
}

TEST_CASE("tridiagonal criterion, generic residuals") {
    auto v = check_thm_main(family_spec(FamilyId::bell),
                            CriterionOrder::order3, 20);
    CHECK(v.verdict);
    CHECK(v.k_range_checked == 20);
    REQUIRE(v.symbolic.size() == 2);
    CHECK(v.symbolic[0].first == "pair");
    CHECK(v.symbolic[0].second == bi("k^2 + (1 + q)*k + q^2"));
    CHECK(v.symbolic[1].first == "order3");
    CHECK(v.symbolic[1].second ==
          bi("k^4 + (6 + q)*k^3 + (11 + 3*q + q^2)*k^2 + "
             "(q^3 + q^2 + 2*q + 6)*k + q^4"));
}

TEST_CASE("tridiagonal criterion, constant data") {
    auto v2 = check_thm_main(family_spec(FamilyId::euler_numbers),
                             CriterionOrder::order2, 50);
    CHECK(v2.verdict);
    REQUIRE(v2.symbolic.size() == 1);
    CHECK(v2.symbolic[0].second.is_zero());  // residual identically zero

    auto v3 = check_thm_main(family_spec(FamilyId::euler_numbers),
                             CriterionOrder::order3, 50);
    CHECK(!v3.verdict);
    REQUIRE(v3.witness.has_value());
    CHECK(v3.witness->condition == "order3");
    CHECK(v3.witness->k == 0);
    CHECK(v3.witness->residual == C(-6));
}

TEST_CASE("tridiagonal criterion respects exceptional heads") {
    auto v = check_thm_main(family_spec(FamilyId::qschroeder),
                            CriterionOrder::order3, 30);
    CHECK(v.verdict);
    auto alt = check_thm_main(family_spec(FamilyId::alt_eulerian),
                              CriterionOrder::order2, 30);
    CHECK(alt.verdict);
    REQUIRE(alt.symbolic.size() == 1);
    CHECK(alt.symbolic[0].second ==
          bi("2*q*(q + 1)*(k + 1)*(k + 2)*(k + 3)"));
}

TEST_CASE("constant-data criterion") {
    CHECK(check_riordan(C(2), C(2), C(1), 3).verdict);
    auto aig = check_riordan(C(1), C(2), C(1), 3);
    CHECK(!aig.verdict);
    REQUIRE(aig.witness.has_value());
    CHECK(aig.witness->condition == "ge-dominates-rh");
    CHECK(aig.witness->residual == C(-1));
    auto sch = check_riordan(C(1), C(2), C(2), 2);
    CHECK(!sch.verdict);
    CHECK(sch.witness->residual == C(-2));
    CHECK(!check_riordan(C(-1), C(2), C(1), 2).verdict);
    CHECK_THROWS_AS(check_riordan(C(1), C(2), C(1), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_riordan(P({0, 1}), C(2), C(1), 2),
                    std::invalid_argument);
}

TEST_CASE("transformed head residual has the expected shape") {
    // with data (e, g, h) constant, the transformed spec's order-2 residual
    // at the head is (ge - h)q + eg^2 - gh - eh
    for (auto [e, g, h] : {std::tuple<long, long, long>{1, 2, 1},
                           {2, 2, 1},
                           {1, 3, 2},
                           {2, 5, 3}}) {
        auto spec = CoeffSeqSpec::make_jacobi(
            parse_expr(std::to_string(g)), parse_expr(std::to_string(h)),
            {{0, P({e, 1})}},
            {{1, P({h, g - e})}});
        auto v = check_thm_main(spec, CriterionOrder::order2, 0);
        Poly expected = P({e * g * g - g * h - e * h, g * e - h});
        Poly head = spec.g(0) * spec.g(1) * spec.g(2) -
                    spec.h(1) * spec.g(2) - spec.g(0) * spec.h(2);
        CHECK(head == expected);
        CHECK(v.verdict == expected.is_q_nonneg());
    }
}

TEST_CASE("closed-form criterion") {
    CHECK(check_gf_criterion(C(1), C(2), C(1), CriterionOrder::order2).verdict);
    CHECK(check_gf_criterion(C(1), C(2), C(1), CriterionOrder::order3).verdict);
    auto v = check_gf_criterion(C(1), C(2), C(2), CriterionOrder::order2);
    CHECK(!v.verdict);
    CHECK(v.precondition_ok);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->condition == "as-2t");
    CHECK(v.witness->residual == C(-2));

    auto pre = check_gf_criterion(C(2), C(1), C(1), CriterionOrder::order2);
    CHECK(!pre.verdict);
    CHECK(!pre.precondition_ok);
    CHECK(pre.witness->condition == "s-dominates-a");

    auto poly = check_gf_criterion(P({0, 1}), P({1, 1}), P({0, 1}),
                                   CriterionOrder::order3);
    CHECK(poly.verdict);
}

TEST_CASE("ladder criterion") {
    CHECK(check_stieltjes(family_spec(FamilyId::elliptic_cn), 12).verdict);
    auto bad = CoeffSeqSpec::make_stieltjes(parse_expr("k"), parse_expr("k"),
                                            {{3, P({1, -1})}});
    auto v = check_stieltjes(bad, 6);
    CHECK(!v.verdict);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->k == 3);
    CHECK(v.witness->residual == P({1, -1}));
}

TEST_CASE("iterate identities against determinant forms") {
    std::vector<Poly> cat;
    for (long v : {1, 1, 2, 5, 14, 42, 132, 429}) cat.push_back(C(v));
    CHECK(l2_l3_identity_check(cat, 3));

    auto bell = expand_jacobi(family_spec(FamilyId::bell), 4);
    CHECK(l2_l3_identity_check(bell, 2));  // second-iterate window only

    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto spec = random_jacobi_spec(rng);
        auto terms = expand_jacobi(spec, 8);
        unsigned long k = 2 + rng.below(3);
        CHECK(l2_l3_identity_check(terms, k));
    }
    CHECK_THROWS_AS(l2_l3_identity_check(cat, 1), std::invalid_argument);
    CHECK_THROWS_AS(l2_l3_identity_check(cat, 6), std::invalid_argument);
}

TEST_CASE("criterion verdicts imply direct convexity") {
    // restricted to specs with g_k != 0 throughout: with a vanishing g the
    // order-2 residual degenerates to 0 >= 0 while the expansion aerates,
    // so the implication only holds on nondegenerate data
    SplitMix64 rng(555);
    unsigned long hits2 = 0, hits3 = 0;
    for (int trial = 0; trial < 220; ++trial) {
        auto spec = random_jacobi_spec(rng);
        bool degenerate = false;
        for (unsigned long k = 0; k <= 12 && !degenerate; ++k)
            degenerate = spec.g(k).is_zero();
        if (degenerate) continue;
        auto o2 = check_thm_main(spec, CriterionOrder::order2, 8).verdict;
        auto o3 = check_thm_main(spec, CriterionOrder::order3, 8).verdict;
        if (!o2 && !o3) continue;
        auto terms = expand_jacobi(spec, 12);
        if (o2) {
            ++hits2;
            CHECK(is_m_q_log_convex(terms, 2).verdict);
        }
        if (o3) {
            ++hits3;
            CHECK(is_m_q_log_convex(terms, 3).verdict);
        }
    }
    // the draw distribution must actually exercise the implication
    CHECK(hits2 > 20);
    CHECK(hits3 > 20);
}

TEST_CASE("deterministic generator") {
    SplitMix64 a = SplitMix64::for_trial(42, 7);
    SplitMix64 b = SplitMix64::for_trial(42, 7);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());
    SplitMix64 c(0);
    CHECK(c.next() == 16294208416658607535ull);
    CHECK(c.next() == 7960286522194355700ull);
    SplitMix64 d(12);
    for (int i = 0; i < 50; ++i) CHECK(d.below(7) < 7);
}

TEST_CASE("random data stays inside the advertised envelope") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        auto j = random_jacobi_spec(rng);
        for (unsigned long k = 0; k < 5; ++k) {
            CHECK(j.g(k).degree() <= 2);
            CHECK(j.g(k).is_q_nonneg());
            CHECK(j.h(k + 1).is_q_nonneg());
        }
        auto s = random_stieltjes_spec(rng);
        for (unsigned long n = 1; n <= 6; ++n) {
            CHECK(s.t(n).degree() <= 2);
            CHECK(s.t(n).is_q_nonneg());
        }
    }
    // both exception slots appear sometimes and stay optional
    std::set<std::size_t> sizes;
    SplitMix64 rng2(4);
    for (int trial = 0; trial < 40; ++trial)
        sizes.insert(random_jacobi_spec(rng2).g_exceptions().size());
    CHECK(sizes.count(0) == 1);
    CHECK(sizes.count(1) == 1);
}

TEST_CASE("conjecture search") {
    ExplorationReport empty = explore_conjecture(0, 1, 5, 1);
    CHECK(empty.trials == 0);
    CHECK(empty.hypothesis_held == 0);
    CHECK(empty.candidates.empty());

    ExplorationReport r = explore_conjecture(100, 42, 5, 1);
    CHECK(r.trials == 100);
    CHECK(r.seed == 42);
    CHECK(r.candidates.empty());

    ExplorationReport again = explore_conjecture(100, 42, 5, 1);
    CHECK(again.hypothesis_held == r.hypothesis_held);

    CHECK_THROWS_AS(explore_conjecture(1, 1, 5, 4), std::invalid_argument);
    CHECK_THROWS_AS(explore_conjecture(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("report json shapes") {
    auto bell = expand_jacobi(family_spec(FamilyId::bell), 6);
    nlohmann::json lc = is_m_q_log_convex(bell, 2);
    CHECK(lc.at("verdict") == true);
    CHECK(lc.at("failure").is_null());
    CHECK(lc.at("levels_checked") == 2);

    nlohmann::json bad = is_m_q_log_convex({C(1), C(1), Poly()}, 1);
    CHECK(bad.at("failure").at("level") == 1);
    CHECK(bad.at("failure").at("residual") == nlohmann::json({"-1"}));

    nlohmann::json cv = check_thm_main(family_spec(FamilyId::bell),
                                       CriterionOrder::order2, 4);
    CHECK(cv.at("criterion") == "tridiagonal-order2");
    CHECK(cv.at("witness").is_null());
    CHECK(cv.at("symbolic").contains("order2"));

    nlohmann::json ex = explore_conjecture(3, 9, 4, 1);
    CHECK(ex.at("trials") == 3);
    CHECK(ex.at("candidates").is_array());
}

}  // TEST_SUITE

TEST_SUITE("bridge") {

TEST_CASE("window positivity transfers to iterated convexity") {
    for (FamilyId id : {FamilyId::bell, FamilyId::eulerianA,
                        FamilyId::qschroeder, FamilyId::qdelannoy,
                        FamilyId::narayanaA, FamilyId::narayanaB}) {
        CAPTURE(family_info(id).name);
        auto terms = expand_jacobi(family_spec(id), 20);
        TpReport tp = is_q_tp(hankel(terms, 10, 0), 4, TpMode::all);
        CHECK(tp.verdict);
        CHECK(is_m_q_log_convex(terms, 3).verdict);
    }
}

}  // TEST_SUITE
