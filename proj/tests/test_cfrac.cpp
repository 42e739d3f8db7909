#include "doctest.h"
#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/triangle.hpp"
#include "test_support.hpp"

using namespace qlogcvx;
using testsup::C;
using testsup::P;

TEST_SUITE("cfrac") {

TEST_CASE("jacobi expansion") {
    auto bell = expand_jacobi(family_spec(FamilyId::bell), 3);
    CHECK(bell == std::vector<Poly>{C(1), P({0, 1}), P({0, 1, 1}),
                                    P({0, 1, 3, 1})});
    auto euler = expand_jacobi(family_spec(FamilyId::euler_numbers), 6);
    CHECK(euler == std::vector<Poly>{C(1), C(1), C(2), C(5), C(16), C(61),
                                     C(272)});
    CHECK_THROWS_AS(expand_jacobi(family_spec(FamilyId::elliptic_cn), 3),
                    std::domain_error);
}

TEST_CASE("jacobi expansion equals the truncated fraction") {
    SplitMix64 rng(101);
    for (FamilyId id : {FamilyId::bell, FamilyId::qschroeder,
                        FamilyId::qdelannoy, FamilyId::narayanaA,
                        FamilyId::alt_eulerian, FamilyId::tan_derivative}) {
        auto spec = family_spec(id);
        CHECK(expand_jacobi(spec, 10) ==
              testsup::jfrac_series(spec, 10).coeffs());
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto spec = random_jacobi_spec(rng);
        CHECK(expand_jacobi(spec, 10) ==
              testsup::jfrac_series(spec, 10).coeffs());
    }
}

TEST_CASE("ladder contraction, generic and head values") {
    auto j = contract(family_spec(FamilyId::elliptic_cn));
    REQUIRE(j.kind() == SpecKind::jacobi);
    CHECK(j.g(0) == C(1));
    CHECK(j.h(1) == P({0, 4}));
    CHECK(j.g(1) == P({9, 4}));
    CHECK(j.h(2) == P({0, 144}));
    CHECK(j.g(2) == P({25, 16}));
    CHECK(j.g(3) == P({49, 36}));
    CHECK_THROWS_AS(contract(family_spec(FamilyId::bell)), std::domain_error);
}

TEST_CASE("contraction matches the pairing formula everywhere") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto s = random_stieltjes_spec(rng);
        auto j = contract(s);
        CHECK(j.g(0) == s.t(1));
        for (unsigned long i = 1; i <= 8; ++i) {
            CHECK(j.g(i) == s.t(2 * i) + s.t(2 * i + 1));
            CHECK(j.h(i) == s.t(2 * i - 1) * s.t(2 * i));
        }
    }
}

TEST_CASE("ladder exceptions land on the right contracted indices") {
    // t_1 and t_2 exceptional: affects g_0, g_1, h_1 but not beyond
    auto s = CoeffSeqSpec::make_stieltjes(parse_expr("(2*k - 1)^2"),
                                          parse_expr("4*k^2*q"),
                                          {{1, C(7)}, {2, P({0, 36})}});
    auto j = contract(s);
    CHECK(j.g(0) == C(7));
    CHECK(j.h(1) == C(7) * P({0, 36}));
    CHECK(j.g(1) == P({0, 36}) + C(9));
    CHECK(j.h(2) == P({0, 144}));
    CHECK(j.g(2) == P({25, 16}));
}

TEST_CASE("ladder expansion") {
    auto terms = expand_stieltjes(family_spec(FamilyId::elliptic_cn), 3);
    CHECK(terms == std::vector<Poly>{C(1), C(1), P({1, 4}), P({1, 44, 16})});
    CHECK_THROWS_AS(expand_stieltjes(family_spec(FamilyId::bell), 3),
                    std::domain_error);
}

TEST_CASE("ladder expansion equals the truncated fraction") {
    auto ell = family_spec(FamilyId::elliptic_cn);
    CHECK(expand_stieltjes(ell, 12) ==
          testsup::sfrac_series(ell, 12).coeffs());
    SplitMix64 rng(57);
    for (int trial = 0; trial < 20; ++trial) {
        auto spec = random_stieltjes_spec(rng);
        CHECK(expand_stieltjes(spec, 8) ==
              testsup::sfrac_series(spec, 8).coeffs());
    }
}

TEST_CASE("expansion matches the triangle first column") {
    for (FamilyId id : {FamilyId::aigner, FamilyId::shapiro,
                        FamilyId::eulerianA}) {
        auto spec = family_spec(id);
        CHECK(expand_jacobi(spec, 9) == first_column(generate(spec, 9)));
    }
}

}  // TEST_SUITE
