#include "doctest.h"
#include "qlogcvx/oracles.hpp"
#include "test_support.hpp"

using namespace qlogcvx;
using testsup::C;
using testsup::P;

TEST_SUITE("oracles") {

TEST_CASE("set partition statistic") {
    CHECK(stirling_bell_poly(0) == C(1));
    CHECK(stirling_bell_poly(1) == P({0, 1}));
    CHECK(stirling_bell_poly(2) == P({0, 1, 1}));
    CHECK(stirling_bell_poly(3) == P({0, 1, 3, 1}));
    CHECK(stirling_bell_poly(4) == P({0, 1, 7, 6, 1}));
    // column sums at q=1 are the partition counts
    long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (unsigned long n = 0; n <= 6; ++n)
        CHECK(stirling_bell_poly(n).eval(Rational(1)) == bell[n]);
}

TEST_CASE("descent statistic") {
    // the statistic is recorded as q^(descents + 1), so each polynomial is
    // q times the classical one; the empty permutation contributes 1
    CHECK(eulerian_descent_poly(0) == C(1));
    CHECK(eulerian_descent_poly(1) == P({0, 1}));
    CHECK(eulerian_descent_poly(2) == P({0, 1, 1}));
    CHECK(eulerian_descent_poly(3) == P({0, 1, 4, 1}));
    CHECK(eulerian_descent_poly(4) == P({0, 1, 11, 11, 1}));
    CHECK(eulerian_descent_poly(5) == P({0, 1, 26, 66, 26, 1}));
    CHECK(eulerian_descent_poly(6).eval(Rational(1)) == 720);
}

TEST_CASE("parity adjusted descent statistic") {
    CHECK(alt_descent_poly(0) == C(1));
    CHECK(alt_descent_poly(1) == C(1));
    CHECK(alt_descent_poly(2) == P({1, 1}));
    CHECK(alt_descent_poly(3) == P({2, 2, 2}));
    CHECK(alt_descent_poly(4).eval(Rational(1)) == 24);
    CHECK(alt_descent_poly(5).eval(Rational(1)) == 120);
}

TEST_CASE("zigzag counts") {
    long e[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};
    for (unsigned long n = 0; n <= 8; ++n)
        CHECK(alternating_count(n) == e[n]);
}

TEST_CASE("permutation walks are capped") {
    CHECK_THROWS_AS(eulerian_descent_poly(11), std::domain_error);
    CHECK_THROWS_AS(alt_descent_poly(11), std::domain_error);
    CHECK_THROWS_AS(alternating_count(11), std::domain_error);
}

TEST_CASE("lattice path polynomials") {
    CHECK(qschroeder_poly(0) == C(1));
    CHECK(qschroeder_poly(1) == P({1, 1}));
    CHECK(qschroeder_poly(2) == P({1, 3, 2}));
    CHECK(qschroeder_poly(3) == P({1, 6, 10, 5}));
    CHECK(qdelannoy_poly(1) == P({1, 2}));
    CHECK(qdelannoy_poly(2) == P({1, 6, 6}));
    CHECK(qdelannoy_poly(3) == P({1, 12, 30, 20}));
    // the two families agree at q=0
    for (unsigned long n = 0; n <= 8; ++n)
        CHECK(qschroeder_poly(n).coeff(0) == 1);
}

TEST_CASE("narayana variants") {
    CHECK(narayana_a_poly(0) == C(1));
    CHECK(narayana_a_poly(1) == P({0, 1}));
    CHECK(narayana_a_poly(2) == P({0, 1, 1}));
    CHECK(narayana_a_poly(3) == P({0, 1, 3, 1}));
    CHECK(narayana_a_poly(4) == P({0, 1, 6, 6, 1}));
    CHECK(narayana_b_poly(0) == C(1));
    CHECK(narayana_b_poly(1) == P({1, 1}));
    CHECK(narayana_b_poly(2) == P({1, 4, 1}));
    CHECK(narayana_b_poly(3) == P({1, 9, 9, 1}));
    // central binomial row sums
    CHECK(narayana_b_poly(4).eval(Rational(1)) == 70);
    // ballot-number row sums (Catalan)
    CHECK(narayana_a_poly(5).eval(Rational(1)) == 42);
}

TEST_CASE("weighted derivative tower") {
    CHECK(hoffman_tan_poly(0) == P({0, 1}));
    CHECK(hoffman_tan_poly(1) == P({1, 0, 1}));
    CHECK(hoffman_tan_poly(2) == P({0, 2, 0, 2}));
    CHECK(hoffman_tan_poly(3) == P({2, 0, 8, 0, 6}));
    CHECK(tan_derivative_column(0) == C(1));
    CHECK(tan_derivative_column(1) == P({0, 2}));
    CHECK(tan_derivative_column(2) == P({2, 0, 6}));
    CHECK(tan_derivative_column(3) == P({0, 16, 0, 24}));
    // division by 1 + q^2 is exact at every index tested
    Poly w = P({1, 0, 1});
    for (unsigned long n = 0; n <= 10; ++n)
        CHECK(tan_derivative_column(n) * w == hoffman_tan_poly(n + 1));
}

TEST_CASE("quartic integral coefficients") {
    CHECK(boros_moll_poly(0) == C(1));
    CHECK(boros_moll_poly(1) ==
          Poly(std::vector<Rational>{Rational(3, 2), 1}));
    CHECK(boros_moll_poly(2) ==
          Poly(std::vector<Rational>{Rational(21, 8), Rational(15, 4),
                                     Rational(3, 2)}));
    // degree n with positive leading coefficient
    for (unsigned long n = 0; n <= 6; ++n) {
        CHECK(boros_moll_poly(n).degree() == static_cast<long>(n));
        CHECK(boros_moll_poly(n).is_q_nonneg());
    }
}

TEST_CASE("oracle dispatch") {
    CHECK(oracle(FamilyId::euler_numbers, 5) == C(16));
    CHECK(oracle(FamilyId::euler_numbers, 0) == C(1));
    CHECK(oracle(FamilyId::alt_eulerian, 3) == P({2, 2, 2}));
    CHECK(oracle(FamilyId::eulerianA, 0) == C(1));
    CHECK(oracle(FamilyId::bell, 4) == stirling_bell_poly(4));
    CHECK(oracle(FamilyId::boros_moll, 2) == boros_moll_poly(2));
    CHECK(oracle(FamilyId::tan_derivative, 2) == tan_derivative_column(2));
    CHECK_THROWS_AS(oracle(FamilyId::aigner, 0), std::domain_error);
    CHECK_THROWS_AS(oracle(FamilyId::elliptic_cn, 0), std::domain_error);
}

}  // TEST_SUITE
