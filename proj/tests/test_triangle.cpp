#include "doctest.h"
#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/oracles.hpp"
#include "qlogcvx/triangle.hpp"
#include "test_support.hpp"

using namespace qlogcvx;
using testsup::C;
using testsup::P;

namespace {

std::vector<std::vector<long>> numeric_rows(const Triangle& t) {
    std::vector<std::vector<long>> out;
    for (const auto& row : t.rows()) {
        std::vector<long> r;
        for (const auto& p : row) {
            REQUIRE(p.degree() <= 0);
            Rational v = p.eval(Rational(0));
            r.push_back(static_cast<long>(v.get_d()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

TEST_SUITE("triangle") {

TEST_CASE("constant-data triangles") {
    auto aig = numeric_rows(generate(family_spec(FamilyId::aigner), 3));
    CHECK(aig == std::vector<std::vector<long>>{
                     {1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}});
    auto sha = numeric_rows(generate(family_spec(FamilyId::shapiro), 3));
    CHECK(sha == std::vector<std::vector<long>>{
                     {1}, {2, 1}, {5, 4, 1}, {14, 14, 6, 1}});
    // the (1, 2, 2) data produces these rows; nothing tridiagonal produces
    // rows beginning 1; 2,1; 6,4,1; 22,...
    auto sch =
        numeric_rows(generate(family_spec(FamilyId::schroeder_triangle), 3));
    CHECK(sch == std::vector<std::vector<long>>{
                     {1}, {1, 1}, {3, 3, 1}, {9, 11, 5, 1}});
}

TEST_CASE("first column extraction") {
    auto bell = first_column(generate(family_spec(FamilyId::bell), 3));
    CHECK(bell == std::vector<Poly>{C(1), P({0, 1}), P({0, 1, 1}),
                                    P({0, 1, 3, 1})});
    auto nar = first_column(generate(family_spec(FamilyId::narayanaA), 3));
    CHECK(nar[3] == P({0, 1, 3, 1}));
    auto aig = first_column(generate(family_spec(FamilyId::aigner), 5));
    CHECK(aig == std::vector<Poly>{C(1), C(1), C(2), C(5), C(14), C(42)});
}

TEST_CASE("diagonal is monic") {
    for (FamilyId id : {FamilyId::bell, FamilyId::eulerianA,
                        FamilyId::qschroeder, FamilyId::alt_eulerian}) {
        Triangle t = generate(family_spec(id), 8);
        for (unsigned long n = 0; n <= 8; ++n) CHECK(t.entry(n, n) == C(1));
    }
}

TEST_CASE("entries outside the support read as zero") {
    Triangle t = generate(family_spec(FamilyId::bell), 3);
    CHECK(t.entry(1, 2) == Poly());
    CHECK(t.entry(0, 5) == Poly());
}

TEST_CASE("row shape is validated") {
    CHECK_THROWS_AS(Triangle({{C(1)}, {C(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(Triangle({}), std::invalid_argument);
}

TEST_CASE("ladder data is rejected") {
    CHECK_THROWS_WITH_AS(generate(family_spec(FamilyId::elliptic_cn), 3),
                         doctest::Contains("contract"), std::domain_error);
}

TEST_CASE("row generating function transform") {
    auto a = first_column(row_genfun_transform(C(1), C(2), C(1), 4));
    CHECK(a == std::vector<Poly>{C(1), P({1, 1}), P({2, 3, 1}),
                                 P({5, 9, 5, 1}), P({14, 28, 20, 7, 1})});
    auto s = first_column(row_genfun_transform(C(2), C(2), C(1), 3));
    CHECK(s[3] == P({14, 14, 6, 1}));
    auto r = first_column(row_genfun_transform(C(1), C(2), C(2), 4));
    CHECK(r == std::vector<Poly>{C(1), P({1, 1}), P({3, 3, 1}),
                                 P({9, 11, 5, 1}), P({31, 41, 23, 7, 1})});
}

TEST_CASE("transform first column tracks the numeric row sums") {
    for (auto [e, g, h] : {std::tuple<long, long, long>{1, 2, 1},
                           {2, 2, 1},
                           {1, 2, 2},
                           {1, 3, 2}}) {
        auto spec = CoeffSeqSpec::make_jacobi(parse_expr(std::to_string(g)),
                                              parse_expr(std::to_string(h)),
                                              {{0, C(e)}}, {});
        Triangle numeric = generate(spec, 6);
        auto genfuns = first_column(row_genfun_transform(C(e), C(g), C(h), 6));
        for (unsigned long n = 0; n <= 6; ++n) {
            Rational row_sum;
            for (const auto& entry : numeric.row(n))
                row_sum += entry.eval(Rational(1));
            CHECK(genfuns[n].eval(Rational(1)) == row_sum);
        }
    }
}

TEST_CASE("transform rejects data with g below e") {
    CHECK_THROWS_AS(row_genfun_transform(C(2), C(1), C(1), 3),
                    std::invalid_argument);
}

TEST_CASE("numeric evaluation") {
    Triangle bell = generate(family_spec(FamilyId::bell), 4);
    auto at1 = eval_triangle(bell, Rational(1));
    std::vector<long> firstcol;
    for (const auto& row : at1) firstcol.push_back(
        static_cast<long>(row[0].get_d()));
    CHECK(firstcol == std::vector<long>{1, 1, 2, 5, 15});
    auto at0 = eval_triangle(bell, Rational(0));
    CHECK(at0[3][0] == 0);  // constant term of q + 3q^2 + q^3
    CHECK(at0[3][3] == 1);
}

TEST_CASE("first column equals the continued fraction expansion") {
    for (FamilyId id : {FamilyId::bell, FamilyId::qschroeder,
                        FamilyId::qdelannoy, FamilyId::euler_numbers,
                        FamilyId::tan_derivative}) {
        auto spec = family_spec(id);
        CHECK(first_column(generate(spec, 10)) == expand_jacobi(spec, 10));
    }
}

TEST_CASE("csv export") {
    CHECK(triangle_to_csv(generate(family_spec(FamilyId::aigner), 3)) ==
          "1\n1,1\n2,3,1\n5,9,5,1\n");
    CHECK(triangle_to_csv(generate(family_spec(FamilyId::bell), 2)) ==
          "1\nq,1\nq + q^2,1 + 2q,1\n");
}

TEST_CASE("json round trip") {
    Triangle t = generate(family_spec(FamilyId::qschroeder), 5);
    nlohmann::json j = t;
    CHECK(j.at("n_max") == 5);
    Triangle back = triangle_from_json(j);
    CHECK(back.rows() == t.rows());
}

}  // TEST_SUITE
