#include "qlogcvx/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qlogcvx {

namespace {
constexpr unsigned long kPermutationCap = 10;

void check_cap(unsigned long n) {
    if (n > kPermutationCap)
        throw std::domain_error("enumeration oracle capped at permutation size " +
                                std::to_string(kPermutationCap) + ", got " +
                                std::to_string(n));
}

template <typename Visit>
void for_each_permutation(unsigned long n, Visit visit) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 1u);
    do {
        visit(p);
    } while (std::next_permutation(p.begin(), p.end()));
}
}  // namespace

Poly stirling_bell_poly(unsigned long n) {
    // S(n,k) = S(n-1,k-1) + k S(n-1,k)
    std::vector<Rational> s{1};  // row 0
    for (unsigned long r = 1; r <= n; ++r) {
        std::vector<Rational> next(r + 1, Rational(0));
        for (unsigned long k = 0; k < s.size(); ++k) {
            if (s[k] == 0) continue;
            next[k + 1] += s[k];
            next[k] += Rational(s[k] * static_cast<long>(k));
        }
        s = std::move(next);
    }
    return Poly(std::move(s));
}

Poly eulerian_descent_poly(unsigned long n) {
    check_cap(n);
    if (n == 0) return Poly(Rational(1));
    std::vector<Rational> counts(n + 1, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& p) {
        unsigned long des = 0;
        for (unsigned long i = 0; i + 1 < p.size(); ++i)
            if (p[i] > p[i + 1]) ++des;
        counts[des + 1] += 1;
    });
    return Poly(std::move(counts));
}

Poly alt_descent_poly(unsigned long n) {
    check_cap(n);
    std::vector<Rational> counts(n == 0 ? 1 : n, Rational(0));
    for_each_permutation(n, [&](const std::vector<unsigned>& p) {
        unsigned long stat = 0;
        for (unsigned long i = 1; i < p.size(); ++i) {
            bool descent = p[i - 1] > p[i];
            if (i % 2 ? descent : !descent) ++stat;
        }
        counts[stat] += 1;
    });
    return Poly(std::move(counts));
}

Rational alternating_count(unsigned long n) {
    check_cap(n);
    Rational total = 0;
    for_each_permutation(n, [&](const std::vector<unsigned>& p) {
        for (unsigned long i = 1; i < p.size(); ++i) {
            bool down = p[i - 1] > p[i];
            if (i % 2 ? !down : down) return;
        }
        total += 1;
    });
    return total;
}

Poly qschroeder_poly(unsigned long n) {
    Poly out;
    for (unsigned long k = 0; k <= n; ++k)
        out += Poly::monomial(
            Rational(binomial(n + k, n - k) * binomial(2 * k, k) /
                     Rational(static_cast<long>(k + 1))),
            k);
    return out;
}

Poly qdelannoy_poly(unsigned long n) {
    Poly out;
    for (unsigned long k = 0; k <= n; ++k)
        out += Poly::monomial(
            Rational(binomial(n + k, n - k) * binomial(2 * k, k)), k);
    return out;
}

Poly narayana_a_poly(unsigned long n) {
    if (n == 0) return Poly(Rational(1));
    Poly out;
    for (unsigned long k = 1; k <= n; ++k)
        out += Poly::monomial(
            Rational(binomial(n, k) * binomial(n, k - 1) /
                     Rational(static_cast<long>(n))),
            k);
    return out;
}

Poly narayana_b_poly(unsigned long n) {
    Poly out;
    for (unsigned long k = 0; k <= n; ++k) {
        Rational b = binomial(n, k);
        out += Poly::monomial(Rational(b * b), k);
    }
    return out;
}

Poly hoffman_tan_poly(unsigned long n) {
    Poly p = Poly::var();
    Poly weight = Poly(std::vector<Rational>{1, 0, 1});  // 1 + q^2
    for (unsigned long i = 0; i < n; ++i) p = weight * derivative(p);
    return p;
}

Poly tan_derivative_column(unsigned long n) {
    Poly weight = Poly(std::vector<Rational>{1, 0, 1});
    auto quotient = divide_exact(hoffman_tan_poly(n + 1), weight);
    if (!quotient)
        throw std::logic_error("tan polynomial not divisible by 1 + q^2");
    return *quotient;
}

Poly boros_moll_poly(unsigned long n) {
    Poly q_plus(std::vector<Rational>{1, 1});
    Poly q_minus(std::vector<Rational>{-1, 1});
    Poly out;
    for (unsigned long j = 0; j <= n; ++j) {
        Poly jp(Rational(1));
        for (unsigned long t = 0; t < j; ++t) jp *= q_plus;
        for (unsigned long k = 0; k + j <= n; ++k) {
            Rational c = binomial(2 * n + 1, 2 * j) * binomial(n - j, k) *
                         binomial(2 * (k + j), k + j);
            if (c == 0) continue;
            Integer denom;
            mpz_ui_pow_ui(denom.get_mpz_t(), 2, 3 * (k + j));
            Poly term = jp * Rational(c / denom);
            for (unsigned long t = 0; t < k; ++t) term *= q_minus;
            out += term;
        }
    }
    return out;
}

Poly oracle(FamilyId id, unsigned long n) {
    switch (id) {
        case FamilyId::bell: return stirling_bell_poly(n);
        case FamilyId::eulerianA: return eulerian_descent_poly(n);
        case FamilyId::qschroeder: return qschroeder_poly(n);
        case FamilyId::qdelannoy: return qdelannoy_poly(n);
        case FamilyId::narayanaA: return narayana_a_poly(n);
        case FamilyId::narayanaB: return narayana_b_poly(n);
        case FamilyId::alt_eulerian: return alt_descent_poly(n);
        case FamilyId::euler_numbers: return Poly(alternating_count(n));
        case FamilyId::tan_derivative: return tan_derivative_column(n);
        case FamilyId::boros_moll: return boros_moll_poly(n);
        default:
            throw std::domain_error(
                "family '" + std::string(family_info(id).name) +
                "' has no independent oracle; its values are frozen in tests");
    }
}

}  // namespace qlogcvx
