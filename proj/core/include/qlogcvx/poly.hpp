#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qlogcvx/rational.hpp"

namespace qlogcvx {

/// Dense univariate polynomial in q over the rationals.
///
/// Invariant: the coefficient vector is either empty (the zero polynomial)
/// or ends in a nonzero coefficient. degree() of zero is -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);  // trims trailing zeros

    static Poly var();                       // q
    static Poly monomial(Rational c, unsigned long k);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of q^i; zero beyond the degree.
    const Rational& coeff(unsigned long i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    /// True iff every coefficient is >= 0. This is the partial order >=_q
    /// against zero; a >=_q b is (a - b).is_q_nonneg().
    bool is_q_nonneg() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;  // Horner

private:
    std::vector<Rational> c_;
    void trim();
};

Rational binomial(unsigned long n, unsigned long k);

Poly derivative(const Poly& p);
/// p(inner) by Horner over Poly.
Poly compose(const Poly& p, const Poly& inner);
/// (1-q)^m * p((1+q)/(1-q)) expanded as sum_j p_j (1+q)^j (1-q)^(m-j),
/// which is a polynomial precisely because deg p <= m is required
/// (std::invalid_argument otherwise).
Poly compose_linear_fraction(const Poly& p, unsigned long m);
/// Exact quotient a / b, or nullopt when b does not divide a (or b == 0).
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Canonical text: "0", "1 - 2q + q^3", coefficients printed as n or n/d,
/// unit coefficients dropped before q powers. Stable across runs.
std::string to_string(const Poly& p);

/// Lowest index with a nonzero coefficient; npos for the zero polynomial.
std::size_t low_order(const Poly& p);

void to_json(nlohmann::json& j, const Poly& p);    // list of "n"/"n/d" strings
void from_json(const nlohmann::json& j, Poly& p);

}  // namespace qlogcvx
