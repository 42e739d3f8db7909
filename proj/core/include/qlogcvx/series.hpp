#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qlogcvx/poly.hpp"

namespace qlogcvx {

/// Truncated power series in x with Poly-in-q coefficients.
/// Order is the highest retained power; a Series of order N stores exactly
/// N+1 coefficients. Arithmetic demands matching orders (resize explicitly
/// with truncated()) so silent precision loss cannot happen.
class Series {
public:
    explicit Series(unsigned long order) : c_(order + 1) {}
    /// coeffs.size() determines the order (must be nonempty).
    explicit Series(std::vector<Poly> coeffs);

    unsigned long order() const { return c_.size() - 1; }
    const Poly& coeff(unsigned long i) const { return c_.at(i); }
    Poly& coeff(unsigned long i) { return c_.at(i); }
    const std::vector<Poly>& coeffs() const { return c_; }

    Series truncated(unsigned long new_order) const;  // new_order <= order

    bool operator==(const Series& o) const { return c_ == o.c_; }

private:
    std::vector<Poly> c_;
};

// All binary ops throw std::invalid_argument on order mismatch.
Series s_add(const Series& a, const Series& b);
Series s_sub(const Series& a, const Series& b);
Series s_mul(const Series& a, const Series& b);  // truncated to common order

/// a / b. Requires the constant term of b to be a unit of Q[q], i.e. a
/// nonzero rational constant; throws std::domain_error otherwise.
Series s_div(const Series& a, const Series& b);

/// Square root with constant term 1 (required; std::domain_error otherwise).
/// c_n = (a_n - sum_{0<i<n} c_i c_{n-i}) / 2.
Series s_sqrt(const Series& a);

/// Generating function of the first-column sequence for coefficient data
/// that is constant away from the origin: g_0 = a, g_k = s (k >= 1),
/// h_k = t (k >= 1). Closed form
///   (1 - (2a-s)x - sqrt(1 - 2sx + (s^2-4t)x^2)) / (2(s-a)x + 2(a^2-as+t)x^2)
/// evaluated by series sqrt and division after cancelling the common powers
/// of x. The shifted denominator must start with a unit of Q[q]; otherwise
/// std::domain_error (the quotient need not be a power series over Q[q]).
Series gf_closed_form(const Poly& a, const Poly& s, const Poly& t,
                      unsigned long order);

/// "(1) + (q)x + (q + q^2)x^2" style text, every coefficient parenthesized.
std::string to_string(const Series& s);

void to_json(nlohmann::json& j, const Series& s);
void from_json(const nlohmann::json& j, Series& s);

}  // namespace qlogcvx
