#pragma once

#include <string>
#include <vector>

#include "qlogcvx/poly.hpp"

namespace qlogcvx {

/// Polynomial in the index variable k whose coefficients are Poly in q.
/// Used for the symbolic (generic-regime) residuals of the criteria, where
/// a verdict must hold for every k at once.
///
/// Invariant: coefficient vector empty (zero) or trailing entry nonzero.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(Poly constant);
    explicit BiPoly(std::vector<Poly> coeffs);  // index = power of k

    static BiPoly var_k();

    long degree_k() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Poly& coeff(unsigned long i) const;
    const std::vector<Poly>& coeffs() const { return c_; }

    /// Every q-coefficient of every k-power nonnegative. Sufficient for
    /// "nonneg at every k >= 0" but not necessary; callers that need the
    /// sharp per-k answer substitute k first.
    bool is_q_nonneg() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly operator-() const;
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    Poly eval_k(const Rational& k) const;
    /// Substitute k -> k + j (binomial expansion).
    BiPoly shift_k(unsigned long j) const;

private:
    std::vector<Poly> c_;
    void trim();
};

/// "(q) + (1 + q)k + (2)k^2" style text; q-coefficients parenthesized.
std::string to_string(const BiPoly& p);

}  // namespace qlogcvx
