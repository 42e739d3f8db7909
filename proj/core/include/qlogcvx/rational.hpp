#pragma once

#include <gmpxx.h>

#include <string>

namespace qlogcvx {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator, zero as 0/1), which is exactly the invariant the
// rest of the library leans on, so we use it directly.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d", optional leading '-'. Throws std::invalid_argument.
Rational rat_parse(const std::string& text);

// "n" when den == 1, else "n/d".
std::string rat_str(const Rational& r);

}  // namespace qlogcvx
