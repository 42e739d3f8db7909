#pragma once

#include "qlogcvx/poly.hpp"
#include "qlogcvx/seqspec.hpp"

namespace qlogcvx {

// Ground-truth generators, each computed from its own combinatorial or
// closed-form definition with no recurrence/continued-fraction machinery.
// Permutation walks are capped at size 10; larger arguments throw
// std::domain_error.

/// Sum over set partitions: coefficient of q^k is the Stirling number S(n,k).
Poly stirling_bell_poly(unsigned long n);
/// Sum of q^(descents + 1) over S_n for n >= 1; the empty permutation
/// contributes 1 (recorded index convention for the recurrence match).
Poly eulerian_descent_poly(unsigned long n);
/// Alternating-descent statistic over S_n: position i counts when i is odd
/// and a descent, or i is even and an ascent.
Poly alt_descent_poly(unsigned long n);
/// Number of down-up alternating permutations of [n].
Rational alternating_count(unsigned long n);

Poly qschroeder_poly(unsigned long n);
Poly qdelannoy_poly(unsigned long n);
Poly narayana_a_poly(unsigned long n);
Poly narayana_b_poly(unsigned long n);

/// P_0 = q, P_(n+1) = (1 + q^2) P_n'.
Poly hoffman_tan_poly(unsigned long n);
/// P_(n+1) / (1 + q^2); the division is exact for every n.
Poly tan_derivative_column(unsigned long n);

/// Double binomial sum with (q+1)/(q-1) powers over 2^(3(k+j)).
Poly boros_moll_poly(unsigned long n);

/// Dispatch by family. Families whose ground truth is a frozen numeric
/// sequence (aigner, shapiro, schroeder_triangle, elliptic_cn) have no
/// oracle here and throw std::domain_error.
Poly oracle(FamilyId id, unsigned long n);

}  // namespace qlogcvx
