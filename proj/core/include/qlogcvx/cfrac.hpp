#pragma once

#include <vector>

#include "qlogcvx/poly.hpp"
#include "qlogcvx/seqspec.hpp"

namespace qlogcvx {

/// T_0..T_n_max of the fraction 1/(1 - g_0 x - h_1 x^2/(1 - g_1 x - ...)),
/// computed as the first column of the generated triangle (the two are the
/// same sequence; the series route exists in tests as the independent check).
std::vector<Poly> expand_jacobi(const CoeffSeqSpec& spec, unsigned long n_max);

/// Ladder-to-tridiagonal contraction: g_0 = t_1, g_i = t_2i + t_(2i+1),
/// h_i = t_(2i-1) t_2i for i >= 1. Works on the expression trees (the odd
/// formula is substituted at k+1), so the result is again a closed-form spec;
/// t exceptions induce g/h exceptions at the affected indices.
CoeffSeqSpec contract(const CoeffSeqSpec& spec);

/// S_0..S_n_max of 1/(1 - t_1 x/(1 - t_2 x/(1 - ...))), via contract.
std::vector<Poly> expand_stieltjes(const CoeffSeqSpec& spec,
                                   unsigned long n_max);

}  // namespace qlogcvx
