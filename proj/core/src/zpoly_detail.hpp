#pragma once

#include <vector>

#include "qlogcvx/rational.hpp"

// Integer-polynomial kernel shared by poly multiplication and the
// fraction-free elimination in polymatrix. Not installed.
namespace qlogcvx::detail {

using ZPoly = std::vector<Integer>;  // dense, empty = zero, trailing nonzero

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
void ztrim(ZPoly& a);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
/// Exact quotient; throws std::logic_error if the division is not exact
/// (callers rely on ring identities that guarantee exactness).
ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b);

}  // namespace qlogcvx::detail
