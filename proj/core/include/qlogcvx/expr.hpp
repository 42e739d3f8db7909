#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "qlogcvx/bipoly.hpp"
#include "qlogcvx/poly.hpp"

namespace qlogcvx {

/// Immutable expression tree over the index variable k and the formal
/// variable q. This is how coefficient sequences are described symbolically:
/// closed under +, -, *, ^nat with rational leaves, so substitutions like
/// k -> k+1 stay exact and re-printable.
class BivariateExpr {
public:
    enum class Kind { Const, VarK, VarQ, Add, Sub, Mul, Pow };

    static BivariateExpr constant(Rational value);
    static BivariateExpr var_k();
    static BivariateExpr var_q();
    static BivariateExpr add(BivariateExpr lhs, BivariateExpr rhs);
    static BivariateExpr sub(BivariateExpr lhs, BivariateExpr rhs);
    static BivariateExpr mul(BivariateExpr lhs, BivariateExpr rhs);
    static BivariateExpr pow(BivariateExpr base, unsigned long exp);

    Kind kind() const;
    const Rational& value() const;   // Const only
    BivariateExpr lhs() const;       // Add/Sub/Mul; Pow base
    BivariateExpr rhs() const;       // Add/Sub/Mul
    unsigned long exp() const;       // Pow only

    /// Structural equality (no algebraic normalization).
    bool operator==(const BivariateExpr& o) const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit BivariateExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

struct ExprParseError : std::invalid_argument {
    ExprParseError(const std::string& msg, std::size_t position);
    std::size_t position;
};

/// Grammar (whitespace insignificant, no unary minus):
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := nat | nat '/' nat | 'k' | 'q' | '(' expr ')'
/// Throws ExprParseError with the byte offset of the first bad token.
BivariateExpr parse_expr(const std::string& text);

/// Round-trips through parse_expr to an equal tree whenever every constant
/// is nonnegative (negative constants print as "(0 - c)").
std::string to_string(const BivariateExpr& e);

Poly eval_at_k(const BivariateExpr& e, unsigned long k);
BiPoly eval_bipoly(const BivariateExpr& e);
/// Substitute k -> k + j.
BivariateExpr shift_k(const BivariateExpr& e, unsigned long j);
bool contains_k(const BivariateExpr& e);

}  // namespace qlogcvx
