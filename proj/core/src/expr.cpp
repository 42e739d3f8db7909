#include "qlogcvx/expr.hpp"

#include <cctype>

namespace qlogcvx {

struct BivariateExpr::Node {
    Kind kind;
    Rational value;                      // Const
    std::shared_ptr<const Node> a, b;    // children
    unsigned long exp = 0;               // Pow
};

BivariateExpr BivariateExpr::constant(Rational value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = std::move(value);
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::var_k() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::VarK;
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::var_q() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::VarQ;
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::add(BivariateExpr lhs, BivariateExpr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Add;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::sub(BivariateExpr lhs, BivariateExpr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sub;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::mul(BivariateExpr lhs, BivariateExpr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mul;
    n->a = std::move(lhs.node_);
    n->b = std::move(rhs.node_);
    return BivariateExpr(std::move(n));
}

BivariateExpr BivariateExpr::pow(BivariateExpr base, unsigned long exp) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->a = std::move(base.node_);
    n->exp = exp;
    return BivariateExpr(std::move(n));
}

BivariateExpr::Kind BivariateExpr::kind() const { return node_->kind; }
const Rational& BivariateExpr::value() const { return node_->value; }
unsigned long BivariateExpr::exp() const { return node_->exp; }

BivariateExpr BivariateExpr::lhs() const { return BivariateExpr(node_->a); }
BivariateExpr BivariateExpr::rhs() const { return BivariateExpr(node_->b); }

bool BivariateExpr::operator==(const BivariateExpr& o) const {
    const Node *x = node_.get(), *y = o.node_.get();
    if (x == y) return true;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Kind::Const: return x->value == y->value;
        case Kind::VarK:
        case Kind::VarQ: return true;
        case Kind::Pow: return x->exp == y->exp && lhs() == o.lhs();
        default: return lhs() == o.lhs() && rhs() == o.rhs();
    }
}

ExprParseError::ExprParseError(const std::string& msg, std::size_t pos)
    : std::invalid_argument("parse error at position " + std::to_string(pos) +
                            ": " + msg),
      position(pos) {}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    BivariateExpr run() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ExprParseError(
                std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Integer nat(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) throw ExprParseError(std::string("expected ") + what, start);
        return Integer(s_.substr(start, pos_ - start));
    }

    BivariateExpr expr() {
        auto e = term();
        for (;;) {
            if (accept('+'))
                e = BivariateExpr::add(std::move(e), term());
            else if (accept('-'))
                e = BivariateExpr::sub(std::move(e), term());
            else
                return e;
        }
    }

    BivariateExpr term() {
        auto e = factor();
        while (accept('*')) e = BivariateExpr::mul(std::move(e), factor());
        return e;
    }

    BivariateExpr factor() {
        auto base = atom();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        Integer e = nat("exponent");
        if (!e.fits_ulong_p())
            throw ExprParseError("exponent does not fit in unsigned long", at);
        return BivariateExpr::pow(std::move(base), e.get_ui());
    }

    BivariateExpr atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ExprParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == 'k') {
            ++pos_;
            return BivariateExpr::var_k();
        }
        if (c == 'q') {
            ++pos_;
            return BivariateExpr::var_q();
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!accept(')')) throw ExprParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = nat("number");
            if (accept('/')) {
                std::size_t at = pos_;
                Integer den = nat("denominator");
                if (den == 0) throw ExprParseError("zero denominator", at);
                Rational r(num, den);
                r.canonicalize();
                return BivariateExpr::constant(std::move(r));
            }
            return BivariateExpr::constant(Rational(num));
        }
        throw ExprParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

// Precedence for printing: 0 additive, 1 multiplicative, 2 power, 3 atom.
int prec(const BivariateExpr& e) {
    switch (e.kind()) {
        case BivariateExpr::Kind::Add:
        case BivariateExpr::Kind::Sub: return 0;
        case BivariateExpr::Kind::Mul: return 1;
        case BivariateExpr::Kind::Pow: return 2;
        default: return 3;
    }
}

void print(const BivariateExpr& e, int min_prec, std::string& out) {
    bool parens = prec(e) < min_prec;
    if (parens) out += "(";
    switch (e.kind()) {
        case BivariateExpr::Kind::Const:
            if (sgn(e.value()) < 0) {
                // not expressible as a literal; emit an equivalent tree
                out += "(0 - " + rat_str(Rational(-e.value())) + ")";
            } else {
                out += rat_str(e.value());
            }
            break;
        case BivariateExpr::Kind::VarK: out += "k"; break;
        case BivariateExpr::Kind::VarQ: out += "q"; break;
        case BivariateExpr::Kind::Add:
            print(e.lhs(), 0, out);
            out += " + ";
            print(e.rhs(), 1, out);  // right-nested additive needs parens
            break;
        case BivariateExpr::Kind::Sub:
            print(e.lhs(), 0, out);
            out += " - ";
            print(e.rhs(), 1, out);
            break;
        case BivariateExpr::Kind::Mul:
            print(e.lhs(), 1, out);
            out += "*";
            print(e.rhs(), 2, out);  // right-nested product needs parens
            break;
        case BivariateExpr::Kind::Pow:
            print(e.lhs(), 3, out);
            out += "^" + std::to_string(e.exp());
            break;
    }
    if (parens) out += ")";
}

Poly pow_poly(Poly base, unsigned long e) {
    Poly acc(Rational(1));
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

BiPoly pow_bipoly(BiPoly base, unsigned long e) {
    BiPoly acc{Poly(Rational(1))};
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

}  // namespace

BivariateExpr parse_expr(const std::string& text) { return Parser(text).run(); }

std::string to_string(const BivariateExpr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

Poly eval_at_k(const BivariateExpr& e, unsigned long k) {
    using K = BivariateExpr::Kind;
    switch (e.kind()) {
        case K::Const: return Poly(e.value());
        case K::VarK: return Poly(Rational(static_cast<long>(k)));
        case K::VarQ: return Poly::var();
        case K::Add: return eval_at_k(e.lhs(), k) + eval_at_k(e.rhs(), k);
        case K::Sub: return eval_at_k(e.lhs(), k) - eval_at_k(e.rhs(), k);
        case K::Mul: return eval_at_k(e.lhs(), k) * eval_at_k(e.rhs(), k);
        case K::Pow: return pow_poly(eval_at_k(e.lhs(), k), e.exp());
    }
    throw std::logic_error("unreachable");
}

BiPoly eval_bipoly(const BivariateExpr& e) {
    using K = BivariateExpr::Kind;
    switch (e.kind()) {
        case K::Const: return BiPoly(Poly(e.value()));
        case K::VarK: return BiPoly::var_k();
        case K::VarQ: return BiPoly(Poly::var());
        case K::Add: return eval_bipoly(e.lhs()) + eval_bipoly(e.rhs());
        case K::Sub: return eval_bipoly(e.lhs()) - eval_bipoly(e.rhs());
        case K::Mul: return eval_bipoly(e.lhs()) * eval_bipoly(e.rhs());
        case K::Pow: return pow_bipoly(eval_bipoly(e.lhs()), e.exp());
    }
    throw std::logic_error("unreachable");
}

BivariateExpr shift_k(const BivariateExpr& e, unsigned long j) {
    if (j == 0) return e;
    using K = BivariateExpr::Kind;
    switch (e.kind()) {
        case K::Const:
        case K::VarQ: return e;
        case K::VarK:
            return BivariateExpr::add(
                BivariateExpr::var_k(),
                BivariateExpr::constant(Rational(static_cast<long>(j))));
        case K::Add:
            return BivariateExpr::add(shift_k(e.lhs(), j), shift_k(e.rhs(), j));
        case K::Sub:
            return BivariateExpr::sub(shift_k(e.lhs(), j), shift_k(e.rhs(), j));
        case K::Mul:
            return BivariateExpr::mul(shift_k(e.lhs(), j), shift_k(e.rhs(), j));
        case K::Pow: return BivariateExpr::pow(shift_k(e.lhs(), j), e.exp());
    }
    throw std::logic_error("unreachable");
}

bool contains_k(const BivariateExpr& e) {
    using K = BivariateExpr::Kind;
    switch (e.kind()) {
        case K::Const:
        case K::VarQ: return false;
        case K::VarK: return true;
        case K::Pow: return contains_k(e.lhs());
        default: return contains_k(e.lhs()) || contains_k(e.rhs());
    }
}

}  // namespace qlogcvx
