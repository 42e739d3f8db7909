#include "qlogcvx/bipoly.hpp"

namespace qlogcvx {

namespace {
const Poly kZeroPoly;
}

BiPoly::BiPoly(Poly constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::var_k() {
    BiPoly p;
    p.c_ = {Poly(), Poly(Rational(1))};
    return p;
}

const Poly& BiPoly::coeff(unsigned long i) const {
    return i < c_.size() ? c_[i] : kZeroPoly;
}

bool BiPoly::is_q_nonneg() const {
    for (const auto& p : c_)
        if (!p.is_q_nonneg()) return false;
    return true;
}

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Poly> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly p(*this);
    for (auto& x : p.c_) x = -x;
    return p;
}

Poly BiPoly::eval_k(const Rational& k) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= Poly(k);
        acc += c_[i];
    }
    return acc;
}

BiPoly BiPoly::shift_k(unsigned long j) const {
    if (j == 0 || c_.empty()) return *this;
    // (k + j)^i expanded: coeff of k^t picks up c_i * C(i,t) * j^(i-t).
    std::vector<Poly> out(c_.size());
    Rational jr(static_cast<long>(j));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::vector<Rational> binom(i + 1);
        binom[0] = 1;
        for (std::size_t t = 1; t <= i; ++t)
            binom[t] = Rational(binom[t - 1] * static_cast<long>(i - t + 1) /
                                static_cast<long>(t));
        Rational jpow = 1;
        for (std::size_t t = i + 1; t-- > 0;) {
            out[t] += c_[i] * Rational(binom[t] * jpow);
            jpow *= jr;
        }
    }
    return BiPoly(std::move(out));
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c[i]) + ")";
        if (i >= 1) {
            out += "k";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qlogcvx
