#include "qlogcvx/series.hpp"

#include <stdexcept>

namespace qlogcvx {

namespace {
void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) +
                                    ": series order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

// Unit of Q[q]: nonzero constant.
bool is_unit(const Poly& p) { return p.degree() == 0; }
}  // namespace

Series::Series(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs a constant term");
}

Series Series::truncated(unsigned long new_order) const {
    if (new_order > order())
        throw std::invalid_argument("truncated: cannot extend a series");
    Series out(new_order);
    for (unsigned long i = 0; i <= new_order; ++i) out.c_[i] = c_[i];
    return out;
}

Series s_add(const Series& a, const Series& b) {
    require_same_order(a, b, "s_add");
    Series out(a.order());
    for (unsigned long i = 0; i <= a.order(); ++i)
        out.coeff(i) = a.coeff(i) + b.coeff(i);
    return out;
}

Series s_sub(const Series& a, const Series& b) {
    require_same_order(a, b, "s_sub");
    Series out(a.order());
    for (unsigned long i = 0; i <= a.order(); ++i)
        out.coeff(i) = a.coeff(i) - b.coeff(i);
    return out;
}

Series s_mul(const Series& a, const Series& b) {
    require_same_order(a, b, "s_mul");
    Series out(a.order());
    for (unsigned long i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (unsigned long j = 0; i + j <= a.order(); ++j)
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return out;
}

Series s_div(const Series& a, const Series& b) {
    require_same_order(a, b, "s_div");
    if (!is_unit(b.coeff(0)))
        throw std::domain_error(
            "s_div: divisor constant term must be a nonzero rational "
            "constant, got " +
            to_string(b.coeff(0)));
    Rational inv = Rational(1) / b.coeff(0).coeff(0);
    Series out(a.order());
    for (unsigned long n = 0; n <= a.order(); ++n) {
        Poly acc = a.coeff(n);
        for (unsigned long i = 0; i < n; ++i)
            acc -= out.coeff(i) * b.coeff(n - i);
        out.coeff(n) = acc * inv;
    }
    return out;
}

Series s_sqrt(const Series& a) {
    if (!(a.coeff(0) == Poly(Rational(1))))
        throw std::domain_error("s_sqrt: constant term must be 1, got " +
                                to_string(a.coeff(0)));
    Series out(a.order());
    out.coeff(0) = Poly(Rational(1));
    Rational half(1, 2);
    for (unsigned long n = 1; n <= a.order(); ++n) {
        Poly acc = a.coeff(n);
        for (unsigned long i = 1; i < n; ++i)
            acc -= out.coeff(i) * out.coeff(n - i);
        out.coeff(n) = acc * half;
    }
    return out;
}

Series gf_closed_form(const Poly& a, const Poly& s, const Poly& t,
                      unsigned long order) {
    const unsigned long work = order + 2;

    Series radicand(work);
    radicand.coeff(0) = Poly(Rational(1));
    radicand.coeff(1) = -(s + s);
    radicand.coeff(2) = s * s - Rational(4) * t;
    Series root = s_sqrt(radicand);

    Series num(work);
    num.coeff(0) = Poly(Rational(1));
    num.coeff(1) = -(a + a - s);
    num = s_sub(num, root);

    Series den(work);
    den.coeff(1) = Rational(2) * (s - a);
    den.coeff(2) = Rational(2) * (a * a - a * s + t);

    unsigned long val = 0;
    while (val <= work && den.coeff(val).is_zero()) ++val;
    if (val > work)
        throw std::domain_error("gf_closed_form: denominator vanishes (s = a "
                                "and a^2 - as + t = 0)");
    for (unsigned long i = 0; i < val; ++i)
        if (!num.coeff(i).is_zero())
            throw std::domain_error(
                "gf_closed_form: numerator order below denominator order");
    if (!is_unit(den.coeff(val)))
        throw std::domain_error(
            "gf_closed_form: pivot coefficient " + to_string(den.coeff(val)) +
            " is not a unit of Q[q]; quotient is not a series over Q[q]");

    Series num_s(order), den_s(order);
    for (unsigned long i = 0; i <= order; ++i) {
        num_s.coeff(i) = num.coeff(i + val);
        den_s.coeff(i) = den.coeff(i + val);
    }
    return s_div(num_s, den_s);
}

std::string to_string(const Series& s) {
    std::string out;
    for (unsigned long i = 0; i <= s.order(); ++i) {
        if (i) out += " + ";
        out += "(" + to_string(s.coeff(i)) + ")";
        if (i == 1) out += "x";
        if (i >= 2) out += "x^" + std::to_string(i);
    }
    return out;
}

void to_json(nlohmann::json& j, const Series& s) {
    j = nlohmann::json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

void from_json(const nlohmann::json& j, Series& s) {
    auto coeffs = j.at("coeffs").get<std::vector<Poly>>();
    s = Series(std::move(coeffs));
    if (j.contains("order") && j.at("order").get<unsigned long>() != s.order())
        throw std::invalid_argument("series json: order/coeffs mismatch");
}

}  // namespace qlogcvx
