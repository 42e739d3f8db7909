#include "qlogcvx/poly.hpp"

#include <cstddef>
#include <stdexcept>

namespace qlogcvx {

namespace {
const Rational kZero = 0;

// Kronecker substitution: pack integer polynomials into single mpz values,
// multiply once, unpack with signed digits. Far faster than schoolbook for
// the wide operands that show up in minors and L-iterates.
struct ZPacked {
    std::vector<Integer> c;
};

std::size_t max_coeff_bits(const std::vector<Integer>& v) {
    std::size_t b = 1;
    for (const auto& x : v) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
    return b;
}

std::vector<Integer> zmul_school(const std::vector<Integer>& a,
                                 const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mpz_sgn(a[i].get_mpz_t()) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

std::vector<Integer> zmul_kronecker(const std::vector<Integer>& a,
                                    const std::vector<Integer>& b) {
    // Digit width must majorize every result coefficient plus a sign bit:
    // coefficient bits bound by bits(a) + bits(b) + ceil(log2 #summands).
    std::size_t bits = max_coeff_bits(a) + max_coeff_bits(b) + 2;
    for (std::size_t n = std::min(a.size(), b.size()); n > 1; n = (n + 1) / 2)
        ++bits;
    bits = (bits + 63) / 64 * 64;  // limb-align, keeps unpacking cheap

    auto pack = [bits](const std::vector<Integer>& v) {
        Integer acc = 0;
        for (std::size_t i = v.size(); i-- > 0;) {
            mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), bits);
            acc += v[i];
        }
        return acc;
    };
    Integer prod = pack(a) * pack(b);

    // Signed unpack: a digit with the top bit set is a negative coefficient
    // that borrowed from the digit above.
    std::vector<Integer> out(a.size() + b.size() - 1);
    Integer digit, half, full;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
    mpz_setbit(full.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
    bool negative = mpz_sgn(prod.get_mpz_t()) < 0;
    if (negative) prod = -prod;  // unpack |prod|, negate digits at the end
    for (std::size_t i = 0; i < out.size(); ++i) {
        mpz_fdiv_r_2exp(digit.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        mpz_fdiv_q_2exp(prod.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
        if (digit >= half) {
            digit -= full;
            prod += 1;
        }
        out[i] = negative ? Integer(-digit) : digit;
    }
    return out;
}

bool all_integral(const std::vector<Rational>& v) {
    for (const auto& r : v)
        if (mpz_cmp_ui(r.get_den().get_mpz_t(), 1) != 0) return false;
    return true;
}
}  // namespace

namespace detail {
std::vector<Integer> zpoly_mul(const std::vector<Integer>& a,
                               const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < 12) return zmul_school(a, b);
    return zmul_kronecker(a, b);
}
}  // namespace detail

Poly::Poly(Rational constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::var() { return monomial(1, 1); }

Poly Poly::monomial(Rational c, unsigned long k) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_.back() = std::move(c);
    return p;
}

const Rational& Poly::coeff(unsigned long i) const {
    return i < c_.size() ? c_[i] : kZero;
}

bool Poly::is_q_nonneg() const {
    for (const auto& r : c_)
        if (sgn(r) < 0) return false;
    return true;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    // Integer operands of real width go through Kronecker packing.
    if (std::min(c_.size(), o.c_.size()) >= 12 && all_integral(c_) &&
        all_integral(o.c_)) {
        std::vector<Integer> a(c_.size()), b(o.c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) a[i] = c_[i].get_num();
        for (std::size_t i = 0; i < o.c_.size(); ++i) b[i] = o.c_[i].get_num();
        auto z = detail::zpoly_mul(a, b);
        c_.assign(z.size(), Rational(0));
        for (std::size_t i = 0; i < z.size(); ++i) c_[i] = Rational(z[i]);
        trim();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& r : c_) r *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& r : p.c_) r = -r;
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = Rational(acc * x + c_[i]);
    return acc;
}

Poly derivative(const Poly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Poly();
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = Rational(c[i] * static_cast<long>(i));
    return Poly(std::move(out));
}

Poly compose(const Poly& p, const Poly& inner) {
    Poly acc;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= inner;
        acc += Poly(c[i]);
    }
    return acc;
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(out);
}

Poly compose_linear_fraction(const Poly& p, unsigned long m) {
    if (p.degree() > static_cast<long>(m))
        throw std::invalid_argument(
            "compose_linear_fraction: need deg p <= " + std::to_string(m) +
            ", got " + std::to_string(p.degree()));
    Poly one_plus(std::vector<Rational>{1, 1});
    Poly one_minus(std::vector<Rational>{1, -1});
    std::vector<Poly> up(m + 1), down(m + 1);
    up[0] = Poly(Rational(1));
    down[0] = Poly(Rational(1));
    for (unsigned long i = 1; i <= m; ++i) {
        up[i] = up[i - 1] * one_plus;
        down[i] = down[i - 1] * one_minus;
    }
    Poly out;
    for (unsigned long j = 0; j <= m; ++j) {
        if (p.coeff(j) == 0) continue;
        out += p.coeff(j) * (up[j] * down[m - j]);
    }
    return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return Poly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Rational> rem(a.coeffs());
    const auto& d = b.coeffs();
    std::vector<Rational> quot(rem.size() - d.size() + 1, Rational(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = rem[i + d.size() - 1] / d.back();
        if (c != 0) {
            quot[i] = c;
            for (std::size_t j = 0; j < d.size(); ++j)
                rem[i + j] -= Rational(c * d[j]);
        }
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return Poly(std::move(quot));
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rational a = c[i];
        if (out.empty()) {
            if (sgn(a) < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
            if (sgn(a) < 0) a = -a;
        }
        bool unit = a == 1 && i > 0;
        if (!unit) out += rat_str(a);
        if (i >= 1) {
            out += "q";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::size_t low_order(const Poly& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return i;
    return static_cast<std::size_t>(-1);
}

void to_json(nlohmann::json& j, const Poly& p) {
    j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(rat_str(c));
}

void from_json(const nlohmann::json& j, Poly& p) {
    std::vector<Rational> c;
    for (const auto& item : j) c.push_back(rat_parse(item.get<std::string>()));
    p = Poly(std::move(c));
}

Rational rat_parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        Rational r;
        if (slash == std::string::npos) {
            r = Rational(Integer(text));
        } else {
            Integer num(text.substr(0, slash));
            Integer den(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            r = Rational(num, den);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
}

std::string rat_str(const Rational& r) {
    if (mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace qlogcvx
