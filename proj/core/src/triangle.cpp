#include "qlogcvx/triangle.hpp"

#include <stdexcept>

namespace qlogcvx {

namespace {
const Poly kZeroPoly;

// Poly constant in k lifted to the generic-expression form the spec type
// wants; coefficients must be >=_q 0 only where the caller says so.
BivariateExpr poly_to_expr(const Poly& p) {
    BivariateExpr acc = BivariateExpr::constant(p.coeff(0));
    const auto& c = p.coeffs();
    for (unsigned long i = 1; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        acc = BivariateExpr::add(
            acc, BivariateExpr::mul(BivariateExpr::constant(c[i]),
                                    BivariateExpr::pow(BivariateExpr::var_q(), i)));
    }
    return acc;
}
}  // namespace

Triangle::Triangle(std::vector<std::vector<Poly>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("triangle needs row 0");
    for (std::size_t n = 0; n < rows_.size(); ++n)
        if (rows_[n].size() != n + 1)
            throw std::invalid_argument("triangle row " + std::to_string(n) +
                                        " must have " + std::to_string(n + 1) +
                                        " entries");
}

const Poly& Triangle::entry(unsigned long n, unsigned long k) const {
    if (n >= rows_.size() || k > n) return kZeroPoly;
    return rows_[n][k];
}

Triangle generate(const CoeffSeqSpec& spec, unsigned long n_max) {
    if (spec.kind() != SpecKind::jacobi)
        throw std::domain_error(
            "generate needs a jacobi spec; contract the stieltjes data first");
    std::vector<Poly> g(n_max + 1), h(n_max + 1);
    for (unsigned long k = 0; k <= n_max; ++k) g[k] = spec.g(k);
    for (unsigned long k = 1; k <= n_max; ++k) h[k] = spec.h(k);

    std::vector<std::vector<Poly>> rows(n_max + 1);
    rows[0] = {Poly(Rational(1))};
    for (unsigned long n = 1; n <= n_max; ++n) {
        rows[n].resize(n + 1);
        const auto& prev = rows[n - 1];
        for (unsigned long k = 0; k <= n; ++k) {
            Poly acc = k ? prev[k - 1] : Poly();
            if (k < prev.size()) acc += g[k] * prev[k];
            if (k + 1 < prev.size()) acc += h[k + 1] * prev[k + 1];
            rows[n][k] = std::move(acc);
        }
    }
    return Triangle(std::move(rows));
}

std::vector<Poly> first_column(const Triangle& t) {
    std::vector<Poly> out;
    out.reserve(t.n_max() + 1);
    for (const auto& row : t.rows()) out.push_back(row.front());
    return out;
}

Triangle row_genfun_transform(const Poly& e, const Poly& g, const Poly& h,
                              unsigned long n_max) {
    Poly ge = g - e;
    if (!ge.is_q_nonneg())
        throw std::invalid_argument(
            "row_genfun_transform: g - e must be >=_q 0, got " + to_string(ge));
    Poly g0 = e + Poly::var();
    Poly h1 = ge * Poly::var() + h;
    auto spec = CoeffSeqSpec::make_jacobi(poly_to_expr(g), poly_to_expr(h),
                                          {{0, g0}}, {{1, h1}});
    return generate(spec, n_max);
}

std::vector<std::vector<Rational>> eval_triangle(const Triangle& t,
                                                 const Rational& x) {
    std::vector<std::vector<Rational>> out;
    out.reserve(t.n_max() + 1);
    for (const auto& row : t.rows()) {
        std::vector<Rational> vals;
        vals.reserve(row.size());
        for (const auto& p : row) vals.push_back(p.eval(x));
        out.push_back(std::move(vals));
    }
    return out;
}

std::string triangle_to_csv(const Triangle& t) {
    std::string out;
    for (const auto& row : t.rows()) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ",";
            out += to_string(row[k]);
        }
        out += "\n";
    }
    return out;
}

void to_json(nlohmann::json& j, const Triangle& t) {
    j = nlohmann::json{{"n_max", t.n_max()}, {"rows", t.rows()}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
    return Triangle(j.at("rows").get<std::vector<std::vector<Poly>>>());
}

}  // namespace qlogcvx
