#include "qlogcvx/seqspec.hpp"

#include <optional>
#include <stdexcept>

namespace qlogcvx {

CoeffSeqSpec CoeffSeqSpec::make_jacobi(BivariateExpr g, BivariateExpr h,
                                       std::map<unsigned long, Poly> g_exc,
                                       std::map<unsigned long, Poly> h_exc) {
    if (h_exc.count(0))
        throw std::invalid_argument("h exception at index 0: h starts at 1");
    CoeffSeqSpec s(SpecKind::jacobi, {std::move(g), std::move(h)});
    s.exc_a_ = std::move(g_exc);
    s.exc_b_ = std::move(h_exc);
    return s;
}

CoeffSeqSpec CoeffSeqSpec::make_stieltjes(BivariateExpr t_odd,
                                          BivariateExpr t_even,
                                          std::map<unsigned long, Poly> t_exc) {
    if (t_exc.count(0))
        throw std::invalid_argument("t exception at index 0: t starts at 1");
    CoeffSeqSpec s(SpecKind::stieltjes, {std::move(t_odd), std::move(t_even)});
    s.exc_a_ = std::move(t_exc);
    return s;
}

void CoeffSeqSpec::require(SpecKind k, const char* what) const {
    if (kind_ != k)
        throw std::domain_error(std::string(what) + ": spec is of " +
                                (kind_ == SpecKind::jacobi ? "jacobi" : "stieltjes") +
                                " kind");
}

Poly CoeffSeqSpec::g(unsigned long k) const {
    require(SpecKind::jacobi, "g");
    auto it = exc_a_.find(k);
    if (it != exc_a_.end()) return it->second;
    return eval_at_k(ab_[0], k);
}

Poly CoeffSeqSpec::h(unsigned long k) const {
    require(SpecKind::jacobi, "h");
    if (k == 0) throw std::invalid_argument("h index starts at 1");
    auto it = exc_b_.find(k);
    if (it != exc_b_.end()) return it->second;
    return eval_at_k(ab_[1], k);
}

const BivariateExpr& CoeffSeqSpec::g_generic() const {
    require(SpecKind::jacobi, "g_generic");
    return ab_[0];
}

const BivariateExpr& CoeffSeqSpec::h_generic() const {
    require(SpecKind::jacobi, "h_generic");
    return ab_[1];
}

const std::map<unsigned long, Poly>& CoeffSeqSpec::g_exceptions() const {
    require(SpecKind::jacobi, "g_exceptions");
    return exc_a_;
}

const std::map<unsigned long, Poly>& CoeffSeqSpec::h_exceptions() const {
    require(SpecKind::jacobi, "h_exceptions");
    return exc_b_;
}

Poly CoeffSeqSpec::t(unsigned long n) const {
    require(SpecKind::stieltjes, "t");
    if (n == 0) throw std::invalid_argument("t index starts at 1");
    auto it = exc_a_.find(n);
    if (it != exc_a_.end()) return it->second;
    // t_{2i-1} = odd expression at k = i, t_{2i} = even expression at k = i
    if (n % 2) return eval_at_k(ab_[0], (n + 1) / 2);
    return eval_at_k(ab_[1], n / 2);
}

const BivariateExpr& CoeffSeqSpec::t_odd_generic() const {
    require(SpecKind::stieltjes, "t_odd_generic");
    return ab_[0];
}

const BivariateExpr& CoeffSeqSpec::t_even_generic() const {
    require(SpecKind::stieltjes, "t_even_generic");
    return ab_[1];
}

const std::map<unsigned long, Poly>& CoeffSeqSpec::t_exceptions() const {
    require(SpecKind::stieltjes, "t_exceptions");
    return exc_a_;
}

namespace {

// Expression-grammar text for a poly ("1 + 2*q + q^2"), or nullopt when a
// negative coefficient makes that impossible (no unary minus in the grammar).
std::optional<std::string> poly_expr_text(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (sgn(c[i]) < 0) return std::nullopt;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += rat_str(c[i]);
            continue;
        }
        if (!(c[i] == 1)) out += rat_str(c[i]) + "*";
        out += "q";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

nlohmann::json exceptions_to_json(const std::map<unsigned long, Poly>& exc) {
    auto out = nlohmann::json::object();
    for (const auto& [k, p] : exc) {
        if (auto text = poly_expr_text(p))
            out[std::to_string(k)] = *text;
        else
            out[std::to_string(k)] = p;  // coefficient list fallback
    }
    return out;
}

Poly exception_value_from_json(const nlohmann::json& v) {
    if (v.is_string()) {
        BivariateExpr e = parse_expr(v.get<std::string>());
        if (contains_k(e))
            throw std::invalid_argument(
                "exception value must not mention k: " + v.get<std::string>());
        return eval_at_k(e, 0);
    }
    return v.get<Poly>();
}

std::map<unsigned long, Poly> exceptions_from_json(const nlohmann::json& j) {
    std::map<unsigned long, Poly> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t used = 0;
        unsigned long k = std::stoul(it.key(), &used);
        if (used != it.key().size())
            throw std::invalid_argument("bad exception index: " + it.key());
        out.emplace(k, exception_value_from_json(it.value()));
    }
    return out;
}

}  // namespace

nlohmann::json spec_to_json(const CoeffSeqSpec& spec) {
    nlohmann::json j;
    if (spec.kind() == SpecKind::jacobi) {
        j["kind"] = "jacobi";
        j["g"] = to_string(spec.g_generic());
        j["h"] = to_string(spec.h_generic());
        j["g_exceptions"] = exceptions_to_json(spec.g_exceptions());
        j["h_exceptions"] = exceptions_to_json(spec.h_exceptions());
    } else {
        j["kind"] = "stieltjes";
        j["t_odd"] = to_string(spec.t_odd_generic());
        j["t_even"] = to_string(spec.t_even_generic());
        j["t_exceptions"] = exceptions_to_json(spec.t_exceptions());
    }
    return j;
}

CoeffSeqSpec spec_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    auto expr_field = [&](const char* key) {
        return parse_expr(j.at(key).get<std::string>());
    };
    auto exc_field = [&](const char* key) {
        return j.contains(key) ? exceptions_from_json(j.at(key))
                               : std::map<unsigned long, Poly>{};
    };
    if (kind == "jacobi") {
        auto g_exc = exc_field("g_exceptions");
        if (j.contains("g0"))  // shorthand for a lone g exception at 0
            g_exc.insert_or_assign(0, exception_value_from_json(j.at("g0")));
        return CoeffSeqSpec::make_jacobi(expr_field("g"), expr_field("h"),
                                         std::move(g_exc),
                                         exc_field("h_exceptions"));
    }
    if (kind == "stieltjes")
        return CoeffSeqSpec::make_stieltjes(expr_field("t_odd"),
                                            expr_field("t_even"),
                                            exc_field("t_exceptions"));
    throw std::invalid_argument("spec kind must be jacobi or stieltjes, got " +
                                kind);
}

namespace {

// id, name, has_spec, has_oracle, enumerative, oracle_offset
const std::vector<FamilyInfo> kCatalog = {
    {FamilyId::bell, "bell", true, true, false, 0},
    {FamilyId::eulerianA, "eulerianA", true, true, true, 0},
    {FamilyId::qschroeder, "qschroeder", true, true, false, 0},
    {FamilyId::qdelannoy, "qdelannoy", true, true, false, 0},
    {FamilyId::narayanaA, "narayanaA", true, true, false, 0},
    {FamilyId::narayanaB, "narayanaB", true, true, false, 0},
    {FamilyId::aigner, "aigner", true, false, false, 0},
    {FamilyId::shapiro, "shapiro", true, false, false, 0},
    {FamilyId::schroeder_triangle, "schroeder_triangle", true, false, false, 0},
    {FamilyId::alt_eulerian, "alt_eulerian", true, true, true, 1},
    {FamilyId::euler_numbers, "euler_numbers", true, true, true, 1},
    {FamilyId::tan_derivative, "tan_derivative", true, true, false, 0},
    {FamilyId::elliptic_cn, "elliptic_cn", true, false, false, 0},
    {FamilyId::boros_moll, "boros_moll", false, true, false, 0},
};

Poly qpoly(const char* text) { return eval_at_k(parse_expr(text), 0); }

}  // namespace

const std::vector<FamilyInfo>& family_catalog() { return kCatalog; }

const FamilyInfo& family_info(FamilyId id) {
    for (const auto& f : kCatalog)
        if (f.id == id) return f;
    throw std::logic_error("unknown family id");
}

FamilyId family_by_name(const std::string& name) {
    for (const auto& f : kCatalog)
        if (name == f.name) return f.id;
    std::string known;
    for (const auto& f : kCatalog) {
        if (!known.empty()) known += ", ";
        known += f.name;
    }
    throw std::invalid_argument("unknown family '" + name + "' (known: " +
                                known + ")");
}

CoeffSeqSpec family_spec(FamilyId id) {
    auto jac = [](const char* g, const char* h,
                  std::map<unsigned long, Poly> gx = {},
                  std::map<unsigned long, Poly> hx = {}) {
        return CoeffSeqSpec::make_jacobi(parse_expr(g), parse_expr(h),
                                         std::move(gx), std::move(hx));
    };
    switch (id) {
        case FamilyId::bell:
            return jac("k + q", "k*q");
        case FamilyId::eulerianA:
            return jac("(k + 1)*q + k", "k^2*q");
        case FamilyId::qschroeder:
            return jac("2*q + 1", "q^2 + q", {{0, qpoly("q + 1")}});
        case FamilyId::qdelannoy:
            return jac("2*q + 1", "q^2 + q", {}, {{1, qpoly("2*q^2 + 2*q")}});
        case FamilyId::narayanaA:
            return jac("q + 1", "q", {{0, qpoly("q")}});
        case FamilyId::narayanaB:
            return jac("q + 1", "q", {}, {{1, qpoly("2*q")}});
        case FamilyId::aigner:
            return jac("2", "1", {{0, qpoly("1")}});
        case FamilyId::shapiro:
            return jac("2", "1", {{0, qpoly("2")}});
        case FamilyId::schroeder_triangle:
            return jac("2", "2", {{0, qpoly("1")}});
        case FamilyId::alt_eulerian:
            return jac("(k + 1)*(q + 1)", "(q^2 + 1)*k*(k + 1)*(1/2)");
        case FamilyId::euler_numbers:
            return jac("k + 1", "k*(k + 1)*(1/2)");
        case FamilyId::tan_derivative:
            return jac("2*(k + 1)*q", "(1 + q^2)*k*(k + 1)");
        case FamilyId::elliptic_cn:
            return CoeffSeqSpec::make_stieltjes(parse_expr("(2*k - 1)^2"),
                                                parse_expr("4*k^2*q"));
        case FamilyId::boros_moll:
            throw std::domain_error(
                "boros_moll is a direct polynomial family with no recurrence "
                "data; use boros_moll_poly");
    }
    throw std::logic_error("unknown family id");
}

}  // namespace qlogcvx
