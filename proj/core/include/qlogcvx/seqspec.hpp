#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qlogcvx/expr.hpp"
#include "qlogcvx/poly.hpp"

namespace qlogcvx {

enum class SpecKind { jacobi, stieltjes };

/// Coefficient data for a triangular recurrence / continued fraction.
///
/// jacobi kind: g_k (k >= 0) and h_k (k >= 1), each a generic expression in
/// (k, q) plus finitely many per-index exceptions.
/// stieltjes kind: a single ladder t_n (n >= 1), described by the generic
/// odd-position expression (value of t_{2i-1} at k = i) and even-position
/// expression (t_{2i} at k = i), plus per-index exceptions keyed by n.
///
/// Accessors of the wrong kind throw std::domain_error.
class CoeffSeqSpec {
public:
    static CoeffSeqSpec make_jacobi(BivariateExpr g, BivariateExpr h,
                                    std::map<unsigned long, Poly> g_exceptions = {},
                                    std::map<unsigned long, Poly> h_exceptions = {});
    static CoeffSeqSpec make_stieltjes(BivariateExpr t_odd, BivariateExpr t_even,
                                       std::map<unsigned long, Poly> t_exceptions = {});

    SpecKind kind() const { return kind_; }

    Poly g(unsigned long k) const;
    Poly h(unsigned long k) const;  // k >= 1
    const BivariateExpr& g_generic() const;
    const BivariateExpr& h_generic() const;
    const std::map<unsigned long, Poly>& g_exceptions() const;
    const std::map<unsigned long, Poly>& h_exceptions() const;

    Poly t(unsigned long n) const;  // n >= 1
    const BivariateExpr& t_odd_generic() const;
    const BivariateExpr& t_even_generic() const;
    const std::map<unsigned long, Poly>& t_exceptions() const;

private:
    SpecKind kind_;
    // jacobi: ab_ = {g, h}; stieltjes: ab_ = {t_odd, t_even}.
    std::vector<BivariateExpr> ab_;
    std::map<unsigned long, Poly> exc_a_, exc_b_;
    CoeffSeqSpec(SpecKind k, std::vector<BivariateExpr> ab) : kind_(k), ab_(std::move(ab)) {}
    void require(SpecKind k, const char* what) const;
};

nlohmann::json spec_to_json(const CoeffSeqSpec& spec);
/// Accepts {"kind": "jacobi", "g": expr, "h": expr, "g_exceptions": {...},
/// "h_exceptions": {...}} or the stieltjes analogue with "t_odd"/"t_even"/
/// "t_exceptions". Exception values are expression text in q alone, or a
/// coefficient list. Throws std::invalid_argument on malformed input.
CoeffSeqSpec spec_from_json(const nlohmann::json& j);

enum class FamilyId {
    bell,
    eulerianA,
    qschroeder,
    qdelannoy,
    narayanaA,
    narayanaB,
    aigner,
    shapiro,
    schroeder_triangle,
    alt_eulerian,
    euler_numbers,
    tan_derivative,
    elliptic_cn,
    boros_moll,
};

struct FamilyInfo {
    FamilyId id;
    const char* name;
    bool has_spec;     // family_spec available
    bool has_oracle;   // oracles::oracle available
    bool enumerative;  // oracle walks permutations, capped at size 10
    // oracle base-sequence index of column entry n is n + oracle_offset
    unsigned long oracle_offset;
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_info(FamilyId id);
/// Throws std::invalid_argument listing the known names.
FamilyId family_by_name(const std::string& name);
/// Coefficient data for a catalogued family. boros_moll carries no
/// recurrence data and throws std::domain_error.
CoeffSeqSpec family_spec(FamilyId id);

}  // namespace qlogcvx
