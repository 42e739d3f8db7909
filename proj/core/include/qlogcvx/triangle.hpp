#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qlogcvx/poly.hpp"
#include "qlogcvx/seqspec.hpp"

namespace qlogcvx {

/// Lower-triangular array built by
///   A(n,k) = A(n-1,k-1) + g_k A(n-1,k) + h_(k+1) A(n-1,k+1),  A(0,0) = 1,
/// with entries outside n >= k >= 0 read as zero.
class Triangle {
public:
    /// rows.at(n) must have exactly n+1 entries.
    explicit Triangle(std::vector<std::vector<Poly>> rows);

    unsigned long n_max() const { return rows_.size() - 1; }
    const std::vector<std::vector<Poly>>& rows() const { return rows_; }
    const std::vector<Poly>& row(unsigned long n) const { return rows_.at(n); }
    /// Zero outside the triangular support.
    const Poly& entry(unsigned long n, unsigned long k) const;

private:
    std::vector<std::vector<Poly>> rows_;
};

/// Rows 0..n_max from a jacobi spec. A stieltjes spec is rejected with
/// std::domain_error (contract it first).
Triangle generate(const CoeffSeqSpec& spec, unsigned long n_max);

std::vector<Poly> first_column(const Triangle& t);

/// Triangle whose first column carries the row generating functions
/// sum_k A(n,k) q^k of the numeric triangle with data (e, g, h): generated
/// from g_0' = e+q, h_1' = (g-e)q + h, g_k' = g, h_k' = h. Requires
/// g - e >=_q 0 (otherwise h_1' has a negative coefficient);
/// std::invalid_argument.
Triangle row_genfun_transform(const Poly& e, const Poly& g, const Poly& h,
                              unsigned long n_max);

std::vector<std::vector<Rational>> eval_triangle(const Triangle& t,
                                                 const Rational& x);

/// One row per line, canonical polynomial text, comma-separated.
std::string triangle_to_csv(const Triangle& t);

void to_json(nlohmann::json& j, const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

}  // namespace qlogcvx
