#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qlogcvx/poly.hpp"
#include "qlogcvx/seqspec.hpp"

namespace qlogcvx {

/// Dense matrix of Poly entries, row-major.
class PolyMatrix {
public:
    PolyMatrix(unsigned long n_rows, unsigned long n_cols);
    static PolyMatrix identity(unsigned long n);

    unsigned long n_rows() const { return rows_; }
    unsigned long n_cols() const { return cols_; }
    Poly& at(unsigned long r, unsigned long c) { return e_[r * cols_ + c]; }
    const Poly& at(unsigned long r, unsigned long c) const {
        return e_[r * cols_ + c];
    }

    PolyMatrix transpose() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    unsigned long rows_, cols_;
    std::vector<Poly> e_;
};

/// M[i][j] = seq[offset + i + j]. Requires offset + 2(size-1) < seq length.
PolyMatrix hankel(const std::vector<Poly>& seq, unsigned long size,
                  unsigned long offset = 0);

/// Leading size x size slice of the tridiagonal matrix with diagonal g_k,
/// superdiagonal 1, subdiagonal h_k. Jacobi specs only.
PolyMatrix tridiagonal(const CoeffSeqSpec& spec, unsigned long size);

/// Exact determinant: denominators cleared, fraction-free Bareiss over the
/// integer polynomial ring, result rescaled. Throws std::invalid_argument
/// on a non-square matrix.
Poly det(const PolyMatrix& m);

/// Determinant of the submatrix picked by the (sorted, in-range) index sets.
/// Named to avoid the glibc minor() macro.
Poly minor_det(const PolyMatrix& m, const std::vector<unsigned long>& rows,
               const std::vector<unsigned long>& cols);

enum class TpMode { all, contiguous };

struct TpWitness {
    std::vector<unsigned long> rows, cols;
    Poly minor;
};

/// Verdict of a coefficientwise total-positivity window check. The witness
/// is the first violation in lexicographic (size, rows, cols) order;
/// minors_checked counts minors actually evaluated (everything, on success).
struct TpReport {
    unsigned long order;
    TpMode mode;
    bool verdict;
    std::optional<TpWitness> witness;
    unsigned long long minors_checked;
};

/// Guard rails for the all-subsets enumeration (cost grows like
/// C(window, order)^2); raise consciously when needed.
struct TpLimits {
    unsigned long max_window = 14;
    unsigned long max_order = 4;
};

/// Checks every minor of size 1..order for coefficientwise nonnegativity.
/// mode=contiguous restricts to consecutive-index windows; that is a fast
/// screen only, it cannot certify (nonneg) total positivity.
TpReport is_q_tp(const PolyMatrix& m, unsigned long order, TpMode mode,
                 const TpLimits& limits = {});

/// Structural identities tying the triangle, the tridiagonal slice, and the
/// first-column Hankel together at size n: rows 1..n of the triangle equal
/// (rows 0..n-1) x J_n, and H_n = A_n T_n A_n^T with T = diag of running
/// h-products. Jacobi specs only.
bool factorization_check(const CoeffSeqSpec& spec, unsigned long n);

std::string to_string(TpMode mode);
void to_json(nlohmann::json& j, const TpReport& r);

}  // namespace qlogcvx
