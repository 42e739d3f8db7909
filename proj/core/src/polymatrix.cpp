#include "qlogcvx/polymatrix.hpp"

#include <stdexcept>

#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/triangle.hpp"
#include "zpoly_detail.hpp"

namespace qlogcvx {

namespace detail {

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly out = a;
    if (b.size() > out.size()) out.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    ztrim(out);
    return out;
}

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::logic_error("zpoly division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size())
        throw std::logic_error("zpoly division not exact (degree)");
    ZPoly rem = a;
    ZPoly quot(a.size() - b.size() + 1);
    Integer q, r;
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Integer& lead = rem[i + b.size() - 1];
        if (lead == 0) continue;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    b.back().get_mpz_t());
        if (r != 0) throw std::logic_error("zpoly division not exact");
        quot[i] = q;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("zpoly division not exact (rem)");
    ztrim(quot);
    return quot;
}

}  // namespace detail

using detail::ZPoly;

PolyMatrix::PolyMatrix(unsigned long n_rows, unsigned long n_cols)
    : rows_(n_rows), cols_(n_cols), e_(n_rows * n_cols) {}

PolyMatrix PolyMatrix::identity(unsigned long n) {
    PolyMatrix m(n, n);
    for (unsigned long i = 0; i < n; ++i) m.at(i, i) = Poly(Rational(1));
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix out(cols_, rows_);
    for (unsigned long r = 0; r < rows_; ++r)
        for (unsigned long c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("matrix product shape mismatch");
    PolyMatrix out(a.n_rows(), b.n_cols());
    for (unsigned long i = 0; i < a.n_rows(); ++i)
        for (unsigned long k = 0; k < a.n_cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (unsigned long j = 0; j < b.n_cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return out;
}

PolyMatrix hankel(const std::vector<Poly>& seq, unsigned long size,
                  unsigned long offset) {
    if (size == 0) throw std::invalid_argument("hankel size must be >= 1");
    if (offset + 2 * (size - 1) >= seq.size())
        throw std::invalid_argument(
            "hankel window [" + std::to_string(offset) + ", " +
            std::to_string(offset + 2 * (size - 1)) +
            "] exceeds sequence length " + std::to_string(seq.size()));
    PolyMatrix m(size, size);
    for (unsigned long i = 0; i < size; ++i)
        for (unsigned long j = 0; j < size; ++j)
            m.at(i, j) = seq[offset + i + j];
    return m;
}

PolyMatrix tridiagonal(const CoeffSeqSpec& spec, unsigned long size) {
    if (size == 0) throw std::invalid_argument("tridiagonal size must be >= 1");
    if (spec.kind() != SpecKind::jacobi)
        throw std::domain_error(
            "tridiagonal needs a jacobi spec; contract the stieltjes data first");
    PolyMatrix m(size, size);
    for (unsigned long k = 0; k < size; ++k) {
        m.at(k, k) = spec.g(k);
        if (k + 1 < size) {
            m.at(k, k + 1) = Poly(Rational(1));
            m.at(k + 1, k) = spec.h(k + 1);
        }
    }
    return m;
}

namespace {

// Denominator-cleared copy for the integer elimination path.
struct ScaledGrid {
    std::vector<ZPoly> cell;  // row-major, n x n
    Integer scale;            // lcm of all denominators
};

ScaledGrid scale_to_integers(const PolyMatrix& m) {
    ScaledGrid g;
    g.scale = 1;
    const unsigned long n = m.n_rows();
    for (unsigned long r = 0; r < n; ++r)
        for (unsigned long c = 0; c < m.n_cols(); ++c)
            for (const auto& coeff : m.at(r, c).coeffs())
                mpz_lcm(g.scale.get_mpz_t(), g.scale.get_mpz_t(),
                        coeff.get_den().get_mpz_t());
    g.cell.reserve(n * m.n_cols());
    for (unsigned long r = 0; r < n; ++r)
        for (unsigned long c = 0; c < m.n_cols(); ++c) {
            const auto& coeffs = m.at(r, c).coeffs();
            ZPoly z(coeffs.size());
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                Integer t;
                mpz_divexact(t.get_mpz_t(), g.scale.get_mpz_t(),
                             coeffs[i].get_den().get_mpz_t());
                z[i] = coeffs[i].get_num() * t;
            }
            g.cell.push_back(std::move(z));
        }
    return g;
}

Poly unscale(const ZPoly& z, const Integer& scale, unsigned long power,
             bool negate) {
    Integer denom;
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), power);
    std::vector<Rational> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        Rational r(negate ? Integer(-z[i]) : z[i], denom);
        r.canonicalize();
        out[i] = std::move(r);
    }
    return Poly(std::move(out));
}

}  // namespace

Poly det(const PolyMatrix& m) {
    if (m.n_rows() != m.n_cols())
        throw std::invalid_argument("det needs a square matrix");
    const unsigned long n = m.n_rows();
    if (n == 0) return Poly(Rational(1));

    ScaledGrid g = scale_to_integers(m);
    auto cell = [&](unsigned long r, unsigned long c) -> ZPoly& {
        return g.cell[r * n + c];
    };

    bool negate = false;
    ZPoly prev{Integer(1)};
    for (unsigned long k = 0; k + 1 < n; ++k) {
        if (cell(k, k).empty()) {
            unsigned long r = k + 1;
            while (r < n && cell(r, k).empty()) ++r;
            if (r == n) return Poly();  // zero pivot column: singular
            for (unsigned long c = k; c < n; ++c)
                std::swap(cell(k, c), cell(r, c));
            negate = !negate;
        }
        for (unsigned long i = k + 1; i < n; ++i) {
            for (unsigned long j = k + 1; j < n; ++j) {
                ZPoly t = detail::zpoly_sub(
                    detail::zpoly_mul(cell(k, k), cell(i, j)),
                    detail::zpoly_mul(cell(i, k), cell(k, j)));
                cell(i, j) =
                    k == 0 ? std::move(t) : detail::zpoly_divexact(t, prev);
            }
            cell(i, k).clear();
        }
        prev = cell(k, k);
    }
    return unscale(cell(n - 1, n - 1), g.scale, n, negate);
}

namespace {

void check_index_set(const std::vector<unsigned long>& idx, unsigned long bound,
                     const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= bound)
            throw std::invalid_argument(std::string(what) + " index " +
                                        std::to_string(idx[i]) +
                                        " out of range");
        if (i && idx[i - 1] >= idx[i])
            throw std::invalid_argument(std::string(what) +
                                        " indices must be strictly increasing");
    }
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<unsigned long>& rows,
                     const std::vector<unsigned long>& cols) {
    PolyMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = m.at(rows[i], cols[j]);
    return out;
}

}  // namespace

Poly minor_det(const PolyMatrix& m, const std::vector<unsigned long>& rows,
               const std::vector<unsigned long>& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs |rows| = |cols|");
    check_index_set(rows, m.n_rows(), "row");
    check_index_set(cols, m.n_cols(), "col");
    return det(submatrix(m, rows, cols));
}

namespace {

// All 2x2 minors of the window, keyed by (row pair, col pair) in lex order.
// Shared by the 3x3 cofactor and 4x4 two-row Laplace expansions; this is
// what keeps full minor enumeration affordable at window 10+.
class PairMinorCache {
public:
    explicit PairMinorCache(const PolyMatrix& m) : m_(m) {}

    const Poly& get(unsigned long r0, unsigned long r1, unsigned long c0,
                    unsigned long c1) {
        if (vals_.empty()) build();
        return vals_[pair_index(r0, r1, m_.n_rows()) * col_pairs_ +
                     pair_index(c0, c1, m_.n_cols())];
    }

private:
    const PolyMatrix& m_;
    unsigned long col_pairs_ = 0;
    std::vector<Poly> vals_;

    static unsigned long pair_index(unsigned long i, unsigned long j,
                                    unsigned long n) {
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    }

    void build() {
        const unsigned long nr = m_.n_rows(), nc = m_.n_cols();
        col_pairs_ = nc * (nc - 1) / 2;
        vals_.resize(nr * (nr - 1) / 2 * col_pairs_);
        std::size_t idx = 0;
        for (unsigned long r0 = 0; r0 < nr; ++r0)
            for (unsigned long r1 = r0 + 1; r1 < nr; ++r1)
                for (unsigned long c0 = 0; c0 < nc; ++c0)
                    for (unsigned long c1 = c0 + 1; c1 < nc; ++c1)
                        vals_[idx++] = m_.at(r0, c0) * m_.at(r1, c1) -
                                       m_.at(r0, c1) * m_.at(r1, c0);
    }
};

Poly minor2(const PolyMatrix& m, unsigned long r0, unsigned long r1,
            unsigned long c0, unsigned long c1) {
    return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
}

Poly minor_fast(const PolyMatrix& m, const std::vector<unsigned long>& r,
                const std::vector<unsigned long>& c, PairMinorCache* cache) {
    switch (r.size()) {
        case 1:
            return m.at(r[0], c[0]);
        case 2:
            return minor2(m, r[0], r[1], c[0], c[1]);
        case 3: {
            // first-row cofactors over cached 2x2s
            auto pm = [&](unsigned long c0, unsigned long c1) {
                return cache ? cache->get(r[1], r[2], c0, c1)
                             : minor2(m, r[1], r[2], c0, c1);
            };
            return m.at(r[0], c[0]) * pm(c[1], c[2]) -
                   m.at(r[0], c[1]) * pm(c[0], c[2]) +
                   m.at(r[0], c[2]) * pm(c[0], c[1]);
        }
        case 4: {
            // Laplace along the top two rows: complementary 2x2 pairs
            auto top = [&](unsigned long c0, unsigned long c1) {
                return cache ? cache->get(r[0], r[1], c0, c1)
                             : minor2(m, r[0], r[1], c0, c1);
            };
            auto bot = [&](unsigned long c0, unsigned long c1) {
                return cache ? cache->get(r[2], r[3], c0, c1)
                             : minor2(m, r[2], r[3], c0, c1);
            };
            Poly acc = top(c[0], c[1]) * bot(c[2], c[3]);
            acc -= top(c[0], c[2]) * bot(c[1], c[3]);
            acc += top(c[0], c[3]) * bot(c[1], c[2]);
            acc += top(c[1], c[2]) * bot(c[0], c[3]);
            acc -= top(c[1], c[3]) * bot(c[0], c[2]);
            acc += top(c[2], c[3]) * bot(c[0], c[1]);
            return acc;
        }
        default:
            return minor_det(m, r, c);
    }
}

bool next_combination(std::vector<unsigned long>& idx, unsigned long n) {
    const unsigned long r = idx.size();
    for (unsigned long i = r; i-- > 0;) {
        if (idx[i] + (r - i) < n) {
            ++idx[i];
            for (unsigned long j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<unsigned long> first_combination(unsigned long r) {
    std::vector<unsigned long> idx(r);
    for (unsigned long i = 0; i < r; ++i) idx[i] = i;
    return idx;
}

}  // namespace

TpReport is_q_tp(const PolyMatrix& m, unsigned long order, TpMode mode,
                 const TpLimits& limits) {
    if (order == 0) throw std::invalid_argument("is_q_tp needs order >= 1");
    if (order > limits.max_order)
        throw std::invalid_argument(
            "is_q_tp order " + std::to_string(order) + " above limit " +
            std::to_string(limits.max_order) + "; raise TpLimits deliberately");
    if (mode == TpMode::all &&
        std::max(m.n_rows(), m.n_cols()) > limits.max_window)
        throw std::invalid_argument(
            "is_q_tp window " + std::to_string(std::max(m.n_rows(), m.n_cols())) +
            " above limit " + std::to_string(limits.max_window) +
            "; raise TpLimits deliberately");

    TpReport report{order, mode, true, std::nullopt, 0};
    const unsigned long r_max =
        std::min<unsigned long>(order, std::min(m.n_rows(), m.n_cols()));
    PairMinorCache cache(m);

    auto examine = [&](const std::vector<unsigned long>& rows,
                       const std::vector<unsigned long>& cols,
                       PairMinorCache* pc) {
        Poly value = minor_fast(m, rows, cols, pc);
        ++report.minors_checked;
        if (!value.is_q_nonneg()) {
            report.verdict = false;
            report.witness = TpWitness{rows, cols, std::move(value)};
            return false;
        }
        return true;
    };

    for (unsigned long r = 1; r <= r_max; ++r) {
        if (mode == TpMode::contiguous) {
            for (unsigned long i = 0; i + r <= m.n_rows(); ++i)
                for (unsigned long j = 0; j + r <= m.n_cols(); ++j) {
                    std::vector<unsigned long> rows(r), cols(r);
                    for (unsigned long t = 0; t < r; ++t) {
                        rows[t] = i + t;
                        cols[t] = j + t;
                    }
                    if (!examine(rows, cols, nullptr)) return report;
                }
            continue;
        }
        auto rows = first_combination(r);
        do {
            auto cols = first_combination(r);
            do {
                if (!examine(rows, cols, r >= 3 ? &cache : nullptr))
                    return report;
            } while (next_combination(cols, m.n_cols()));
        } while (next_combination(rows, m.n_rows()));
    }
    return report;
}

bool factorization_check(const CoeffSeqSpec& spec, unsigned long n) {
    if (n == 0) throw std::invalid_argument("factorization_check needs n >= 1");
    Triangle t = generate(spec, std::max(n, 2 * n - 2));
    auto col = first_column(t);

    PolyMatrix a(n, n), q(n, n), h(n, n), tdiag(n, n);
    for (unsigned long i = 0; i < n; ++i)
        for (unsigned long k = 0; k < n; ++k) {
            a.at(i, k) = t.entry(i, k);
            q.at(i, k) = t.entry(i + 1, k);
            h.at(i, k) = col[i + k];
        }
    tdiag.at(0, 0) = Poly(Rational(1));
    for (unsigned long k = 1; k < n; ++k)
        tdiag.at(k, k) = tdiag.at(k - 1, k - 1) * spec.h(k);

    PolyMatrix j = tridiagonal(spec, n);
    return q == a * j && h == a * tdiag * a.transpose();
}

std::string to_string(TpMode mode) {
    return mode == TpMode::all ? "all" : "contiguous";
}

void to_json(nlohmann::json& j, const TpReport& r) {
    j = nlohmann::json{{"order", r.order},
                       {"mode", to_string(r.mode)},
                       {"verdict", r.verdict},
                       {"witness", nullptr},
                       {"minors_checked", r.minors_checked}};
    if (r.witness)
        j["witness"] = nlohmann::json{{"rows", r.witness->rows},
                                      {"cols", r.witness->cols},
                                      {"minor", r.witness->minor}};
}

}  // namespace qlogcvx
