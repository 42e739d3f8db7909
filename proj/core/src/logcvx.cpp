#include "qlogcvx/logcvx.hpp"

#include <stdexcept>

#include "qlogcvx/cfrac.hpp"

namespace qlogcvx {

std::vector<Poly> l_operator(const std::vector<Poly>& seq) {
    if (seq.size() < 3)
        throw std::invalid_argument("l_operator needs at least 3 terms, got " +
                                    std::to_string(seq.size()));
    std::vector<Poly> out(seq.size() - 2);
    for (std::size_t i = 0; i + 2 < seq.size(); ++i)
        out[i] = seq[i] * seq[i + 2] - seq[i + 1] * seq[i + 1];
    return out;
}

LogConvexReport is_m_q_log_convex(const std::vector<Poly>& seq,
                                  unsigned long m) {
    LogConvexReport report{true, m, 0, std::nullopt};
    std::vector<Poly> cur = seq;
    for (unsigned long level = 1; level <= m; ++level) {
        if (cur.size() < 3) break;  // effective depth reached
        cur = l_operator(cur);
        report.levels_checked = level;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (!cur[i].is_q_nonneg()) {
                report.verdict = false;
                report.failure =
                    LogConvexFailure{level, static_cast<unsigned long>(i),
                                     cur[i]};
                return report;
            }
        }
    }
    return report;
}

namespace {

void fail(CriterionVerdict& v, std::string condition, unsigned long k,
          Poly residual) {
    if (!v.verdict) return;  // keep the first witness
    v.verdict = false;
    v.witness = CriterionWitness{std::move(condition), k, std::move(residual)};
}

}  // namespace

CriterionVerdict check_thm_main(const CoeffSeqSpec& spec, CriterionOrder which,
                                unsigned long k_max) {
    CriterionVerdict v;
    v.criterion = which == CriterionOrder::order2 ? "tridiagonal-order2"
                                                  : "tridiagonal-order3";
    v.verdict = true;
    v.k_range_checked = k_max;

    // g_k..g_(k+3), h_(k+1)..h_(k+3) sliding windows
    for (unsigned long k = 0; k <= k_max && v.verdict; ++k) {
        Poly g0 = spec.g(k), g1 = spec.g(k + 1), g2 = spec.g(k + 2);
        Poly h1 = spec.h(k + 1), h2 = spec.h(k + 2);
        if (which == CriterionOrder::order2) {
            Poly r = g0 * g1 * g2 - h1 * g2 - g0 * h2;
            if (!r.is_q_nonneg()) fail(v, "order2", k, std::move(r));
            continue;
        }
        Poly pair = g0 * g1 - h1;
        if (!pair.is_q_nonneg()) {
            fail(v, "pair", k, std::move(pair));
            continue;
        }
        Poly g3 = spec.g(k + 3), h3 = spec.h(k + 3);
        Poly r = g0 * g1 * g2 * g3 - g2 * g3 * h1 - g0 * g3 * h2 -
                 g0 * g1 * h3 + h1 * h3;
        if (!r.is_q_nonneg()) fail(v, "order3", k, std::move(r));
    }

    // generic-regime residuals, straight from the closed forms
    BiPoly g = eval_bipoly(spec.g_generic());
    BiPoly h = eval_bipoly(spec.h_generic());
    BiPoly g1 = g.shift_k(1), g2 = g.shift_k(2);
    BiPoly h1 = h.shift_k(1), h2 = h.shift_k(2);
    if (which == CriterionOrder::order2) {
        v.symbolic.emplace_back("order2", g * g1 * g2 - h1 * g2 - g * h2);
    } else {
        v.symbolic.emplace_back("pair", g * g1 - h1);
        BiPoly g3 = g.shift_k(3), h3 = h.shift_k(3);
        v.symbolic.emplace_back("order3", g * g1 * g2 * g3 - g2 * g3 * h1 -
                                              g * g3 * h2 - g * g1 * h3 +
                                              h1 * h3);
    }
    return v;
}

CriterionVerdict check_riordan(const Poly& e, const Poly& g, const Poly& h,
                               unsigned long r) {
    if (r != 2 && r != 3)
        throw std::invalid_argument("check_riordan: r must be 2 or 3");
    for (const Poly* p : {&e, &g, &h})
        if (p->degree() > 0)
            throw std::invalid_argument(
                "check_riordan needs numeric constants, got " + to_string(*p));
    CriterionVerdict v;
    v.criterion = "riordan-r" + std::to_string(r);
    v.verdict = true;
    auto check = [&](const char* label, Poly residual) {
        if (!residual.is_q_nonneg()) fail(v, label, 0, std::move(residual));
    };
    check("e-nonneg", e);
    check("h-nonneg", h);
    check("g-dominates-e", g - e);
    check("ge-dominates-rh", g * e - Rational(static_cast<long>(r)) * h);
    return v;
}

CriterionVerdict check_gf_criterion(const Poly& a, const Poly& s, const Poly& t,
                                    CriterionOrder which) {
    CriterionVerdict v;
    v.criterion = which == CriterionOrder::order2 ? "gf-order2" : "gf-order3";
    v.verdict = true;
    auto pre = [&](const char* label, Poly residual) {
        if (v.precondition_ok && !residual.is_q_nonneg()) {
            v.precondition_ok = false;
            fail(v, label, 0, std::move(residual));
        }
    };
    pre("a-nonneg", a);
    pre("s-dominates-a", s - a);
    pre("t-nonneg", t);
    if (!v.precondition_ok) return v;

    if (which == CriterionOrder::order2) {
        Poly r = a * s - Rational(2) * t;
        if (!r.is_q_nonneg()) fail(v, "as-2t", 0, std::move(r));
        return v;
    }
    Poly r1 = a * s - t;
    if (!r1.is_q_nonneg()) {
        fail(v, "as-t", 0, std::move(r1));
        return v;
    }
    Poly s2 = s * s;
    Poly r2 = a * s2 * s - Rational(2) * (a * s * t) - s2 * t + t * t;
    if (!r2.is_q_nonneg()) fail(v, "as3-2ast-s2t+t2", 0, std::move(r2));
    return v;
}

CriterionVerdict check_stieltjes(const CoeffSeqSpec& spec,
                                 unsigned long k_max) {
    CriterionVerdict v;
    v.criterion = "stieltjes-nonneg";
    v.verdict = true;
    v.k_range_checked = k_max;
    for (unsigned long n = 1; n <= k_max; ++n) {
        Poly tn = spec.t(n);
        if (!tn.is_q_nonneg()) {
            fail(v, "t-nonneg", n, std::move(tn));
            break;
        }
    }
    return v;
}

bool l2_l3_identity_check(const std::vector<Poly>& seq, unsigned long k) {
    if (!(k >= 2 && k + 2 < seq.size()))
        throw std::invalid_argument(
            "l2_l3_identity_check needs the k-2..k+2 window inside the "
            "sequence");
    auto l1 = l_operator(seq);
    auto l2 = l_operator(l1);
    // iterate j of L^j sits at original index j + position
    auto hankel_det = [&](unsigned long lo, unsigned long size) {
        std::vector<Poly> window(seq.begin() + lo,
                                 seq.begin() + lo + 2 * size - 1);
        return det(hankel(window, size, 0));
    };
    Poly lhs2 = l2[k - 2];
    Poly rhs2 = seq[k] * hankel_det(k - 2, 3);
    if (!(lhs2 == rhs2)) return false;

    if (k >= 3 && k + 3 < seq.size()) {
        auto l3 = l_operator(l2);
        Poly lhs3 = l3[k - 3];
        Poly rhs3 = l1[k - 1] *
                    (seq[k] * seq[k] * hankel_det(k - 3, 4) +
                     hankel_det(k - 3, 3) * hankel_det(k - 1, 3));
        if (!(lhs3 == rhs3)) return false;
    }
    return true;
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 rng(seed ^ (trial + 1) * 0x9E3779B97F4A7C15ull);
    rng.next();  // decorrelate nearby seeds
    return rng;
}

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    const std::uint64_t limit = ~0ull - ~0ull % n;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

namespace {

Poly random_q_poly(SplitMix64& rng) {
    std::vector<Rational> c(3);
    for (auto& x : c) x = static_cast<long>(rng.below(5));
    return Poly(std::move(c));
}

BivariateExpr poly_expr(const Poly& p) {
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

CoeffSeqSpec random_jacobi_spec(SplitMix64& rng) {
    BivariateExpr g = poly_expr(random_q_poly(rng));
    BivariateExpr h = poly_expr(random_q_poly(rng));
    std::map<unsigned long, Poly> g_exc, h_exc;
    if (rng.below(2)) g_exc.emplace(0, random_q_poly(rng));
    if (rng.below(2)) h_exc.emplace(1, random_q_poly(rng));
    return CoeffSeqSpec::make_jacobi(std::move(g), std::move(h),
                                     std::move(g_exc), std::move(h_exc));
}

CoeffSeqSpec random_stieltjes_spec(SplitMix64& rng) {
    BivariateExpr odd = poly_expr(random_q_poly(rng));
    BivariateExpr even = poly_expr(random_q_poly(rng));
    std::map<unsigned long, Poly> t_exc;
    if (rng.below(2)) t_exc.emplace(1, random_q_poly(rng));
    if (rng.below(2)) t_exc.emplace(2, random_q_poly(rng));
    return CoeffSeqSpec::make_stieltjes(std::move(odd), std::move(even),
                                        std::move(t_exc));
}

ExplorationReport explore_conjecture(unsigned long trials, std::uint64_t seed,
                                     unsigned long window,
                                     unsigned long order) {
    if (order == 0 || order > 3)
        throw std::invalid_argument("explore_conjecture: order must be 1..3");
    if (window < 2) throw std::invalid_argument("explore_conjecture: window >= 2");
    ExplorationReport report{trials, seed, window, order, 0, {}};
    for (unsigned long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = SplitMix64::for_trial(seed, trial);
        CoeffSeqSpec spec = random_stieltjes_spec(rng);
        auto x = expand_stieltjes(spec, 2 * window);

        TpReport hyp = is_q_tp(hankel(x, window, 0), order + 1, TpMode::all);
        if (!hyp.verdict) continue;  // hypothesis not established; skip
        ++report.hypothesis_held;

        auto image = l_operator(x);  // image[i] = x_i x_(i+2) - x_(i+1)^2
        TpReport img = is_q_tp(hankel(image, window, 0), order, TpMode::all);
        if (!img.verdict)
            report.candidates.push_back(ExplorationCandidate{
                trial, spec_to_json(spec), std::move(hyp), std::move(img)});
    }
    return report;
}

void to_json(nlohmann::json& j, const LogConvexReport& r) {
    j = nlohmann::json{{"verdict", r.verdict},
                       {"levels_requested", r.levels_requested},
                       {"levels_checked", r.levels_checked},
                       {"failure", nullptr}};
    if (r.failure)
        j["failure"] = nlohmann::json{{"level", r.failure->level},
                                      {"index", r.failure->index},
                                      {"residual", r.failure->residual}};
}

void to_json(nlohmann::json& j, const CriterionVerdict& v) {
    j = nlohmann::json{{"criterion", v.criterion},
                       {"verdict", v.verdict},
                       {"precondition_ok", v.precondition_ok},
                       {"k_range_checked", v.k_range_checked},
                       {"witness", nullptr}};
    if (v.witness)
        j["witness"] = nlohmann::json{{"condition", v.witness->condition},
                                      {"k", v.witness->k},
                                      {"residual", v.witness->residual}};
    if (!v.symbolic.empty()) {
        auto sym = nlohmann::json::object();
        for (const auto& [label, residual] : v.symbolic)
            sym[label] = to_string(residual);
        j["symbolic"] = std::move(sym);
    }
}

void to_json(nlohmann::json& j, const ExplorationReport& r) {
    j = nlohmann::json{{"trials", r.trials},
                       {"seed", r.seed},
                       {"window", r.window},
                       {"order", r.order},
                       {"hypothesis_held", r.hypothesis_held},
                       {"candidates", nlohmann::json::array()}};
    for (const auto& c : r.candidates) {
        nlohmann::json hyp, img;
        to_json(hyp, c.hypothesis);
        to_json(img, c.image);
        j["candidates"].push_back(nlohmann::json{{"trial", c.trial},
                                                 {"spec", c.spec},
                                                 {"hypothesis", std::move(hyp)},
                                                 {"image", std::move(img)}});
    }
}

}  // namespace qlogcvx
