#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogcvx/bipoly.hpp"
#include "qlogcvx/poly.hpp"
#include "qlogcvx/polymatrix.hpp"
#include "qlogcvx/seqspec.hpp"

namespace qlogcvx {

/// One L step: out[i] = seq[i] seq[i+2] - seq[i+1]^2 (length shrinks by 2).
/// Requires length >= 3; std::invalid_argument otherwise.
std::vector<Poly> l_operator(const std::vector<Poly>& seq);

struct LogConvexFailure {
    unsigned long level;  // 1-based L iteration
    unsigned long index;  // position within that iterate
    Poly residual;
};

/// levels_checked < levels_requested happens when the sequence is too short
/// to iterate further (each L step consumes two terms); that is reported,
/// not treated as failure.
struct LogConvexReport {
    bool verdict;
    unsigned long levels_requested;
    unsigned long levels_checked;
    std::optional<LogConvexFailure> failure;
};

LogConvexReport is_m_q_log_convex(const std::vector<Poly>& seq,
                                  unsigned long m);

struct CriterionWitness {
    std::string condition;
    unsigned long k;
    Poly residual;
};

/// Outcome of a sufficient-condition check. witness is present iff verdict
/// is false; symbolic carries the generic-in-k residuals (labels matching
/// witness conditions) when the spec has a usable closed form.
struct CriterionVerdict {
    std::string criterion;
    bool verdict;
    bool precondition_ok = true;
    unsigned long k_range_checked = 0;
    std::optional<CriterionWitness> witness;
    std::vector<std::pair<std::string, BiPoly>> symbolic;
};

enum class CriterionOrder { order2, order3 };

/// Tridiagonal-data criterion. order2: g_k g_(k+1) g_(k+2) - h_(k+1) g_(k+2)
/// - g_k h_(k+2) >=_q 0 for k = 0..k_max. order3: g_k g_(k+1) - h_(k+1) >=_q 0
/// and the four-factor residual with + h_(k+1) h_(k+3) >=_q 0, same range.
/// Exceptional indices use their exceptional values; the symbolic residuals
/// describe the generic regime.
CriterionVerdict check_thm_main(const CoeffSeqSpec& spec, CriterionOrder which,
                                unsigned long k_max);

/// Constant-data criterion for row generating functions: hypothesis
/// g >= e >= 0, h >= 0, main condition ge >= rh. Constants only (degree-0
/// polynomials); r in {2, 3}.
CriterionVerdict check_riordan(const Poly& e, const Poly& g, const Poly& h,
                               unsigned long r);

/// Closed-form generating-function criterion for data (a, s, t). Hypothesis
/// s >=_q a >=_q 0, t >=_q 0 (violation makes the verdict false with
/// precondition_ok unset, it is not an error). order2: as - 2t >=_q 0.
/// order3: as - t >=_q 0 and as^3 - 2ast - s^2 t + t^2 >=_q 0.
CriterionVerdict check_gf_criterion(const Poly& a, const Poly& s, const Poly& t,
                                    CriterionOrder which);

/// Ladder positivity: t_n >=_q 0 for 1 <= n <= k_max (stieltjes specs).
CriterionVerdict check_stieltjes(const CoeffSeqSpec& spec, unsigned long k_max);

/// Algebraic identities tying L iterates to Hankel determinants of any
/// sequence: the second iterate at position k equals seq[k] times the 3x3
/// Hankel determinant centered there, and the third iterate factors through
/// the centered 4x4 determinant and two offset 3x3s. The second-iterate
/// clause needs the k+-2 window; the third-iterate clause is checked when
/// the k+-3 window also fits (vacuous otherwise).
bool l2_l3_identity_check(const std::vector<Poly>& seq, unsigned long k);

/// Deterministic 64-bit generator (SplitMix64); bounded draws by rejection,
/// so streams are identical across platforms.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
};

/// Random coefficient data for property tests and the explorer: generic
/// values are polynomials of degree <= 2 with coefficients in [0, 4];
/// jacobi specs take a g exception at 0 and an h exception at 1 with
/// probability 1/2 each, stieltjes specs take t exceptions at 1 and 2
/// likewise.
CoeffSeqSpec random_jacobi_spec(SplitMix64& rng);
CoeffSeqSpec random_stieltjes_spec(SplitMix64& rng);

struct ExplorationCandidate {
    unsigned long trial;
    nlohmann::json spec;  // serialized generator output
    TpReport hypothesis;
    TpReport image;
};

struct ExplorationReport {
    unsigned long trials;
    std::uint64_t seed;
    unsigned long window;
    unsigned long order;
    unsigned long hypothesis_held;
    std::vector<ExplorationCandidate> candidates;
};

/// Random search for window-level counterexample candidates to the Hankel
/// L-image positivity question: draw a nonnegative ladder spec, expand it,
/// confirm the window Hankel is q-TP_(order+1), then test the L-image Hankel
/// [x_i x_(i+2) - x_(i+1)^2 placed at i+j] for q-TP_order. A trial where the
/// hypothesis holds but the image check fails is recorded as a candidate
/// (never called a counterexample: the hypothesis is window-level only).
/// order <= 3 required.
ExplorationReport explore_conjecture(unsigned long trials, std::uint64_t seed,
                                     unsigned long window, unsigned long order);

void to_json(nlohmann::json& j, const LogConvexReport& r);
void to_json(nlohmann::json& j, const CriterionVerdict& v);
void to_json(nlohmann::json& j, const ExplorationReport& r);

}  // namespace qlogcvx
