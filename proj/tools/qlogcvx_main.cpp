// Command line front end: expansion, triangles, criteria, TP checks,
// determinants, identity checks, and the conjecture explorer.
//
// Exit codes: 0 = ran, verdict true (or command has no verdict);
//             1 = ran, verdict false; 2 = usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlogcvx/cfrac.hpp"
#include "qlogcvx/logcvx.hpp"
#include "qlogcvx/polymatrix.hpp"
#include "qlogcvx/seqspec.hpp"
#include "qlogcvx/triangle.hpp"

using namespace qlogcvx;
using nlohmann::json;

namespace {

// A q-polynomial flag value: the expression grammar, with k rejected.
Poly q_poly_arg(const std::string& text, const std::string& flag) {
    BivariateExpr e = parse_expr(text);
    if (contains_k(e))
        throw std::invalid_argument(flag + ": value must not mention k");
    return eval_at_k(e, 0);
}

// "k:EXPR" exception entries.
std::pair<unsigned long, Poly> exception_arg(const std::string& text,
                                             const std::string& flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument(flag + ": expected INDEX:EXPR, got '" +
                                    text + "'");
    unsigned long idx = std::stoul(text.substr(0, colon));
    return {idx, q_poly_arg(text.substr(colon + 1), flag)};
}

struct SpecFlags {
    std::string family, spec_file;
    std::string g, h, g0, t_odd, t_even;
    std::vector<std::string> gexc, hexc, texc;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f) {
    cmd->add_option("--family", f.family, "catalogued family name");
    cmd->add_option("--spec-file", f.spec_file, "JSON spec file path");
    cmd->add_option("--g", f.g, "generic g_k expression (jacobi)");
    cmd->add_option("--h", f.h, "generic h_k expression (jacobi)");
    cmd->add_option("--g0", f.g0, "g exception at k=0");
    cmd->add_option("--gexc", f.gexc, "g exception, k:EXPR")->allow_extra_args(false);
    cmd->add_option("--hexc", f.hexc, "h exception, k:EXPR")->allow_extra_args(false);
    cmd->add_option("--t-odd", f.t_odd, "generic t_(2k-1) expression (stieltjes)");
    cmd->add_option("--t-even", f.t_even, "generic t_(2k) expression (stieltjes)");
    cmd->add_option("--texc", f.texc, "t exception, n:EXPR")->allow_extra_args(false);
}

CoeffSeqSpec build_spec(const SpecFlags& f) {
    int sources = !f.family.empty() + !f.spec_file.empty() +
                  (!f.g.empty() || !f.h.empty()) +
                  (!f.t_odd.empty() || !f.t_even.empty());
    if (sources != 1)
        throw std::invalid_argument(
            "give exactly one spec source: --family, --spec-file, --g/--h, "
            "or --t-odd/--t-even");
    if (!f.family.empty()) return family_spec(family_by_name(f.family));
    if (!f.spec_file.empty()) {
        std::ifstream in(f.spec_file);
        if (!in)
            throw std::invalid_argument("cannot open spec file '" +
                                        f.spec_file + "'");
        return spec_from_json(json::parse(in));
    }
    if (!f.g.empty() || !f.h.empty()) {
        if (f.g.empty() || f.h.empty())
            throw std::invalid_argument("--g and --h are both required");
        std::map<unsigned long, Poly> ge, he;
        if (!f.g0.empty()) ge.emplace(0, q_poly_arg(f.g0, "--g0"));
        for (const auto& s : f.gexc) ge.insert(exception_arg(s, "--gexc"));
        for (const auto& s : f.hexc) he.insert(exception_arg(s, "--hexc"));
        return CoeffSeqSpec::make_jacobi(parse_expr(f.g), parse_expr(f.h),
                                         std::move(ge), std::move(he));
    }
    if (f.t_odd.empty() || f.t_even.empty())
        throw std::invalid_argument("--t-odd and --t-even are both required");
    std::map<unsigned long, Poly> te;
    for (const auto& s : f.texc) te.insert(exception_arg(s, "--texc"));
    return CoeffSeqSpec::make_stieltjes(parse_expr(f.t_odd),
                                        parse_expr(f.t_even), std::move(te));
}

std::vector<Poly> expand_any(const CoeffSeqSpec& spec, unsigned long n_max) {
    return spec.kind() == SpecKind::jacobi ? expand_jacobi(spec, n_max)
                                           : expand_stieltjes(spec, n_max);
}

std::string spec_label(const SpecFlags& f) {
    return f.family.empty() ? std::string("custom") : f.family;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_terms(const SpecFlags& f, const std::vector<Poly>& terms,
                const std::string& format) {
    if (format == "json") {
        emit(json{{"family", spec_label(f)}, {"terms", terms}});
    } else if (format == "csv") {
        for (std::size_t n = 0; n < terms.size(); ++n)
            std::cout << n << "," << to_string(terms[n]) << "\n";
    } else {
        for (const auto& t : terms) std::cout << to_string(t) << "\n";
    }
}

void emit_verdict(const CriterionVerdict& v, const std::string& format) {
    if (format == "json") {
        json j = v;
        emit(j);
        return;
    }
    std::cout << v.criterion << ": " << (v.verdict ? "true" : "false");
    if (!v.precondition_ok) std::cout << " (precondition failed)";
    std::cout << "\n";
    if (v.witness)
        std::cout << "witness: " << v.witness->condition
                  << " at k=" << v.witness->k << ", residual "
                  << to_string(v.witness->residual) << "\n";
    for (const auto& [label, residual] : v.symbolic)
        std::cout << "residual[" << label << "] = " << to_string(residual)
                  << "\n";
}

int verdict_rc(bool verdict) { return verdict ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-log-convexity toolkit: continued fractions, triangles, "
                 "positivity criteria, and Hankel total positivity"};
    app.set_help_flag("--help", "print help and exit");  // frees -h for --h
    app.require_subcommand(1);
    int rc = 0;

    // expand
    auto* cmd_expand = app.add_subcommand(
        "expand", "expand a spec into its first-column sequence");
    static SpecFlags exp_f;
    static unsigned long exp_n = 10;
    static std::string exp_fmt = "json";
    add_spec_flags(cmd_expand, exp_f);
    cmd_expand->add_option("--n", exp_n, "last index to produce");
    cmd_expand->add_option("--format", exp_fmt)
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd_expand->callback([&] {
        emit_terms(exp_f, expand_any(build_spec(exp_f), exp_n), exp_fmt);
    });

    // triangle
    auto* cmd_tri = app.add_subcommand(
        "triangle", "generate the triangular array of a jacobi spec");
    static SpecFlags tri_f;
    static unsigned long tri_n = 6;
    static std::string tri_fmt = "json";
    add_spec_flags(cmd_tri, tri_f);
    cmd_tri->add_option("--n", tri_n, "last row to produce");
    cmd_tri->add_option("--format", tri_fmt)
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd_tri->callback([&] {
        Triangle t = generate(build_spec(tri_f), tri_n);
        if (tri_fmt == "json") {
            json j = t;
            emit(j);
        } else {
            std::cout << triangle_to_csv(t);
        }
    });

    // rowgf
    auto* cmd_rowgf = app.add_subcommand(
        "rowgf",
        "row generating functions of the numeric triangle with data (e, g, h)");
    static std::string rg_e, rg_g, rg_h, rg_fmt = "json";
    static unsigned long rg_n = 6;
    cmd_rowgf->add_option("--g0", rg_e, "head value e = g_0")->required();
    cmd_rowgf->add_option("--g", rg_g, "diagonal value")->required();
    cmd_rowgf->add_option("--h", rg_h, "subdiagonal value")->required();
    cmd_rowgf->add_option("--n", rg_n, "last row");
    cmd_rowgf->add_option("--format", rg_fmt)
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd_rowgf->callback([&] {
        Poly e = q_poly_arg(rg_e, "--g0"), g = q_poly_arg(rg_g, "--g"),
             h = q_poly_arg(rg_h, "--h");
        auto terms = first_column(row_genfun_transform(e, g, h, rg_n));
        if (rg_fmt == "json") {
            emit(json{{"e", to_string(e)},
                      {"g", to_string(g)},
                      {"h", to_string(h)},
                      {"terms", terms}});
        } else if (rg_fmt == "csv") {
            for (std::size_t n = 0; n < terms.size(); ++n)
                std::cout << n << "," << to_string(terms[n]) << "\n";
        } else {
            for (const auto& t : terms) std::cout << to_string(t) << "\n";
        }
    });

    // contract
    auto* cmd_contract = app.add_subcommand(
        "contract", "contract a stieltjes spec to its jacobi form");
    static SpecFlags con_f;
    add_spec_flags(cmd_contract, con_f);
    cmd_contract->callback(
        [&] { emit(spec_to_json(contract(build_spec(con_f)))); });

    // criterion
    auto* cmd_crit = app.add_subcommand(
        "criterion", "sufficient conditions for m-q-log-convexity");
    cmd_crit->require_subcommand(1);

    auto* cmd_thm = cmd_crit->add_subcommand(
        "thm-main", "tridiagonal-data criterion over a k range");
    static SpecFlags thm_f;
    static unsigned long thm_order = 3, thm_kmax = 20;
    static std::string thm_fmt = "json";
    add_spec_flags(cmd_thm, thm_f);
    cmd_thm->add_option("--order", thm_order)->check(CLI::IsMember({2, 3}));
    cmd_thm->add_option("--kmax", thm_kmax, "check k = 0..kmax");
    cmd_thm->add_option("--format", thm_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_thm->callback([&] {
        auto v = check_thm_main(build_spec(thm_f),
                                thm_order == 2 ? CriterionOrder::order2
                                               : CriterionOrder::order3,
                                thm_kmax);
        emit_verdict(v, thm_fmt);
        rc = verdict_rc(v.verdict);
    });

    auto* cmd_rio = cmd_crit->add_subcommand(
        "riordan", "constant-data criterion g >= e >= 0, h >= 0, ge >= rh");
    static std::string rio_e, rio_g, rio_h, rio_fmt = "json";
    static unsigned long rio_r = 3;
    cmd_rio->add_option("--e", rio_e)->required();
    cmd_rio->add_option("--g", rio_g)->required();
    cmd_rio->add_option("--h", rio_h)->required();
    cmd_rio->add_option("--r", rio_r, "target convexity depth")
        ->check(CLI::IsMember({2, 3}));
    cmd_rio->add_option("--format", rio_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_rio->callback([&] {
        auto v = check_riordan(q_poly_arg(rio_e, "--e"),
                               q_poly_arg(rio_g, "--g"),
                               q_poly_arg(rio_h, "--h"), rio_r);
        emit_verdict(v, rio_fmt);
        rc = verdict_rc(v.verdict);
    });

    auto* cmd_gf = cmd_crit->add_subcommand(
        "gf", "closed-form generating-function criterion on (a, s, t)");
    static std::string gf_a, gf_s, gf_t, gf_fmt = "json";
    static unsigned long gf_order = 3;
    cmd_gf->add_option("--a", gf_a)->required();
    cmd_gf->add_option("--s", gf_s)->required();
    cmd_gf->add_option("--t", gf_t)->required();
    cmd_gf->add_option("--order", gf_order)->check(CLI::IsMember({2, 3}));
    cmd_gf->add_option("--format", gf_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_gf->callback([&] {
        auto v = check_gf_criterion(q_poly_arg(gf_a, "--a"),
                                    q_poly_arg(gf_s, "--s"),
                                    q_poly_arg(gf_t, "--t"),
                                    gf_order == 2 ? CriterionOrder::order2
                                                  : CriterionOrder::order3);
        emit_verdict(v, gf_fmt);
        rc = verdict_rc(v.verdict);
    });

    auto* cmd_st = cmd_crit->add_subcommand(
        "stieltjes", "ladder positivity t_n >=_q 0 over 1..kmax");
    static SpecFlags st_f;
    static unsigned long st_kmax = 20;
    static std::string st_fmt = "json";
    add_spec_flags(cmd_st, st_f);
    cmd_st->add_option("--kmax", st_kmax);
    cmd_st->add_option("--format", st_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_st->callback([&] {
        auto v = check_stieltjes(build_spec(st_f), st_kmax);
        emit_verdict(v, st_fmt);
        rc = verdict_rc(v.verdict);
    });

    // logconvex
    auto* cmd_lc = app.add_subcommand(
        "logconvex", "iterated q-log-convexity of an expanded sequence");
    static SpecFlags lc_f;
    static unsigned long lc_n = 12, lc_m = 3;
    static bool lc_stdin = false;
    static std::string lc_fmt = "json";
    add_spec_flags(cmd_lc, lc_f);
    cmd_lc->add_option("--n", lc_n, "expand spec up to this index");
    cmd_lc->add_option("--m", lc_m, "convexity depth to test");
    cmd_lc->add_flag("--stdin", lc_stdin,
                     "read {\"terms\": [...]} JSON from standard input");
    cmd_lc->add_option("--format", lc_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_lc->callback([&] {
        std::vector<Poly> terms;
        if (lc_stdin) {
            json j = json::parse(std::cin);
            terms = j.at("terms").get<std::vector<Poly>>();
        } else {
            terms = expand_any(build_spec(lc_f), lc_n);
        }
        auto report = is_m_q_log_convex(terms, lc_m);
        if (lc_fmt == "json") {
            json j = report;
            emit(j);
        } else {
            std::cout << "verdict: " << (report.verdict ? "true" : "false")
                      << " (levels " << report.levels_checked << "/"
                      << report.levels_requested << ")\n";
            if (report.failure)
                std::cout << "failure: level " << report.failure->level
                          << " index " << report.failure->index << " residual "
                          << to_string(report.failure->residual) << "\n";
        }
        rc = verdict_rc(report.verdict);
    });

    // tp
    auto* cmd_tp = app.add_subcommand(
        "tp", "total positivity of a Hankel window of the expansion");
    static SpecFlags tp_f;
    static unsigned long tp_window = 5, tp_order = 3, tp_offset = 0;
    static std::string tp_mode = "all", tp_fmt = "json";
    add_spec_flags(cmd_tp, tp_f);
    cmd_tp->add_option("--window", tp_window, "Hankel matrix size");
    cmd_tp->add_option("--order", tp_order, "largest minor size");
    cmd_tp->add_option("--offset", tp_offset, "sequence offset of the window");
    cmd_tp->add_option("--mode", tp_mode)
        ->check(CLI::IsMember({"all", "contiguous"}));
    cmd_tp->add_option("--format", tp_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_tp->callback([&] {
        auto terms =
            expand_any(build_spec(tp_f), tp_offset + 2 * (tp_window - 1));
        auto report = is_q_tp(hankel(terms, tp_window, tp_offset), tp_order,
                              tp_mode == "all" ? TpMode::all
                                               : TpMode::contiguous);
        if (tp_fmt == "json") {
            json j = report;
            emit(j);
        } else {
            std::cout << "verdict: " << (report.verdict ? "true" : "false")
                      << " (" << report.minors_checked << " minors)\n";
            if (report.witness) {
                std::cout << "witness minor: "
                          << to_string(report.witness->minor) << "\n";
            }
        }
        rc = verdict_rc(report.verdict);
    });

    // hankel-det
    auto* cmd_det = app.add_subcommand(
        "hankel-det", "determinant of a Hankel window of the expansion");
    static SpecFlags det_f;
    static unsigned long det_window = 4, det_offset = 0;
    static std::string det_fmt = "json";
    add_spec_flags(cmd_det, det_f);
    cmd_det->add_option("--window", det_window, "matrix size");
    cmd_det->add_option("--offset", det_offset, "sequence offset");
    cmd_det->add_option("--format", det_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_det->callback([&] {
        auto terms =
            expand_any(build_spec(det_f), det_offset + 2 * (det_window - 1));
        Poly d = det(hankel(terms, det_window, det_offset));
        if (det_fmt == "json")
            emit(json{{"size", det_window},
                      {"offset", det_offset},
                      {"det", d}});
        else
            std::cout << to_string(d) << "\n";
    });

    // identity-check
    auto* cmd_id = app.add_subcommand(
        "identity-check",
        "iterated-L vs Hankel determinant identities at an index");
    static SpecFlags id_f;
    static unsigned long id_n = 10, id_k = 3;
    add_spec_flags(cmd_id, id_f);
    static std::string id_fmt = "json";
    cmd_id->add_option("--n", id_n, "expand spec up to this index");
    cmd_id->add_option("--k", id_k, "center index");
    cmd_id->add_option("--format", id_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_id->callback([&] {
        bool holds =
            l2_l3_identity_check(expand_any(build_spec(id_f), id_n), id_k);
        if (id_fmt == "json")
            emit(json{{"k", id_k}, {"holds", holds}});
        else
            std::cout << "k=" << id_k << " holds=" << (holds ? "true" : "false")
                      << "\n";
        rc = verdict_rc(holds);
    });

    // explore
    auto* cmd_ex = app.add_subcommand(
        "explore", "random search for Hankel L-image positivity candidates");
    static unsigned long ex_trials = 100, ex_window = 5, ex_order = 1;
    static std::uint64_t ex_seed = 0;
    cmd_ex->add_option("--trials", ex_trials)->required();
    cmd_ex->add_option("--seed", ex_seed);
    cmd_ex->add_option("--window", ex_window);
    cmd_ex->add_option("--order", ex_order)->check(CLI::IsMember({1, 2, 3}));
    static std::string ex_fmt = "json";
    cmd_ex->add_option("--format", ex_fmt)
        ->check(CLI::IsMember({"json", "plain"}));
    cmd_ex->callback([&] {
        ExplorationReport r =
            explore_conjecture(ex_trials, ex_seed, ex_window, ex_order);
        if (ex_fmt == "json") {
            emit(json(r));
        } else {
            std::cout << "trials=" << r.trials << " held=" << r.hypothesis_held
                      << " candidates=" << r.candidates.size() << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
