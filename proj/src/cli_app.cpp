#include "arithmaps/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arithmaps/agr.hpp"
#include "arithmaps/initial_space.hpp"
#include "arithmaps/io.hpp"
#include "arithmaps/kdv.hpp"
#include "arithmaps/padic.hpp"
#include "arithmaps/solutions.hpp"

namespace arithmaps {

namespace {

struct Common {
    std::string format = "tsv";
    std::string outPath;
};

void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.outPath.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.outPath, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + c.outPath);
    f << text;
}

uint64_t require_odd_prime(long p) {
    if (p < 3) throw CLI::ValidationError("--p", "p must be an odd prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw CLI::ValidationError("--p", std::to_string(p) + " is not prime");
    return static_cast<uint64_t>(p);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

// ---- dp2-table ------------------------------------------------------------

std::string dp2_table_text(uint64_t p, long N, const Rational& lambda, long steps,
                           const std::string& format) {
    LaguerreTau tau(lambda);
    if (steps <= 0) steps = 2 * static_cast<long>(p) + 2;
    auto seq = dp2_reduced_sequence(tau, N, p, 1, steps);
    auto cond = taucond_check(tau, N, p);
    auto period = period_detect(seq);
    std::vector<std::string> seqs;
    for (const auto& v : seq) seqs.push_back(v.to_string());
    const std::string condSecond = cond.second_defined ? cond.second.to_string() : "0/0";
    const std::string periodStr = period ? std::to_string(*period) : "none";
    if (format == "json") {
        nlohmann::json j;
        j["p"] = p;
        j["N"] = N;
        j["lambda"] = lambda.to_string();
        j["cond1"] = cond.first.to_string();
        j["cond2"] = condSecond;
        j["cond_satisfied"] = cond.satisfied;
        j["sequence"] = seqs;
        j["period"] = period ? nlohmann::json(*period) : nlohmann::json(nullptr);
        return j.dump(2) + "\n";
    }
    std::string out = tsv_row({"p", "cond1", "cond2", "sequence", "period"});
    out += tsv_row({std::to_string(p), cond.first.to_string(), condSecond, join(seqs, ","), periodStr});
    return out;
}

// ---- agr ------------------------------------------------------------------

std::string agr_text(const std::vector<ScanStratum>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json o;
            o["stratum"] = r.name;
            o["samples"] = r.samples;
            o["found"] = r.found;
            o["matched"] = r.matched;
            o["expected"] = r.expected;
            nlohmann::json h = nlohmann::json::object();
            for (auto& [m, c] : r.m_histogram) h[std::to_string(m)] = c;
            o["m_histogram"] = std::move(h);
            j.push_back(std::move(o));
        }
        return j.dump(2) + "\n";
    }
    std::string out = tsv_row({"stratum", "samples", "found", "matched", "expected", "m_histogram"});
    for (const auto& r : rows) {
        std::vector<std::string> hist;
        for (auto& [m, c] : r.m_histogram) hist.push_back(std::to_string(m) + ":" + std::to_string(c));
        out += tsv_row({r.name, std::to_string(r.samples), std::to_string(r.found),
                        std::to_string(r.matched), r.expected, join(hist, ";")});
    }
    return out;
}

// ---- kdv ------------------------------------------------------------------

std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--init", "cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, '\t')) cells.push_back(cell);
        if (!cells.empty()) rows.push_back(std::move(cells));
    }
    return rows;
}

std::string grid_tsv(const std::vector<std::vector<ProjValue>>& grid) {
    std::string out;
    for (const auto& row : grid) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(v.to_string());
        out += tsv_row(cells);
    }
    return out;
}

// ---- traj -----------------------------------------------------------------

template <FieldElement F, class StepFn, class Show>
std::string run_traj(MapState<F> s, long steps, long n0, StepFn&& step, Show&& show) {
    std::string out = tsv_row({"n", "x", "y"});
    out += tsv_row({std::to_string(n0), show(s.x), show(s.y)});
    for (long k = 0; k < steps; ++k) {
        s = step(s, n0 + k);
        out += tsv_row({std::to_string(n0 + k + 1), show(s.x), show(s.y)});
    }
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for discrete integrable maps over finite fields"};
    app.require_subcommand(1);

    Common common;

    // ---- dp2-table ----
    auto* tbl = app.add_subcommand("dp2-table",
                                   "reduced dP_II rational-solution sequence and tau conditions");
    long tbl_p = 7, tbl_N = 3, tbl_steps = 0;
    std::string tbl_lambda = "1";
    tbl->add_option("--p", tbl_p, "odd prime")->required();
    tbl->add_option("--N", tbl_N, "determinant size parameter");
    tbl->add_option("--lambda", tbl_lambda, "nonzero rational parameter");
    tbl->add_option("--steps", tbl_steps, "sequence length (default 2p+2)");
    tbl->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "json"}));
    tbl->add_option("--out", common.outPath, "write to file instead of stdout");

    // ---- agr ----
    auto* agr = app.add_subcommand("agr", "almost-good-reduction scan over singular strata");
    std::string agr_map = "psi";
    long agr_p = 7, agr_samples = 20, agr_gamma = 2;
    long agr_a = 0, agr_b = 3, agr_q = 2, agr_tau0 = 1;
    bool agr_a_set = false;
    uint64_t agr_seed = 1;
    long agr_mmax = 32;
    agr->add_option("--map", agr_map)->check(CLI::IsMember({"psi", "dp2", "qp1", "qp2"}));
    agr->add_option("--p", agr_p, "odd prime")->required();
    agr->add_option("--gamma", agr_gamma, "psi exponent");
    agr->add_option("--a", agr_a, "map parameter a")->each([&](const std::string&) { agr_a_set = true; });
    agr->add_option("--b", agr_b, "qp1 parameter b");
    agr->add_option("--q", agr_q, "q-shift parameter");
    agr->add_option("--tau0", agr_tau0, "qp2 parameter tau0");
    agr->add_option("--samples", agr_samples)->check(CLI::PositiveNumber);
    agr->add_option("--seed", agr_seed);
    agr->add_option("--m-max", agr_mmax)->check(CLI::PositiveNumber);
    agr->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "json"}));
    agr->add_option("--out", common.outPath);

    // ---- kdv ----
    auto* kdv = app.add_subcommand("kdv", "discrete KdV grids: worked lattice or solitons");
    long kdv_p = 7, kdv_m = 1, kdv_delta0 = 1, kdv_steps = 0, kdv_width = 0;
    std::string kdv_init;
    bool kdv_soliton = false, kdv_symbolic = false;
    std::vector<long> kdv_gamma, kdv_l;
    kdv->add_option("--p", kdv_p, "prime")->required();
    kdv->add_option("--m", kdv_m, "extension degree (r = p^m)");
    kdv->add_option("--delta0", kdv_delta0, "value of delta in F_r (enumeration index for m>1)");
    kdv->add_option("--init", kdv_init, "TSV: first row x_1^0..x_N^0, then one y_1^t per row");
    kdv->add_flag("--soliton", kdv_soliton, "evaluate the N-soliton determinant solution");
    kdv->add_flag("--symbolic", kdv_symbolic, "print the F_r(delta) grid instead of reducing");
    kdv->add_option("--gamma", kdv_gamma, "soliton phases");
    kdv->add_option("--l", kdv_l, "soliton speeds");
    kdv->add_option("--width", kdv_width, "soliton grid width (n count)");
    kdv->add_option("--steps", kdv_steps, "time steps");
    kdv->add_option("--format", common.format)->check(CLI::IsMember({"tsv", "pgm"}));
    kdv->add_option("--out", common.outPath);

    // ---- omega ----
    auto* om = app.add_subcommand("omega", "space of initial conditions for dP_II");
    long om_p = 3, om_m = 1, om_n = 0;
    long om_alpha0 = 1, om_beta0 = 2, om_delta = 0;
    bool om_minimal = false, om_orbits = false, om_edges = false;
    std::string om_format = "counts";
    om->add_option("--p", om_p, "prime")->required();
    om->add_option("--m", om_m, "extension degree (r = p^m)");
    om->add_option("--n", om_n, "time step");
    om->add_option("--alpha0", om_alpha0, "alpha_0 in F_r (enumeration index for m>1)");
    om->add_option("--beta0", om_beta0, "beta_0 in F_r");
    om->add_option("--delta", om_delta, "delta in F_r");
    om->add_flag("--minimal", om_minimal, "the reduced space");
    om->add_flag("--orbits", om_orbits, "print the cycle decomposition");
    om->add_flag("--edges", om_edges, "include step edges in JSON");
    om->add_option("--format", om_format)->check(CLI::IsMember({"counts", "json", "dot"}));
    om->add_option("--out", common.outPath);

    // ---- traj ----
    auto* tr = app.add_subcommand("traj", "trajectory dump for one map over a chosen field");
    std::string tr_map = "dp2", tr_mode = "rational", tr_x0 = "0", tr_y0 = "0";
    long tr_p = 7, tr_steps = 10, tr_n0 = 0, tr_precision = PAdic::kDefaultPrecision;
    long tr_a = -8, tr_delta = 2, tr_z0 = 2, tr_gamma = 2, tr_b = 3, tr_q = 2, tr_tau0 = 1;
    bool tr_periodic = false;
    tr->add_option("--map", tr_map)->check(CLI::IsMember({"dp2", "psi", "qp1", "qp2"}));
    tr->add_option("--mode", tr_mode)->check(CLI::IsMember({"rational", "qp", "fp", "pfp"}));
    tr->add_option("--p", tr_p, "prime (qp/fp/pfp modes)");
    tr->add_option("--precision", tr_precision, "p-adic working digits");
    tr->add_option("--x0", tr_x0)->required();
    tr->add_option("--y0", tr_y0)->required();
    tr->add_option("--steps", tr_steps)->check(CLI::PositiveNumber);
    tr->add_option("--n0", tr_n0, "starting step index");
    tr->add_option("--a", tr_a);
    tr->add_option("--delta", tr_delta);
    tr->add_option("--z0", tr_z0);
    tr->add_flag("--periodic-schedule", tr_periodic, "use the period-p coefficient redefinition");
    tr->add_option("--gamma", tr_gamma);
    tr->add_option("--b", tr_b);
    tr->add_option("--q", tr_q);
    tr->add_option("--tau0", tr_tau0);
    tr->add_option("--format", common.format)->check(CLI::IsMember({"tsv"}));
    tr->add_option("--out", common.outPath);

    std::vector<const char*> argv;
    argv.push_back("arithmaps");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (tbl->parsed()) {
            uint64_t p = require_odd_prime(tbl_p);
            emit(common, out, dp2_table_text(p, tbl_N, Rational(tbl_lambda), tbl_steps, common.format));
            return 0;
        }

        if (agr->parsed()) {
            uint64_t p = require_odd_prime(agr_p);
            std::vector<ScanStratum> rows;
            const int samples = static_cast<int>(agr_samples);
            const int mmax = static_cast<int>(agr_mmax);
            if (agr_map == "psi")
                rows = agr_scan_psi(static_cast<unsigned>(agr_gamma), agr_a_set ? agr_a : 1, p,
                                    samples, agr_seed, mmax);
            else if (agr_map == "dp2")
                rows = agr_scan_dp2(p, samples, agr_seed, mmax);
            else if (agr_map == "qp1")
                rows = agr_scan_qp1(agr_a_set ? agr_a : 2, agr_b, agr_q, p, samples, agr_seed, mmax);
            else
                rows = agr_scan_qp2(agr_a_set ? agr_a : 3, agr_q, agr_tau0, p, samples, agr_seed, mmax);
            emit(common, out, agr_text(rows, common.format));
            return 0;
        }

        if (kdv->parsed()) {
            uint64_t p = require_odd_prime(kdv_p);
            const FqCtx ctx = FqContext::make(p, static_cast<unsigned>(kdv_m));
            const Fq d0 = Fq::from_index(ctx, static_cast<uint64_t>(kdv_delta0));
            std::string text;
            std::string config;
            if (kdv_soliton) {
                if (kdv_l.empty() || kdv_l.size() != kdv_gamma.size())
                    throw CLI::ValidationError("--l", "need matching --gamma/--l lists");
                if (kdv_width <= 0 || kdv_steps <= 0)
                    throw CLI::ValidationError("--width", "soliton mode needs --width and --steps");
                SolitonParams sp{kdv_l, kdv_gamma};
                auto grid = soliton_grid(ctx, sp, d0, kdv_width, kdv_steps);
                config = "arithmaps kdv --soliton p=" + std::to_string(p) +
                         " m=" + std::to_string(kdv_m) + " delta0=" + d0.to_string() +
                         " width=" + std::to_string(kdv_width) + " steps=" + std::to_string(kdv_steps);
                for (size_t i = 0; i < kdv_l.size(); ++i)
                    config += " (gamma=" + std::to_string(kdv_gamma[i]) + ",l=" + std::to_string(kdv_l[i]) + ")";
                text = (common.format == "pgm") ? pgm_p2(grid, ctx->r(), config) : grid_tsv(grid);
            } else {
                if (kdv_init.empty()) throw CLI::ValidationError("--init", "need --init or --soliton");
                auto rows = read_tsv(kdv_init);
                if (rows.size() < 2) throw CLI::ValidationError("--init", "need x row and y rows");
                std::vector<Fq> x0, boundary;
                for (const auto& c : rows[0]) x0.push_back(Fq::from_int(ctx, std::stoll(c)));
                for (size_t t = 1; t < rows.size(); ++t)
                    boundary.push_back(Fq::from_int(ctx, std::stoll(rows[t][0])));
                if (kdv_steps > 0 && static_cast<size_t>(kdv_steps) < boundary.size())
                    boundary.resize(static_cast<size_t>(kdv_steps));
                auto sym = kdv_evolve_symbolic(ctx, x0, boundary);
                if (kdv_symbolic) {
                    for (const auto& row : sym.x) {
                        std::vector<std::string> cells;
                        for (const auto& v : row) cells.push_back(v.to_string());
                        text += tsv_row(cells);
                    }
                } else {
                    auto red = kdv_reduce(sym, d0);
                    config = "arithmaps kdv p=" + std::to_string(p) + " m=" + std::to_string(kdv_m) +
                             " delta0=" + d0.to_string() + " init=" + kdv_init;
                    text = (common.format == "pgm") ? pgm_p2(red.x, ctx->r(), config) : grid_tsv(red.x);
                }
            }
            emit(common, out, text);
            return 0;
        }

        if (om->parsed()) {
            uint64_t p = require_odd_prime(om_p);
            const FqCtx ctx = FqContext::make(p, static_cast<unsigned>(om_m));
            FqDp2Schedule sched{Fq::from_index(ctx, static_cast<uint64_t>(om_alpha0)),
                                Fq::from_index(ctx, static_cast<uint64_t>(om_beta0)),
                                Fq::from_index(ctx, static_cast<uint64_t>(om_delta))};
            OmegaSpace space = OmegaSpace::build(ctx, om_n, sched, om_minimal);
            std::string text;
            if (om_format == "counts") {
                text = tsv_row({"points", std::to_string(space.size())});
                if (om_orbits) {
                    auto cycles = orbit_decomposition(space, sched.delta.is_zero());
                    std::vector<std::string> lens;
                    for (const auto& c : cycles) lens.push_back(std::to_string(c.size()));
                    text += tsv_row({"cycles", std::to_string(cycles.size())});
                    text += tsv_row({"cycle_lengths", join(lens, ",")});
                }
            } else if (om_format == "json") {
                text = omega_json(space, om_edges);
            } else {
                text = omega_dot(space, sched.delta.is_zero());
            }
            emit(common, out, text);
            return 0;
        }

        if (tr->parsed()) {
            uint64_t p = require_odd_prime(tr_p);
            const FqCtx ctx = FqContext::make(p);
            Dp2ScheduleQ sched = tr_periodic
                                     ? Dp2ScheduleQ::periodic(tr_a, tr_delta, tr_z0, p)
                                     : Dp2ScheduleQ::linear(Rational(tr_a), Rational(tr_delta),
                                                            Rational(tr_z0));
            MapParamsZ params;
            if (tr_map == "dp2")
                params = Dp2ParamsZ{sched};
            else if (tr_map == "psi")
                params = PsiParamsZ{tr_a, static_cast<unsigned>(tr_gamma)};
            else if (tr_map == "qp1")
                params = QP1ParamsZ{tr_a, tr_b, tr_q};
            else
                params = QP2ParamsZ{tr_a, tr_q, tr_tau0};

            const Rational x0(tr_x0), y0(tr_y0);
            std::string text;
            if (tr_mode == "rational") {
                auto conv = [](const Rational& r) { return r; };
                text = run_traj(
                    MapState<Rational>{x0, y0}, tr_steps, tr_n0,
                    [&](const MapState<Rational>& s, long n) {
                        return apply_map_step(params, s, n, conv);
                    },
                    [](const Rational& v) { return v.to_string(); });
            } else if (tr_mode == "qp") {
                const int prec = static_cast<int>(tr_precision);
                auto conv = [&](const Rational& r) { return PAdic::from_rational(r, p, prec); };
                text = run_traj(
                    MapState<PAdic>{conv(x0), conv(y0)}, tr_steps, tr_n0,
                    [&](const MapState<PAdic>& s, long n) { return apply_map_step(params, s, n, conv); },
                    [](const PAdic& v) { return v.to_string(); });
            } else if (tr_mode == "fp") {
                auto conv = [&](const Rational& r) { return reduce_zp(r, ctx); };
                text = run_traj(
                    MapState<Fq>{conv(x0), conv(y0)}, tr_steps, tr_n0,
                    [&](const MapState<Fq>& s, long n) { return apply_map_step(params, s, n, conv); },
                    [](const Fq& v) { return v.to_string(); });
            } else {
                auto conv = [&](const Rational& r) { return PExt(ctx, EvalOutcome::determinate(reduce_qp(r, ctx))); };
                text = run_traj(
                    MapState<PExt>{conv(x0), conv(y0)}, tr_steps, tr_n0,
                    [&](const MapState<PExt>& s, long n) { return apply_map_step(params, s, n, conv); },
                    [](const PExt& v) { return v.to_string(); });
            }
            emit(common, out, text);
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        err << "math error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace arithmaps
