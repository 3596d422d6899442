#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "angelesco/circle.hpp"
#include "angelesco/conformal.hpp"
#include "angelesco/equilibrium.hpp"
#include "angelesco/report.hpp"
#include "angelesco/scenario.hpp"
#include "angelesco/usz.hpp"
#include "angelesco/verify.hpp"

using namespace angelesco;

namespace {

struct CommonOpts {
    std::string config;
    std::optional<unsigned> bits;
    std::optional<int> grid;
    std::optional<std::string> tol;
    std::string out_dir = "reports";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("config", o.config, "scenario file")->required();
    cmd->add_option("--precision-bits", o.bits, "MPFR mantissa bits");
    cmd->add_option("--grid", o.grid, "collocation grid size");
    cmd->add_option("--tol", o.tol, "residual tolerance");
    cmd->add_option("--out-dir", o.out_dir, "report directory");
    cmd->add_option("--format", o.format, "row file format")
        ->check(CLI::IsMember({"csv", "json"}));
}

Scenario load(const CommonOpts& o) {
    ScenarioOverrides ov;
    ov.precision_bits = o.bits;
    ov.grid_n = o.grid;
    ov.tol = o.tol;
    return load_scenario(o.config, ov);
}

real_t tol_eff(const Scenario& sc) {
    return sc.tol > 0 ? sc.tol : default_residual_tol();
}

std::vector<real_t> normalized_c(const Scenario& sc) {
    real_t s = 0;
    for (const real_t& ci : sc.c) s += ci;
    std::vector<real_t> out = sc.c;
    for (real_t& ci : out) ci /= s;
    return out;
}

std::string fixed_str(const real_t& v) { return to_string_full(v); }

CheckRow make_row(int n_total, int i, const cplx_t& z, const cplx_t& lhs,
                  const cplx_t& rhs, const real_t& err,
                  const std::string& flags = "") {
    CheckRow r;
    r.n_total = n_total;
    r.i = i;
    r.z = z;
    r.lhs = lhs;
    r.rhs = rhs;
    r.rel_err = err;
    r.flags = flags;
    return r;
}

// strict decrease of per-stage maxima plus a bar on the final stage
void apply_trend_contract(CheckReport& rep, const std::vector<real_t>& stage_max,
                          const std::vector<int>& stages, const real_t& final_bar) {
    bool decreasing = true;
    for (size_t k = 1; k < stage_max.size(); ++k) {
        decreasing = decreasing && stage_max[k] < stage_max[k - 1];
    }
    const bool final_ok =
        !stage_max.empty() && stage_max.back() < final_bar;
    for (size_t k = 0; k < stage_max.size(); ++k) {
        rep.notes.emplace_back("max_rel_err_n" + std::to_string(stages[k]),
                               fixed_str(stage_max[k]));
    }
    rep.notes.emplace_back("decreasing", decreasing ? "yes" : "no");
    rep.notes.emplace_back("final_bar", fixed_str(final_bar));
    rep.forced_fail = !(decreasing && final_ok);
}

int run_cmd(const CommonOpts& o) {
    Scenario sc = load(o);
    if (!sc.has_system() || !sc.has_ray() || sc.schedule.empty() ||
        sc.z_points.empty()) {
        std::fprintf(stderr,
                     "run needs system.*, ray.c, ray.schedule and z-points\n");
        return 2;
    }
    const real_t tol = tol_eff(sc);
    RayContext ctx(sc.system, sc.grid_n, tol);

    CheckReport strong{"strong_asymptotics"};
    CheckReport fixed{"strong_asymptotics_fixed_direction"};
    CheckReport weak{"weak_asymptotics"};
    CheckReport cross{"cross_theorem_consistency", 10 * tol};

    std::vector<real_t> s_max, f_max, w_max;
    for (int N : sc.schedule) {
        const MultiIndex n = sc.index_for(N);
        real_t m = 0;
        for (CheckRow& r : verify_sa4_at(ctx, n, sc.z_points)) {
            m = std::max(m, r.rel_err);
            strong.rows.push_back(std::move(r));
        }
        s_max.push_back(m);
        m = 0;
        for (CheckRow& r : verify_sa4_at(ctx, n, sc.z_points, &sc.c)) {
            m = std::max(m, r.rel_err);
            fixed.rows.push_back(std::move(r));
        }
        f_max.push_back(m);
        m = 0;
        for (CheckRow& r : verify_weak_at(ctx, n)) {
            m = std::max(m, r.rel_err);
            weak.rows.push_back(std::move(r));
        }
        w_max.push_back(m);
    }
    const real_t bar = real_t(1) / 20;
    apply_trend_contract(strong, s_max, sc.schedule, bar);
    apply_trend_contract(weak, w_max, sc.schedule, bar);
    for (size_t k = 0; k < f_max.size(); ++k) {
        fixed.notes.emplace_back(
            "max_rel_err_n" + std::to_string(sc.schedule[k]), fixed_str(f_max[k]));
    }

    // same right-hand side assembled through the single-weight route
    const MultiIndex nf = sc.index_for(sc.schedule.back());
    const RayContext::Direction& dir = ctx.direction(nf);
    const std::vector<LogTrace> coupling =
        coupling_exponents(dir.ss, dir.eq.supports);
    const int NT = total_degree(nf);
    for (int i = 0; i < sc.system.d(); ++i) {
        for (const cplx_t& z : sc.z_points) {
            const cplx_t a = exp(NT * dir.eq.densities[i].log_primitive(z)) *
                             exp(cplx_t(dir.ss.log_S_inf[i])) /
                             eval_S(dir.ss, i, z);
            const cplx_t b = vw_assembled_rhs(sc.system, dir, coupling, i, nf, z);
            cross.rows.push_back(make_row(NT, i, z, a, b, abs(a / b - cplx_t(1)),
                                          ctx.flags_for(nf, dir)));
        }
    }

    const bool ok = write_reports({strong, fixed, weak, cross}, sc, o.out_dir,
                                  o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

int equilibrium_cmd(const CommonOpts& o) {
    Scenario sc = load(o);
    if (!sc.has_system() || !sc.has_ray()) {
        std::fprintf(stderr, "equilibrium needs system.* and ray.c\n");
        return 2;
    }
    const real_t tol = tol_eff(sc);
    std::vector<Interval> hulls;
    for (int i = 0; i < sc.system.d(); ++i) hulls.push_back(sc.system.hull(i));
    EquilibriumSolution eq =
        solve_vector_equilibrium(hulls, normalized_c(sc), sc.grid_n, tol);
    VariationalResidual vr = variational_residual(eq);

    CheckReport rep{"equilibrium_variational", real_t("1e-8")};
    const std::string flags = eq.solve_residual > tol ? "eq_residual" : "";
    for (int i = 0; i < eq.d(); ++i) {
        for (const real_t& x : cheb_nodes(eq.supports[i], 9)) {
            const real_t lhs = effective_potential(eq, i, x);
            rep.rows.push_back(make_row(0, i, cplx_t(x), cplx_t(lhs),
                                        cplx_t(eq.ell[i]), abs(lhs - eq.ell[i]),
                                        flags));
        }
    }
    bool masses_ok = true, pushed = false;
    for (int i = 0; i < eq.d(); ++i) {
        const real_t me = abs(eq.densities[i].mass() - eq.c[i]);
        masses_ok = masses_ok && me < real_t("1e-10");
        pushed = pushed || !(eq.supports[i] == eq.hulls[i]);
        rep.notes.emplace_back("support_" + std::to_string(i + 1),
                               "[" + fixed_str(eq.supports[i].a) + ", " +
                                   fixed_str(eq.supports[i].b) + "]");
        rep.notes.emplace_back("mass_err_" + std::to_string(i + 1), fixed_str(me));
        rep.notes.emplace_back("ell_" + std::to_string(i + 1), fixed_str(eq.ell[i]));
    }
    rep.notes.emplace_back("solve_residual", fixed_str(eq.solve_residual));
    rep.notes.emplace_back("equality_max", fixed_str(vr.eq_max));
    rep.notes.emplace_back("pushed", pushed ? "yes" : "no");
    bool ineq_ok = true;
    if (vr.has_free_region) {
        rep.notes.emplace_back("inequality_min", fixed_str(vr.ineq_min));
        ineq_ok = vr.ineq_min > -real_t("1e-8");
    }
    rep.forced_fail = !masses_ok || !ineq_ok || vr.eq_max >= real_t("1e-8");

    const bool ok = write_reports({rep}, sc, o.out_dir, o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

int szego_cmd(const CommonOpts& o) {
    Scenario sc = load(o);
    if (!sc.has_system() || !sc.has_ray()) {
        std::fprintf(stderr, "szego needs system.* and ray.c\n");
        return 2;
    }
    const real_t tol = tol_eff(sc);
    std::vector<Interval> hulls;
    for (int i = 0; i < sc.system.d(); ++i) hulls.push_back(sc.system.hull(i));
    EquilibriumSolution eq =
        solve_vector_equilibrium(hulls, normalized_c(sc), sc.grid_n, tol);
    SzegoSystem ss = solve_szego_system(sc.system, eq.supports, sc.grid_n);

    CheckReport rep{"szego_boundary_product", std::max(tol, real_t("1e-8"))};
    const std::string flags =
        ss.collocation_residual > rep.threshold ? "szego_residual" : "";
    for (int i = 0; i < ss.d(); ++i) {
        const Interval& d = ss.supports[i];
        for (const real_t& x : cheb_nodes(d, 9)) {
            real_t lhs = exp(2 * ss.s[i].eval(x));
            for (int j = 0; j < ss.d(); ++j) {
                if (j != i) lhs *= eval_S(ss, j, cplx_t(x)).real();
            }
            const real_t rhs = pi() * sc.system.weights[i].density(x) *
                               sqrt((x - d.a) * (d.b - x));
            rep.rows.push_back(make_row(0, i, cplx_t(x), cplx_t(lhs), cplx_t(rhs),
                                        abs(lhs / rhs - 1), flags));
        }
        rep.notes.emplace_back("log_S_inf_" + std::to_string(i + 1),
                               fixed_str(ss.log_S_inf[i]));
    }
    rep.notes.emplace_back("collocation_residual",
                           fixed_str(ss.collocation_residual));
    rep.notes.emplace_back("boundary_residual",
                           fixed_str(szego_boundary_residual(ss)));

    const bool ok = write_reports({rep}, sc, o.out_dir, o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

int mop_cmd(const CommonOpts& o, const std::string& nspec) {
    Scenario sc = load(o);
    if (!sc.has_system()) {
        std::fprintf(stderr, "mop needs system.*\n");
        return 2;
    }
    MultiIndex n;
    {
        std::string tok;
        for (char ch : nspec + ",") {
            if (ch == ',' || ch == ' ') {
                if (!tok.empty()) n.push_back(std::stoi(tok));
                tok.clear();
            } else {
                tok += ch;
            }
        }
    }
    validate_multi_index(sc.system, n);
    const real_t tol = tol_eff(sc);

    CheckReport rep{"mop_zero_split", real_t(1) / 2};
    MonicPoly P = solve_mop(sc.system, n);
    rep.notes.emplace_back("solve_residual", fixed_str(P.solve_residual));
    try {
        MopFactorization fac = split_factors(P, sc.system, n);
        for (int i = 0; i < sc.system.d(); ++i) {
            const int found = static_cast<int>(fac.zeros[i].size());
            rep.rows.push_back(make_row(total_degree(n), i, cplx_t(0),
                                        cplx_t(found), cplx_t(n[i]),
                                        abs(real_t(found - n[i]))));
        }
    } catch (const std::exception& e) {
        rep.forced_fail = true;
        rep.notes.emplace_back("split_error", e.what());
    }
    if (P.solve_residual > tol) rep.forced_fail = true;

    const bool ok = write_reports({rep}, sc, o.out_dir, o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

int usz_cmd(const CommonOpts& o, const std::string& eps_str) {
    Scenario sc = load(o);
    const real_t eps(eps_str);
    if (eps < 0) {
        std::fprintf(stderr, "epsilon must be nonnegative\n");
        return 2;
    }
    LogWeightFn th = make_example_weight(eps);
    const bool eps_zero = eps == 0;
    const bool eps_half = eps == real_t(1) / 2;

    CheckReport scaling{"usz_endpoint_scaling",
                        eps_zero ? real_t("1e-6") : real_t(0)};
    for (const char* ds : {"1e-1", "1e-3", "1e-6", "1e-9"}) {
        const real_t del(ds);
        const real_t v = usz_endpoint_integral(th, 0, del, Side::right) / pi();
        const real_t target = eps_zero ? 1 : 0;
        scaling.rows.push_back(
            make_row(0, 0, cplx_t(del), cplx_t(v), cplx_t(target),
                     eps_zero ? abs(v - target) : real_t(0)));
        if (!eps_zero) scaling.notes.emplace_back(std::string("value_") + ds,
                                                  fixed_str(v));
    }
    {  // strictly inside the vanishing part the window integral is zero
        const real_t v = usz_endpoint_integral(th, real_t("-0.8"), real_t("-0.2"),
                                               Side::right);
        scaling.rows.push_back(make_row(0, 0, cplx_t(real_t("-0.5")), cplx_t(v),
                                        cplx_t(0), abs(v)));
    }

    CheckReport rate{"usz_log_rate"};
    if (eps_half) {
        real_t prev = -1;
        bool ok = true;
        for (const char* ds : {"1e-2", "1e-8"}) {
            const real_t del(ds);
            const real_t v = usz_endpoint_integral(th, 0, del, Side::right) / pi();
            const real_t bound = pow(1 - log(del), -real_t(1) / 2);
            rate.rows.push_back(
                make_row(0, 0, cplx_t(del), cplx_t(v), cplx_t(bound), v / bound));
            ok = ok && v <= bound && 4 * v >= bound && (prev < 0 || v < prev);
            prev = v;
        }
        rate.forced_fail = !ok;
        rate.notes.emplace_back("contract", "value <= (1-log d)^{-1/2} <= 4 value");
    }

    CheckReport szego{"usz_szego_integral"};
    UszIntegral sz = szego_integral_ex(th, Interval(0, 1));
    szego.rows.push_back(make_row(0, 0, cplx_t(0), cplx_t(sz.value), cplx_t(0),
                                  real_t(0), sz.divergent ? "divergent" : ""));
    szego.notes.emplace_back("divergent", sz.divergent ? "yes" : "no");
    szego.notes.emplace_back("shell_decay_p", fixed_str(sz.decay_p));
    if (eps_half || eps_zero) szego.forced_fail = !sz.divergent;

    CheckReport verdict{"usz_window_verdict"};
    UszVerdict v = usz_verdict(th, Interval(-1, 0), Side::right);
    for (size_t k = 0; k < v.values.size(); ++k) {
        verdict.rows.push_back(make_row(
            0, 0, cplx_t(v.window_sizes[k]), cplx_t(v.values[k]),
            cplx_t(pow_int(real_t(2), -static_cast<long>(k))), real_t(0)));
    }
    verdict.notes.emplace_back("pass_observed", v.pass ? "yes" : "no");
    verdict.notes.emplace_back("thresholds_met", std::to_string(v.thresholds_met));
    const bool expect_pass = eps > 0;
    verdict.notes.emplace_back("pass_expected", expect_pass ? "yes" : "no");
    verdict.forced_fail = v.pass != expect_pass;

    std::vector<CheckReport> checks = {scaling, szego, verdict};
    if (eps_half) checks.insert(checks.begin() + 1, rate);
    const bool ok = write_reports(checks, sc, o.out_dir, o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

int circle_cmd(const CommonOpts& o) {
    Scenario sc = load(o);

    CircleTriple base;
    base.log_density = [](const real_t& th) { return cos(th) - sin(2 * th) / 2; };
    base.g = [](const real_t& th) { return cos(th) / 2; };
    DiskOuter D = triple_szego(base, 4096);

    CheckReport ratio{"circle_szego_ratio", real_t(1) / 20};
    for (int n : {4, 8, 12}) {
        CircleTriple t = base;
        for (int j = 0; j < n; ++j) {
            const real_t r = 1 - 1 / sqrt(real_t(n + j + 1));
            const real_t a = 2 * pi() * j / n + real_t(1) / 10;
            t.b.push_back(r * cplx_t(cos(a), sin(a)));
        }
        CircleONP p = circle_onp(t, n, 4096);
        const real_t aD = p.alpha * D.at0();
        ratio.rows.push_back(make_row(n, 0, cplx_t(0), cplx_t(aD), cplx_t(1),
                                      abs(aD - 1)));
    }

    CheckReport mass{"circle_mass_identity", real_t("1e-10")};
    {
        CircleTriple t = base;
        for (int j = 0; j < 7; ++j) {
            const real_t a = 2 * pi() * j / 7;
            t.b.push_back(real_t("0.8") * cplx_t(cos(a), sin(a)));
        }
        t.b.push_back(cplx_t(real_t(1) / 2));
        t.b.push_back(cplx_t(real_t(1) / 2));
        t.b.insert(t.b.end(), 3, cplx_t(0));
        CircleONP p = circle_onp(t, 12, 4096);
        Caratheodory F = caratheodory(t, 4096);
        CirclePoly psi = companion_psi_star(p, F, t.b);
        const real_t lam0 = lambda_at(p, psi, cplx_t(0));
        const real_t mean = lambda_mean(p, psi, 2048);
        mass.rows.push_back(make_row(12, 0, cplx_t(0), cplx_t(mean), cplx_t(lam0),
                                     abs(mean - lam0)));
        mass.rows.push_back(make_row(12, 0, cplx_t(0), cplx_t(lam0), cplx_t(F.m0),
                                     abs(lam0 - F.m0)));
        mass.notes.emplace_back("ortho_residual", fixed_str(p.ortho_residual));
    }

    CheckReport bridge{"joukowski_bridge", real_t("1e-8")};
    {
        IntervalTriple t;
        t.mu.iv = Interval(-1, 1);
        t.h = [](const real_t& x) { return real_t(3) / 10 * x - x * x / 10; };
        t.tau_finite = {cplx_t(real_t("1.2")), cplx_t(real_t("-1.2")),
                        cplx_t(real_t("0.5"), real_t("1.1")),
                        cplx_t(real_t("0.5"), real_t("-1.1"))};
        LogTrace tr = trace_add(log_v_trace(t.mu, t.mu.iv, 64),
                                LogTrace(ChebSeries::interpolate(t.mu.iv, 64, t.h)));
        DiskOuter Dt = disk_outer_from_trace(tr, 2048);
        ConformalFrame fr(t.mu.iv);
        const cplx_t z(real_t("1.1"), real_t("-0.6"));
        const cplx_t zeta = fr.phi(z);
        const cplx_t G = interval_G(t, z);
        const cplx_t Dz = Dt.eval(zeta);
        bridge.rows.push_back(
            make_row(0, 0, z, G, Dz, abs(G / Dz - cplx_t(1))));
        const real_t Gi = interval_G_inf(t);
        bridge.rows.push_back(make_row(0, 0, cplx_t(0), cplx_t(Gi),
                                       cplx_t(Dt.at0()), abs(Gi / Dt.at0() - 1)));
    }

    const bool ok = write_reports({ratio, mass, bridge}, sc, o.out_dir, o.format);
    std::printf("%s (reports in %s)\n", ok ? "PASS" : "FAIL", o.out_dir.c_str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple orthogonal polynomial asymptotics toolkit"};
    app.require_subcommand(1);

    CommonOpts run_o, eq_o, sz_o, mop_o, usz_o, circ_o;
    std::string mop_n, usz_eps = "0.5";

    add_common(app.add_subcommand("run", "full ray-schedule verification"), run_o);
    add_common(app.add_subcommand("equilibrium", "vector equilibrium solve"), eq_o);
    add_common(app.add_subcommand("szego", "coupled Szego system solve"), sz_o);
    CLI::App* mop_cmd_p =
        app.add_subcommand("mop", "multiple orthogonal polynomial for one index");
    add_common(mop_cmd_p, mop_o);
    mop_cmd_p->add_option("--n", mop_n, "multi-index, e.g. 5,3")->required();
    CLI::App* usz_cmd_p =
        app.add_subcommand("usz", "endpoint regularity of the example family");
    add_common(usz_cmd_p, usz_o);
    usz_cmd_p->add_option("--epsilon", usz_eps, "family parameter");
    add_common(app.add_subcommand("circle", "circle-side identities and bridge"),
               circ_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("run")) return run_cmd(run_o);
        if (app.got_subcommand("equilibrium")) return equilibrium_cmd(eq_o);
        if (app.got_subcommand("szego")) return szego_cmd(sz_o);
        if (app.got_subcommand("mop")) return mop_cmd(mop_o, mop_n);
        if (app.got_subcommand("usz")) return usz_cmd(usz_o, usz_eps);
        if (app.got_subcommand("circle")) return circle_cmd(circ_o);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
