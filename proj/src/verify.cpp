#include "angelesco/verify.hpp"

#include <numeric>
#include <stdexcept>

#include "angelesco/outer.hpp"

namespace angelesco {

namespace {

// Direction key: the multi-index divided by the gcd of its entries. Marginal
// directions (a zero component) have no interior equilibrium and are out of
// scope.
MultiIndex reduced_key(const MultiIndex& n) {
    int g = 0;
    for (int v : n) g = std::gcd(g, v);
    if (g == 0) {
        throw std::invalid_argument(
            "ray direction: zero multi-index has no direction");
    }
    MultiIndex key(n.size());
    for (size_t t = 0; t < n.size(); ++t) {
        if (n[t] == 0) {
            throw std::invalid_argument(
                "ray direction: marginal multi-index (zero component)");
        }
        key[t] = n[t] / g;
    }
    return key;
}

void ensure_off_hulls(const AngelescoSystem& sys, const cplx_t& z) {
    if (z.imag() != 0) return;
    for (int i = 0; i < sys.d(); ++i) {
        if (sys.hull(i).contains(z.real())) {
            throw std::domain_error("probe point lies on a system interval");
        }
    }
}

}  // namespace

RayContext::RayContext(AngelescoSystem sys, int grid_n, real_t tol)
    : sys_(std::move(sys)),
      table_(sys_),
      grid_n_(grid_n),
      tol_(std::move(tol)) {
    sys_.validate();
}

const RayContext::Direction& RayContext::direction(const MultiIndex& n) {
    validate_multi_index(sys_, n);
    MultiIndex key = reduced_key(n);
    auto it = by_index_.find(key);
    if (it != by_index_.end()) return it->second;

    const int tot = total_degree(key);
    std::vector<real_t> c(key.size());
    for (size_t t = 0; t < key.size(); ++t) c[t] = real_t(key[t]) / tot;
    return by_index_.emplace(std::move(key), solve_direction(c)).first->second;
}

const RayContext::Direction& RayContext::direction_c(
    const std::vector<real_t>& c) {
    if (static_cast<int>(c.size()) != sys_.d()) {
        throw std::invalid_argument("direction_c: dimension mismatch");
    }
    real_t sum = 0;
    for (const real_t& v : c) {
        if (!(v > 0)) {
            throw std::invalid_argument("direction_c: components must be positive");
        }
        sum += v;
    }
    auto it = by_c_.find(c);
    if (it != by_c_.end()) return it->second;

    std::vector<real_t> cn(c);
    for (real_t& v : cn) v /= sum;
    return by_c_.emplace(c, solve_direction(cn)).first->second;
}

RayContext::Direction RayContext::solve_direction(const std::vector<real_t>& c) {
    std::vector<Interval> hulls;
    hulls.reserve(sys_.d());
    for (int i = 0; i < sys_.d(); ++i) hulls.push_back(sys_.hull(i));
    Direction dir;
    dir.eq = solve_vector_equilibrium(hulls, c, grid_n_, tol_);
    dir.ss = solve_szego_system(sys_, dir.eq.supports, grid_n_);
    return dir;
}

const MopFactorization& RayContext::factors(const MultiIndex& n) {
    auto it = mops_.find(n);
    if (it != mops_.end()) return it->second;
    MonicPoly P = solve_mop(table_, n);
    return mops_.emplace(n, split_factors(P, sys_, n)).first->second;
}

std::string RayContext::flags_for(const MultiIndex& n,
                                  const Direction& dir) const {
    std::string out;
    auto add = [&out](const char* tag) {
        if (!out.empty()) out += ';';
        out += tag;
    };
    if (dir.eq.solve_residual > tol_) add("eq_residual");
    if (dir.ss.collocation_residual > tol_) add("szego_residual");
    auto it = mops_.find(n);
    if (it != mops_.end() && it->second.full.solve_residual > tol_) {
        add("mop_residual");
    }
    return out;
}

std::vector<CheckRow> verify_sa4_at(RayContext& ctx, const MultiIndex& n,
                                    const std::vector<cplx_t>& zs,
                                    const std::vector<real_t>* fixed_c) {
    validate_multi_index(ctx.system(), n);
    const int N = total_degree(n);
    const RayContext::Direction* dirp = nullptr;
    if (fixed_c) {
        dirp = &ctx.direction_c(*fixed_c);
    } else if (N > 0) {
        dirp = &ctx.direction(n);
    } else {
        throw std::invalid_argument(
            "verify_sa4_at: the zero multi-index needs an explicit direction");
    }
    const RayContext::Direction& dir = *dirp;
    const MopFactorization* fac = N > 0 ? &ctx.factors(n) : nullptr;
    const std::string flags = ctx.flags_for(n, dir);

    std::vector<CheckRow> rows;
    rows.reserve(zs.size() * ctx.system().d());
    for (int i = 0; i < ctx.system().d(); ++i) {
        const cplx_t S_inf = exp(cplx_t(dir.ss.log_S_inf[i], 0));
        for (const cplx_t& z : zs) {
            ensure_off_hulls(ctx.system(), z);
            CheckRow r;
            r.n_total = N;
            r.i = i;
            r.z = z;
            r.flags = flags;
            r.lhs = fac ? fac->factors[i].eval(z) : cplx_t(1);
            const cplx_t lp =
                N > 0 ? dir.eq.densities[i].log_primitive(z) : cplx_t(0);
            r.rhs = exp(real_t(N) * lp) * S_inf / eval_S(dir.ss, i, z);
            r.rel_err = abs(r.lhs / r.rhs - cplx_t(1));
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<CheckRow> verify_weak_at(RayContext& ctx, const MultiIndex& n) {
    validate_multi_index(ctx.system(), n);
    const int N = total_degree(n);
    if (N == 0) {
        throw std::invalid_argument("verify_weak_at: empty zero set at |n| = 0");
    }
    const RayContext::Direction& dir = ctx.direction(n);
    const MopFactorization& fac = ctx.factors(n);
    const std::string flags = ctx.flags_for(n, dir);

    std::vector<CheckRow> rows;
    for (int i = 0; i < ctx.system().d(); ++i) {
        const ChebDensity& om = dir.eq.densities[i];
        const real_t ci = dir.eq.c[i];
        const real_t ks = kolmogorov_distance(
            counting_measure(fac.zeros[i]),
            [&om, &ci](const real_t& x) { return om.cdf(x) / ci; });
        CheckRow r;
        r.n_total = N;
        r.i = i;
        r.lhs = cplx_t(ks, 0);
        r.rel_err = ks;
        r.flags = flags;
        rows.push_back(std::move(r));
    }
    return rows;
}

VaryingConfig varying_from_equilibrium(const AngelescoSystem& sys,
                                       const EquilibriumSolution& eq, int i,
                                       int n,
                                       std::function<real_t(const real_t&)> h) {
    if (i < 0 || i >= eq.d() || sys.d() != eq.d()) {
        throw std::invalid_argument("varying_from_equilibrium: bad component");
    }
    VaryingConfig cfg;
    cfg.mu = sys.weights[i];
    cfg.restrict_to = eq.supports[i];
    cfg.n = n;
    cfg.h = std::move(h);

    std::vector<real_t> g = eq.densities[i].g;
    for (real_t& v : g) v /= eq.c[i];
    cfg.omega = ChebDensity(eq.densities[i].iv, std::move(g));

    if (eq.supports[i].a > eq.hulls[i].a || eq.supports[i].b < eq.hulls[i].b) {
        EquilibriumSolution snap = eq;
        cfg.kappa = [snap, i](const real_t& x) { return kappa(snap, i, x); };
    }
    return cfg;
}

VaryingResult verify_vw_at(const VaryingConfig& cfg,
                           const std::vector<cplx_t>& zs, int quad_n,
                           const real_t* tol) {
    if (cfg.n < 0) throw std::invalid_argument("verify_vw_at: negative degree");
    if (cfg.omega.iv.a < cfg.mu.iv.a || cfg.omega.iv.b > cfg.mu.iv.b) {
        throw std::invalid_argument(
            "verify_vw_at: external measure exceeds the orthogonality interval");
    }

    VaryingWeight vw;
    vw.base = cfg.mu;
    vw.n = cfg.n;
    {
        const ChebDensity omega = cfg.omega;
        const auto h = cfg.h;
        const auto kap = cfg.kappa;
        const int nn = cfg.n;
        vw.theta = [omega, h, kap, nn](const real_t& x) {
            real_t v = omega.iv.contains(x) ? omega.potential_on(x)
                                            : omega.potential(cplx_t(x, 0));
            if (kap) v += kap(x);
            real_t t = 2 * nn * v;
            if (h) t += h(x);
            return t;
        };
    }
    if (cfg.omega.iv.a > cfg.mu.iv.a) vw.breaks.push_back(cfg.omega.iv.a);
    if (cfg.omega.iv.b < cfg.mu.iv.b) vw.breaks.push_back(cfg.omega.iv.b);

    VaryingResult out;
    out.T = monic_orthogonal(vw, cfg.n);
    std::string flags;
    if (tol && out.T.solve_residual > *tol) flags = "op_residual";

    LogTrace logv = log_v_trace(cfg.mu, cfg.restrict_to, quad_n);
    if (cfg.h) {
        logv = trace_add(
            logv, LogTrace(ChebSeries::interpolate(cfg.restrict_to, quad_n, cfg.h)));
    }
    const LogTrace half = trace_scale(logv, real_t(1) / 2);
    const real_t log_G_inf = outer_log_inf(half);

    out.rows.reserve(zs.size());
    for (const cplx_t& z : zs) {
        if (z.imag() == 0 && cfg.mu.iv.contains(z.real())) {
            throw std::domain_error("probe point lies on the interval");
        }
        CheckRow r;
        r.n_total = cfg.n;
        r.z = z;
        r.flags = flags;
        r.lhs = out.T.eval(z);
        r.rhs = exp(real_t(cfg.n) * cfg.omega.log_primitive(z) +
                    cplx_t(log_G_inf, 0)) /
                outer_eval(half, z);
        r.rel_err = abs(r.lhs / r.rhs - cplx_t(1));
        out.rows.push_back(std::move(r));
    }

    const real_t nrm = weighted_norm(out.T, vw);
    out.norm_sq = nrm * nrm;
    out.norm_target = 2 * exp(2 * log_G_inf);
    out.norm_ratio = out.norm_sq / out.norm_target;
    return out;
}

std::vector<LogTrace> coupling_exponents(const SzegoSystem& ss,
                                         const std::vector<Interval>& targets,
                                         int M) {
    std::vector<LogTrace> centered;
    centered.reserve(ss.d());
    for (int i = 0; i < ss.d(); ++i) {
        LogTrace t = ss.s[i];
        if (t.smooth.c.empty()) t.smooth.c.push_back(real_t(0));
        t.smooth.c[0] -= ss.log_S_inf[i];
        centered.push_back(std::move(t));
    }
    std::vector<LogTrace> y = apply_H(centered, targets, M);
    for (LogTrace& t : y) t = trace_scale(t, real_t(2));
    return y;
}

cplx_t vw_assembled_rhs(const AngelescoSystem& sys,
                        const RayContext::Direction& dir,
                        const std::vector<LogTrace>& coupling, int i,
                        const MultiIndex& n, const cplx_t& z, int quad_n) {
    const int N = total_degree(n);
    LogTrace logv = log_v_trace(sys.weights[i], dir.eq.supports[i], quad_n);
    logv = trace_add(logv, coupling[i]);
    const LogTrace half = trace_scale(logv, real_t(1) / 2);
    return exp(real_t(N) * dir.eq.densities[i].log_primitive(z) +
               cplx_t(outer_log_inf(half), 0)) /
           outer_eval(half, z);
}

}  // namespace angelesco
