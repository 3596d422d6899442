#include "angelesco/szego_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "angelesco/conformal.hpp"
#include "angelesco/linalg.hpp"
#include "angelesco/op_engine.hpp"

namespace angelesco {

namespace {

LogTrace tag_only(const Interval& iv, const real_t& pa, const real_t& pb) {
    return LogTrace(ChebSeries(iv, {real_t(0)}), pa, pb);
}

struct TagPair {
    real_t a = 0, b = 0;
};

// Endpoint log coefficients of the traces. A shared endpoint couples the two
// adjacent coefficients through the same 2/1 weighting as the trace
// equations themselves; elsewhere the data coefficient is simply halved.
std::vector<TagPair> solve_tags(const std::vector<LogTrace>& data,
                                const std::vector<Interval>& sup) {
    const int d = static_cast<int>(sup.size());
    std::vector<TagPair> sig(d);
    for (int i = 0; i < d; ++i) {
        sig[i].a = data[i].pa / 2;
        sig[i].b = data[i].pb / 2;
    }
    for (int i = 0; i + 1 < d; ++i) {
        if (sup[i].b == sup[i + 1].a) {
            const real_t p = data[i].pb, q = data[i + 1].pa;
            sig[i].b = (2 * p - q) / 3;
            sig[i + 1].a = (2 * q - p) / 3;
        }
    }
    return sig;
}

}  // namespace

SzegoSystem solve_szego_system(const AngelescoSystem& sys,
                               const std::vector<Interval>& supports, int N) {
    const int d = static_cast<int>(supports.size());
    if (d != sys.d()) throw std::invalid_argument("szego: size mismatch");

    std::vector<LogTrace> data;
    data.reserve(d);
    for (int i = 0; i < d; ++i) {
        data.push_back(log_v_trace(sys.weights[i], supports[i], N));
    }
    const std::vector<TagPair> sig = solve_tags(data, supports);

    std::vector<ConformalFrame> frames;
    frames.reserve(d);
    for (const Interval& iv : supports) frames.emplace_back(iv);

    // Collocate 2 s_i + sum_{j != i} H_j s_j = log v_i for the smooth parts;
    // the endpoint log terms on both sides cancel pointwise by the tag solve.
    const int dim = d * N;
    std::vector<std::vector<real_t>> A(dim, std::vector<real_t>(dim, real_t(0)));
    std::vector<real_t> b(dim, real_t(0));
    const std::vector<real_t> snodes = cheb_ref_nodes(N);

    for (int i = 0; i < d; ++i) {
        for (int m = 0; m < N; ++m) {
            const int row = i * N + m;
            const real_t s = snodes[m];
            const real_t x = supports[i].from_ref(s);
            for (int j = 0; j < d; ++j) {
                real_t* col = &A[row][j * N];
                if (j == i) {
                    real_t tkm1 = 1, tk = s;
                    col[0] += 2;
                    for (int k = 1; k < N; ++k) {
                        col[k] += 2 * tk;
                        const real_t tkp1 = 2 * s * tk - tkm1;
                        tkm1 = tk;
                        tk = tkp1;
                    }
                } else {
                    const real_t phi = frames[j].phi(cplx_t(x)).real();
                    col[0] += 1;
                    real_t pk = phi;
                    for (int k = 1; k < N; ++k) {
                        col[k] += pk;
                        pk *= phi;
                    }
                }
            }
            real_t rhs = data[i].smooth.eval_ref(s);
            rhs += (data[i].pa - 2 * sig[i].a) * log(x - supports[i].a);
            rhs += (data[i].pb - 2 * sig[i].b) * log(supports[i].b - x);
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                rhs -= harmonic_ext(tag_only(supports[j], sig[j].a, sig[j].b),
                                    cplx_t(x));
            }
            b[row] = rhs;
        }
    }

    RealSolveResult lin = solve_dense(A, b);

    SzegoSystem out;
    out.sys = sys;
    out.supports = supports;
    for (int i = 0; i < d; ++i) {
        std::vector<real_t> coef(lin.x.begin() + i * N,
                                 lin.x.begin() + (i + 1) * N);
        out.s.emplace_back(ChebSeries(supports[i], std::move(coef)), sig[i].a,
                           sig[i].b);
        out.log_S_inf.push_back(outer_log_inf(out.s.back()));
    }

    // Defect of the trace equations measured off the collocation grid against
    // a finer projection of the data.
    real_t defect = lin.residual;
    const int M = 181;
    for (int i = 0; i < d; ++i) {
        const LogTrace fine = log_v_trace(sys.weights[i], supports[i], 2 * N);
        for (const real_t& x : cheb_nodes(supports[i], M)) {
            real_t r = 2 * out.s[i].eval(x) - fine.eval(x);
            for (int j = 0; j < d; ++j) {
                if (j != i) r += harmonic_ext(out.s[j], cplx_t(x));
            }
            defect = std::max(defect, fabs(r));
        }
    }
    out.collocation_residual = defect;
    return out;
}

cplx_t eval_S(const SzegoSystem& ss, int i, const cplx_t& z) {
    return outer_eval(ss.s[i], z);
}

real_t szego_boundary_residual(const SzegoSystem& ss, int probe_n) {
    real_t worst = 0;
    for (int i = 0; i < ss.d(); ++i) {
        const Interval& iv = ss.supports[i];
        for (const real_t& x : cheb_nodes(iv, probe_n)) {
            const cplx_t sp = outer_plus(ss.s[i], x);
            real_t lhs = sp.real() * sp.real() + sp.imag() * sp.imag();
            for (int j = 0; j < ss.d(); ++j) {
                if (j != i) lhs *= outer_eval(ss.s[j], cplx_t(x)).real();
            }
            const real_t v = ss.sys.weights[i].density(x) * pi() *
                             sqrt((x - iv.a) * (iv.b - x));
            worst = std::max(worst, fabs(lhs / v - 1));
        }
    }
    return worst;
}

std::vector<LogTrace> apply_H(const std::vector<LogTrace>& u,
                              const std::vector<Interval>& targets, int M) {
    const int d = static_cast<int>(u.size());
    if (static_cast<int>(targets.size()) != d) {
        throw std::invalid_argument("apply_H: size mismatch");
    }
    std::vector<LogTrace> out;
    out.reserve(d);
    for (int i = 0; i < d; ++i) {
        const Interval& t = targets[i];
        real_t pa = 0, pb = 0;
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            const Interval& s = u[j].iv();
            if (s.a == t.a || s.b == t.a) {
                pa -= (s.a == t.a ? u[j].pa : u[j].pb) / 2;
            }
            if (s.a == t.b || s.b == t.b) {
                pb -= (s.a == t.b ? u[j].pa : u[j].pb) / 2;
            }
        }
        std::vector<real_t> vals;
        vals.reserve(M);
        for (const real_t& x : cheb_nodes(t, M)) {
            real_t v = 0;
            for (int j = 0; j < d; ++j) {
                if (j != i) v -= harmonic_ext(u[j], cplx_t(x)) / 2;
            }
            v -= pa * log(x - t.a) + pb * log(t.b - x);
            vals.push_back(v);
        }
        out.emplace_back(ChebSeries::from_values(t, vals), pa, pb);
    }
    return out;
}

std::vector<ChebSeries> apply_D(const DOperatorContext& ctx,
                                const std::vector<ChebSeries>& u) {
    const int d = ctx.sys.d();
    const int ntot = total_degree(ctx.n);
    if (static_cast<int>(u.size()) != d) {
        throw std::invalid_argument("apply_D: size mismatch");
    }

    std::vector<MonicPoly> t(d);
    for (int j = 0; j < d; ++j) {
        VaryingWeight w;
        w.base = ctx.sys.weights[j];
        w.n = ctx.n[j];
        w.theta = [&ctx, &u, j, d, ntot](const real_t& x) {
            real_t th = 2 * u[j].eval(x);
            for (int k = 0; k < d; ++k) {
                if (k != j) {
                    th -= ntot * ctx.eq.densities[k].potential(cplx_t(x));
                }
            }
            return th;
        };
        t[j] = monic_orthogonal(w, ctx.n[j]);
    }

    std::vector<ChebSeries> out;
    out.reserve(d);
    for (int i = 0; i < d; ++i) {
        const Interval& hull = ctx.sys.hull(i);
        std::vector<real_t> vals;
        vals.reserve(ctx.grid_n);
        for (const real_t& x : cheb_nodes(hull, ctx.grid_n)) {
            real_t v = 0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                v += log(fabs(t[j].eval(x))) +
                     ntot * ctx.eq.densities[j].potential(cplx_t(x));
            }
            vals.push_back(v / 2);
        }
        out.push_back(ChebSeries::from_values(hull, vals));
    }
    return out;
}

std::vector<ChebSeries> q_from_factors(const DOperatorContext& ctx,
                                       const MopFactorization& f) {
    const int d = ctx.sys.d();
    const int ntot = total_degree(ctx.n);
    std::vector<ChebSeries> out;
    out.reserve(d);
    for (int i = 0; i < d; ++i) {
        const Interval& hull = ctx.sys.hull(i);
        std::vector<real_t> vals;
        vals.reserve(ctx.grid_n);
        for (const real_t& x : cheb_nodes(hull, ctx.grid_n)) {
            real_t v = 0;
            for (int j = 0; j < d; ++j) {
                if (j == i) continue;
                v += log(fabs(f.factors[j].eval(x))) +
                     ntot * ctx.eq.densities[j].potential(cplx_t(x));
            }
            vals.push_back(v / 2);
        }
        out.push_back(ChebSeries::from_values(hull, vals));
    }
    return out;
}

real_t sup_distance(const std::vector<ChebSeries>& a,
                    const std::vector<ChebSeries>& b, int probe_n) {
    real_t worst = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        for (const real_t& x : cheb_nodes(a[i].iv, probe_n)) {
            worst = std::max(worst, fabs(a[i].eval(x) - b[i].eval(x)));
        }
    }
    return worst;
}

FixedPointResult iterate_D(const DOperatorContext& ctx,
                           std::vector<ChebSeries> u0, int max_iter,
                           const real_t& tol) {
    FixedPointResult res;
    res.u = std::move(u0);
    real_t prev_delta = 0;
    bool have_prev = false;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<ChebSeries> next = apply_D(ctx, res.u);
        const real_t delta = sup_distance(next, res.u);
        if (have_prev && delta > prev_delta) {
            // Oscillation: average with the previous iterate.
            for (size_t i = 0; i < next.size(); ++i) {
                std::vector<real_t> c(std::max(next[i].c.size(), res.u[i].c.size()),
                                      real_t(0));
                for (size_t k = 0; k < next[i].c.size(); ++k) c[k] += next[i].c[k] / 2;
                for (size_t k = 0; k < res.u[i].c.size(); ++k) c[k] += res.u[i].c[k] / 2;
                next[i] = ChebSeries(next[i].iv, std::move(c));
            }
        }
        res.u = std::move(next);
        res.iterations = it + 1;
        res.last_delta = delta;
        prev_delta = delta;
        have_prev = true;
        if (delta < tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace angelesco
