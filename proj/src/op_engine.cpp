#include "angelesco/op_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "angelesco/cheb.hpp"
#include "angelesco/conformal.hpp"
#include "angelesco/linalg.hpp"
#include "angelesco/outer.hpp"

namespace angelesco {

real_t MonicPoly::eval(const real_t& x) const {
    real_t acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * x + coeffs[k];
    return acc;
}

cplx_t MonicPoly::eval(const cplx_t& z) const {
    cplx_t acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * z + coeffs[k];
    return acc;
}

real_t MonicPoly::eval_deriv(const real_t& x) const {
    real_t acc = 0;
    for (int k = degree(); k >= 1; --k) acc = acc * x + k * coeffs[k];
    return acc;
}

MonicPoly poly_from_zeros(const std::vector<real_t>& zeros) {
    std::vector<real_t> c{real_t(1)};
    for (const real_t& z : zeros) {
        c.insert(c.begin(), real_t(0));
        for (size_t k = 0; k + 1 < c.size(); ++k) c[k] -= z * c[k + 1];
    }
    return MonicPoly(std::move(c));
}

namespace {

// Fixed tanh-sinh nodes on [lo, hi], base density and e^{theta} folded into
// the weights. Endpoint distances are accumulated from the global interval so
// negative endpoint exponents of the base weight stay fully resolved even
// when a segment boundary coincides with an interval endpoint.
void append_ts_segment(const VaryingWeight& w, const real_t& lo,
                       const real_t& hi, int level, QuadRule& out) {
    const real_t h = ldexp(real_t(1), -level);
    const real_t mid = (lo + hi) / 2, rad = (hi - lo) / 2;
    const real_t off_a = lo - w.base.iv.a;
    const real_t off_b = w.base.iv.b - hi;
    const real_t half_pi = pi() / 2;
    const real_t log_rad_h = log(rad * h * half_pi);
    const real_t log_cut =
        -real_t(3 * static_cast<int>(working_precision_bits())) * log(real_t(2));
    const long j_guard = 8L << level;

    real_t lmax = 0;
    bool have_lmax = false;
    for (long j = 0; j <= j_guard; ++j) {
        bool kept = false;
        for (int sgn = (j == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
            const real_t t = sgn * j * h;
            const real_t u2 = pi() * sinh(t);
            const real_t one_m = 2 / (exp(u2) + 1);   // 1 - tanh(u2/2)
            const real_t one_p = 2 / (exp(-u2) + 1);  // 1 + tanh(u2/2)
            const real_t x = mid + rad * (one_p - 1);
            const real_t da = off_a + rad * one_p;
            const real_t db = off_b + rad * one_m;
            real_t lw = log_rad_h + log(cosh(t)) + log(one_m) + log(one_p) +
                        w.base.ga * log(da) + w.base.gb * log(db) + w.base.A_at(x);
            if (w.theta) lw += w.theta(x);
            if (!have_lmax || lw > lmax) {
                lmax = lw;
                have_lmax = true;
            }
            if (lw < lmax + log_cut) continue;
            out.x.push_back(x);
            out.w.push_back(exp(lw));
            kept = true;
            if (j == 0) break;
        }
        if (j > 0 && !kept) break;
    }
}

int composite_level(int order) {
    int level = 6;
    for (int o = order / 32; o > 1; o /= 2) ++level;
    return std::min(level, 13);
}

QuadRule varying_rule(const VaryingWeight& w, int order) {
    if (!w.breaks.empty()) {
        std::vector<real_t> cuts{w.base.iv.a};
        for (const real_t& t : w.breaks) {
            if (!(t > cuts.back() && t < w.base.iv.b)) {
                throw std::invalid_argument(
                    "varying_rule: breaks must be ascending interior points");
            }
            cuts.push_back(t);
        }
        cuts.push_back(w.base.iv.b);
        QuadRule r;
        const int level = composite_level(order);
        for (size_t k = 0; k + 1 < cuts.size(); ++k) {
            append_ts_segment(w, cuts[k], cuts[k + 1], level, r);
        }
        return r;
    }
    QuadRule r = weight_rule(w.base, order);
    if (w.theta) {
        for (int k = 0; k < r.n(); ++k) r.w[k] *= exp(w.theta(r.x[k]));
    }
    return r;
}

// max_k |int x^k p dmu_eff| for k < p.degree(), plus the weighted norm of p,
// both from one rule.
void ortho_residuals(const MonicPoly& p, const QuadRule& r, real_t& res_max,
                     real_t& norm) {
    const int n = p.degree();
    std::vector<real_t> resid(std::max(n, 1), real_t(0));
    real_t nrm2 = 0;
    for (int m = 0; m < r.n(); ++m) {
        const real_t pv = p.eval(r.x[m]);
        nrm2 += r.w[m] * pv * pv;
        real_t pw = r.w[m] * pv;
        for (int k = 0; k < n; ++k) {
            resid[k] += pw;
            pw *= r.x[m];
        }
    }
    res_max = 0;
    for (int k = 0; k < n; ++k) res_max = std::max(res_max, fabs(resid[k]));
    norm = sqrt(fabs(nrm2));
}

}  // namespace

MonicPoly monic_orthogonal(const VaryingWeight& w, int n) {
    w.base.validate();
    if (n < 0) throw std::invalid_argument("monic_orthogonal: n must be >= 0");
    if (n == 0) return MonicPoly({real_t(1)});

    const real_t target = default_residual_tol();
    int order = std::max(4 * n, 32);
    real_t last_res = 0;
    for (int attempt = 0; attempt < 5; ++attempt, order *= 2) {
        QuadRule r = varying_rule(w, order);
        std::vector<real_t> m(2 * n, real_t(0));
        for (int q = 0; q < r.n(); ++q) {
            real_t pw = r.w[q];
            for (int t = 0; t < 2 * n; ++t) {
                m[t] += pw;
                pw *= r.x[q];
            }
        }
        std::vector<std::vector<real_t>> A(n, std::vector<real_t>(n));
        std::vector<real_t> b(n);
        for (int k = 0; k < n; ++k) {
            for (int j = 0; j < n; ++j) A[k][j] = m[k + j];
            b[k] = -m[k + n];
        }
        RealSolveResult sol = solve_dense(A, b);
        MonicPoly p(std::move(sol.x));
        p.coeffs.push_back(real_t(1));

        // Independent verification at doubled order.
        QuadRule r2 = varying_rule(w, 2 * order);
        real_t res_max, nrm;
        ortho_residuals(p, r2, res_max, nrm);
        last_res = res_max / nrm;
        if (last_res < target) {
            p.solve_residual = last_res;
            return p;
        }
    }
    throw PrecisionError(
        "monic_orthogonal: residual " + to_string_full(last_res) +
        " above target after order escalation; increase mantissa_bits");
}

MonicPoly monic_orthogonal(const WeightSpec& w, int n) {
    return monic_orthogonal(VaryingWeight{w, nullptr, n}, n);
}

real_t weighted_norm(const MonicPoly& p, const VaryingWeight& w, int order) {
    if (order <= 0) order = std::max(4 * std::max(p.degree(), 1), 32);
    QuadRule r = varying_rule(w, order);
    real_t nrm2 = 0;
    for (int m = 0; m < r.n(); ++m) {
        const real_t pv = p.eval(r.x[m]);
        nrm2 += r.w[m] * pv * pv;
    }
    return sqrt(fabs(nrm2));
}

std::vector<real_t> zeros_in_interval(const MonicPoly& p, const Interval& iv) {
    const int deg = p.degree();
    std::vector<real_t> out;
    if (deg == 0) return out;

    const int M = std::max(8 * deg, 16);
    std::vector<real_t> xs;
    xs.reserve(M + 2);
    xs.push_back(iv.a);
    for (const real_t& x : cheb_nodes(iv, M)) xs.push_back(x);
    xs.push_back(iv.b);
    std::vector<real_t> vs(xs.size());
    for (size_t k = 0; k < xs.size(); ++k) vs[k] = p.eval(xs[k]);

    const real_t tol =
        ldexp(real_t(1), -static_cast<int>(working_precision_bits() / 2));
    for (size_t k = 0; k + 1 < xs.size(); ++k) {
        if (vs[k] == 0) {
            out.push_back(xs[k]);
            continue;
        }
        if (vs[k] * vs[k + 1] >= 0) continue;
        real_t lo = xs[k], hi = xs[k + 1];
        real_t flo = vs[k];
        real_t x = (lo + hi) / 2;
        for (int it = 0; it < 200; ++it) {
            const real_t fx = p.eval(x);
            if (fx == 0) break;
            if ((fx > 0) == (flo > 0)) {
                lo = x;
                flo = fx;
            } else {
                hi = x;
            }
            const real_t dfx = p.eval_deriv(x);
            real_t xn;
            if (dfx != 0) {
                xn = x - fx / dfx;
                if (!(xn > lo && xn < hi)) xn = (lo + hi) / 2;
            } else {
                xn = (lo + hi) / 2;
            }
            const real_t step = fabs(xn - x);
            x = xn;
            if (step < tol && hi - lo < 4 * tol) break;
        }
        out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<real_t> poly_zeros(const MonicPoly& p, const Interval& iv) {
    std::vector<real_t> z = zeros_in_interval(p, iv);
    if (static_cast<int>(z.size()) != p.degree()) {
        throw std::runtime_error(
            "poly_zeros: found " + std::to_string(z.size()) + " zeros for degree " +
            std::to_string(p.degree()) + " (precision loss suspected)");
    }
    return z;
}

AsymptoticsCheck classical_asymptotics_check(const WeightSpec& w, int n,
                                             const cplx_t& z) {
    if (z.imag() == 0 && w.iv.contains(z.real())) {
        throw std::domain_error("classical_asymptotics_check: z on the interval");
    }
    MonicPoly p = monic_orthogonal(w, n);
    const cplx_t lhs = p.eval(z);

    ConformalFrame frame(w.iv);
    const cplx_t phi = frame.phi(z);
    const int N = 64 + 8 * static_cast<int>(w.A.size());
    const cplx_t Gz = szego_G(w, w.iv, z, N);
    const real_t Ginf = szego_G_inf(w, w.iv, N);
    const cplx_t rhs = pow_int(w.iv.rad() / (2 * phi), n) * Ginf / Gz;

    AsymptoticsCheck out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.rel_err = abs(lhs / rhs - cplx_t(1));
    return out;
}

}  // namespace angelesco
