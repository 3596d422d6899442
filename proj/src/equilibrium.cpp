#include "angelesco/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>

#include "angelesco/cheb.hpp"
#include "angelesco/conformal.hpp"
#include "angelesco/linalg.hpp"

namespace angelesco {

namespace {

void validate_problem(const std::vector<Interval>& hulls,
                      const std::vector<real_t>& c) {
    const int d = static_cast<int>(hulls.size());
    if (d == 0 || hulls.size() != c.size()) {
        throw std::invalid_argument("equilibrium: size mismatch");
    }
    real_t sum = 0;
    for (const real_t& ci : c) {
        if (!(ci > 0)) throw std::invalid_argument("equilibrium: c_i must be > 0");
        sum += ci;
    }
    if (fabs(sum - 1) > 1e-10) {
        throw std::invalid_argument("equilibrium: masses must sum to 1");
    }
    for (int i = 0; i + 1 < d; ++i) {
        if (!(hulls[i].b <= hulls[i + 1].a)) {
            throw std::invalid_argument("equilibrium: hulls must be ordered and disjoint");
        }
    }
}

struct FixedSupportSolve {
    std::vector<ChebDensity> densities;
    std::vector<real_t> ell;
    real_t residual = 0;
};

// Densities and constants on fixed supports: the equality condition is
// linear in the smooth Chebyshev factors, collocated at N first-kind points
// per support, with one mass row per measure.
FixedSupportSolve solve_on_supports(const std::vector<Interval>& sup,
                                    const std::vector<real_t>& c, int N) {
    const int d = static_cast<int>(sup.size());
    const int dim = d * N + d;
    std::vector<std::vector<real_t>> A(dim, std::vector<real_t>(dim, real_t(0)));
    std::vector<real_t> b(dim, real_t(0));

    std::vector<ConformalFrame> frames;
    frames.reserve(d);
    for (const Interval& iv : sup) frames.emplace_back(iv);

    std::vector<real_t> logc(d);
    for (int i = 0; i < d; ++i) logc[i] = log(2 / sup[i].rad());

    for (int j = 0; j < d; ++j) {
        const std::vector<real_t> snodes = cheb_ref_nodes(N);
        for (int m = 0; m < N; ++m) {
            const int row = j * N + m;
            const real_t s = snodes[m];
            const real_t x = sup[j].from_ref(s);
            for (int i = 0; i < d; ++i) {
                real_t* col = &A[row][i * N];
                if (i == j) {
                    col[0] += 2 * logc[j];
                    // T_k(s)/k by recurrence
                    real_t tkm1 = 1, tk = s;
                    for (int k = 1; k < N; ++k) {
                        col[k] += 2 * tk / k;
                        const real_t tkp1 = 2 * s * tk - tkm1;
                        tkm1 = tk;
                        tk = tkp1;
                    }
                } else {
                    const cplx_t phic = frames[i].phi(cplx_t(x));
                    const real_t phi = phic.real();
                    col[0] += log(fabs(phi)) + logc[i];
                    real_t pk = phi;
                    for (int k = 1; k < N; ++k) {
                        col[k] += pk / k;
                        pk *= phi;
                    }
                }
            }
            A[row][d * N + j] = -1;
        }
        A[d * N + j][j * N] = 1;
        b[d * N + j] = c[j];
    }

    RealSolveResult sol = solve_dense(A, b);
    FixedSupportSolve out;
    out.residual = sol.residual;
    for (int i = 0; i < d; ++i) {
        std::vector<real_t> g(sol.x.begin() + i * N, sol.x.begin() + (i + 1) * N);
        out.densities.emplace_back(sup[i], std::move(g));
        out.ell.push_back(sol.x[d * N + i]);
    }
    return out;
}

real_t edge_value(const FixedSupportSolve& s, int j, Side side) {
    return side == Side::left ? s.densities[j].edge_left()
                              : s.densities[j].edge_right();
}

}  // namespace

real_t effective_potential(const EquilibriumSolution& sol, int i,
                           const real_t& x) {
    real_t v = 2 * sol.densities[i].potential(cplx_t(x));
    for (int j = 0; j < sol.d(); ++j) {
        if (j != i) v += sol.densities[j].potential(cplx_t(x));
    }
    return v;
}

EquilibriumSolution solve_vector_equilibrium(
    const std::vector<Interval>& hulls, const std::vector<real_t>& c,
    int grid_n, const real_t& tol,
    const std::vector<Interval>* initial_supports) {
    validate_problem(hulls, c);
    const int d = static_cast<int>(hulls.size());
    const int N = std::max(grid_n, 8);

    std::vector<Interval> sup = initial_supports ? *initial_supports : hulls;
    if (static_cast<int>(sup.size()) != d) {
        throw std::invalid_argument("equilibrium: bad initial supports");
    }
    for (int i = 0; i < d; ++i) {
        if (sup[i].a < hulls[i].a || sup[i].b > hulls[i].b) {
            throw std::invalid_argument("equilibrium: initial supports exceed hulls");
        }
    }
    // The outermost endpoints never detach (the interaction only pushes
    // inward-facing edges), so an initial guess there is overridden.
    sup[0] = Interval(hulls[0].a, sup[0].b);
    sup[d - 1] = Interval(sup[d - 1].a, hulls[d - 1].b);

    const real_t edge_tol = std::min(tol, real_t("1e-8"));
    const real_t f_stop = edge_tol * real_t("1e-12");

    auto eval_edge = [&](int j, Side side, const real_t& t) {
        std::vector<Interval> trial = sup;
        trial[j] = side == Side::left ? Interval(t, sup[j].b)
                                      : Interval(sup[j].a, t);
        return edge_value(solve_on_supports(trial, c, N), j, side);
    };

    // Truncation level of the solved smooth factor; a soft edge resolved only
    // algebraically by the series sits at this scale, not at zero.
    auto tail_level = [&](const FixedSupportSolve& s, int j) {
        const std::vector<real_t>& g = s.densities[j].g;
        real_t t = 0;
        for (int k = 3 * N / 4; k < static_cast<int>(g.size()); ++k) {
            t += fabs(g[k]);
        }
        return t;
    };

    // Warm re-bracketing data per (interval, side).
    std::vector<std::vector<real_t>> last_move(d, std::vector<real_t>(2, real_t(0)));

    bool converged = (d == 1);
    real_t last_edge = 0;
    for (int sweep = 0; sweep < 40 && !converged; ++sweep) {
        bool moved_any = false;
        for (int j = 0; j < d; ++j) {
            for (int sidx = 0; sidx < 2; ++sidx) {
                const Side side = sidx == 0 ? Side::left : Side::right;
                if (side == Side::left && j == 0) continue;
                if (side == Side::right && j == d - 1) continue;
                const real_t hull_end =
                    side == Side::left ? hulls[j].a : hulls[j].b;
                const real_t pos =
                    side == Side::left ? sup[j].a : sup[j].b;
                const real_t len = hulls[j].length();
                const real_t inward = side == Side::left ? real_t(1) : real_t(-1);

                // Attached and feasible (up to the resolution of the series,
                // which is all a soft touching edge can offer)?
                const FixedSupportSolve here = solve_on_supports(sup, c, N);
                const real_t cur = edge_value(here, j, side);
                last_edge = cur;
                if (pos == hull_end &&
                    cur >= -std::max(edge_tol, 4 * tail_level(here, j))) {
                    continue;
                }
                // Detached and already stationary?
                if (pos != hull_end && fabs(cur) < 16 * f_stop) continue;

                // Re-attachment test for a detached endpoint.
                real_t t_lo = hull_end;
                real_t f_lo = pos == hull_end ? cur : eval_edge(j, side, hull_end);
                if (f_lo >= -edge_tol) {
                    if (pos != hull_end) {
                        if (side == Side::left) sup[j] = Interval(hull_end, sup[j].b);
                        else sup[j] = Interval(sup[j].a, hull_end);
                        moved_any = true;
                    }
                    continue;
                }

                // Bracket a positive edge value inward; warm-start near the
                // previous position when it moved only slightly.
                real_t t_hi = 0, f_hi = 0;
                bool have_hi = false;
                const real_t lm = last_move[j][sidx];
                if (pos != hull_end && lm > 0 && lm < len / 16) {
                    const real_t t = pos + inward * 4 * lm;
                    const real_t f = eval_edge(j, side, t);
                    if (f > 0) {
                        t_hi = t;
                        f_hi = f;
                        have_hi = true;
                        if (cur < 0) {
                            t_lo = pos;
                            f_lo = cur;
                        }
                    }
                }
                if (!have_hi) {
                    const real_t limit =
                        side == Side::left ? sup[j].b - len / 10 : sup[j].a + len / 10;
                    real_t t = hull_end;
                    for (int step = 0; step < 16; ++step) {
                        t += inward * len / 16;
                        if ((inward > 0 && t > limit) || (inward < 0 && t < limit)) {
                            t = limit;
                        }
                        const real_t f = eval_edge(j, side, t);
                        if (f > 0) {
                            t_hi = t;
                            f_hi = f;
                            have_hi = true;
                            break;
                        }
                        t_lo = t;
                        f_lo = f;
                        if (t == limit) break;
                    }
                    if (!have_hi) {
                        throw std::runtime_error(
                            "equilibrium: cannot bracket the free endpoint of support " +
                            std::to_string(j) + "; last edge value " +
                            to_string_full(f_lo));
                    }
                }

                // Illinois iteration on the bracket.
                real_t t_new = (t_lo + t_hi) / 2;
                for (int it = 0; it < 80; ++it) {
                    t_new = (t_lo * f_hi - t_hi * f_lo) / (f_hi - f_lo);
                    const real_t wlo = fabs(t_new - t_lo), whi = fabs(t_new - t_hi);
                    const real_t width = fabs(t_hi - t_lo);
                    if (!(wlo > 0 && whi > 0)) t_new = (t_lo + t_hi) / 2;
                    const real_t f = eval_edge(j, side, t_new);
                    if (fabs(f) < f_stop || width < len * real_t("1e-36")) break;
                    if ((f < 0) == (f_lo < 0)) {
                        t_lo = t_new;
                        f_lo = f;
                        f_hi /= 2;
                    } else {
                        t_hi = t_new;
                        f_hi = f;
                        f_lo /= 2;
                    }
                }
                last_move[j][sidx] = fabs(t_new - pos);
                if (fabs(t_new - pos) > len * real_t("1e-30")) moved_any = true;
                if (side == Side::left) sup[j] = Interval(t_new, sup[j].b);
                else sup[j] = Interval(sup[j].a, t_new);
            }
        }
        if (!moved_any) converged = true;
    }
    if (!converged) {
        throw std::runtime_error(
            "equilibrium: support iteration did not converge; last edge value " +
            to_string_full(last_edge));
    }

    FixedSupportSolve fin = solve_on_supports(sup, c, N);
    EquilibriumSolution out;
    out.hulls = hulls;
    out.c = c;
    out.supports = sup;
    out.densities = std::move(fin.densities);
    out.ell = std::move(fin.ell);
    out.solve_residual = fin.residual;
    return out;
}

VariationalResidual variational_residual(const EquilibriumSolution& sol,
                                         int probe_n) {
    VariationalResidual out;
    out.eq_max = 0;
    out.ineq_min = 0;
    out.has_free_region = false;

    for (int j = 0; j < sol.d(); ++j) {
        for (const real_t& x : cheb_nodes(sol.supports[j], probe_n)) {
            out.eq_max = std::max(
                out.eq_max, fabs(effective_potential(sol, j, x) - sol.ell[j]));
        }
    }

    bool first = true;
    for (int j = 0; j < sol.d(); ++j) {
        const Interval& h = sol.hulls[j];
        const Interval& s = sol.supports[j];
        for (int sidx = 0; sidx < 2; ++sidx) {
            const real_t gap_lo = sidx == 0 ? h.a : s.b;
            const real_t gap_hi = sidx == 0 ? s.a : h.b;
            if (!(gap_hi > gap_lo)) continue;
            out.has_free_region = true;
            const int M = 48;
            for (int m = 0; m < M; ++m) {
                const real_t x =
                    gap_lo + (gap_hi - gap_lo) * (2 * m + 1) / (2 * M);
                const real_t v = effective_potential(sol, j, x) - sol.ell[j];
                if (first || v < out.ineq_min) {
                    out.ineq_min = v;
                    first = false;
                }
            }
        }
    }
    return out;
}

real_t kappa(const EquilibriumSolution& sol, int i, const real_t& x) {
    if (!sol.hulls[i].contains(x)) {
        throw std::domain_error("kappa: x outside the hull");
    }
    return -(effective_potential(sol, i, x) - sol.ell[i]) / (2 * sol.c[i]);
}

EndpointExponent endpoint_exponent(const EquilibriumSolution& sol, int i,
                                   Side side) {
    const Interval& s = sol.supports[i];
    const real_t L = s.length();
    const real_t e = side == Side::left ? s.a : s.b;
    const real_t inward = side == Side::left ? real_t(1) : real_t(-1);

    // Two dyadic decades of distances, well inside the closed-form density's
    // resolution.
    std::vector<real_t> lg, lv;
    for (int k = 6; k <= 13; ++k) {
        const real_t dist = ldexp(L, -k);
        const real_t x = e + inward * dist;
        const real_t v = sol.densities[i].density(x);
        if (!(v > 0)) {
            throw std::runtime_error(
                "endpoint_exponent: nonpositive density near the endpoint");
        }
        lg.push_back(log(dist));
        lv.push_back(log(v));
    }
    const int M = static_cast<int>(lg.size());
    real_t sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < M; ++k) {
        sx += lg[k];
        sy += lv[k];
        sxx += lg[k] * lg[k];
        sxy += lg[k] * lv[k];
    }
    const real_t slope = (M * sxy - sx * sy) / (M * sxx - sx * sx);
    const real_t intercept = (sy - slope * sx) / M;
    real_t fit_res = 0;
    for (int k = 0; k < M; ++k) {
        fit_res = std::max(fit_res, fabs(lv[k] - intercept - slope * lg[k]));
    }

    EndpointExponent out;
    out.fitted = slope;
    out.snapped = slope > 0 ? real_t(1) / 2 : real_t(-1) / 2;
    out.fit_residual = fit_res;
    if (fabs(out.fitted - out.snapped) > real_t("0.12") ||
        fit_res > real_t("0.1")) {
        throw std::runtime_error(
            "endpoint_exponent: inconclusive fit (slope " +
            to_string_full(slope) + ", residual " + to_string_full(fit_res) + ")");
    }
    return out;
}

}  // namespace angelesco
