#include "angelesco/circle.hpp"

#include <algorithm>
#include <stdexcept>

#include "angelesco/conformal.hpp"
#include "angelesco/linalg.hpp"
#include "angelesco/quadrature.hpp"

namespace angelesco {

namespace {

cplx_t conj_c(const cplx_t& z) { return cplx_t(z.real(), -z.imag()); }

real_t abs2(const cplx_t& z) { return z.real() * z.real() + z.imag() * z.imag(); }

// Midpoint-shifted uniform angles 2 pi (j + 1/2) / M: trapezoid sums on a
// periodic integrand keep spectral accuracy under any shift, and the shift
// avoids landing on the axis points where lifted densities may degenerate.
std::vector<real_t> angular_grid(int M) {
    std::vector<real_t> th(M);
    const real_t step = 2 * pi() / M;
    for (int j = 0; j < M; ++j) th[j] = step * (j + real_t(1) / 2);
    return th;
}

}  // namespace

cplx_t CirclePoly::eval(const cplx_t& z) const {
    cplx_t acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * z + c[k];
    return acc;
}

cplx_t CirclePoly::deriv(const cplx_t& z, int order) const {
    if (order <= 0) return eval(z);
    cplx_t acc = 0;
    for (int k = degree(); k >= order; --k) {
        real_t f = 1;
        for (int i = 0; i < order; ++i) f *= k - i;
        acc = acc * z + f * c[k];
    }
    return acc;
}

CirclePoly poly_from_roots(const std::vector<cplx_t>& roots) {
    std::vector<cplx_t> c{cplx_t(1)};
    for (const cplx_t& r : roots) {
        c.push_back(0);
        for (int k = static_cast<int>(c.size()) - 1; k > 0; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return CirclePoly(std::move(c));
}

CirclePoly star(const CirclePoly& p, int n) {
    if (p.degree() > n) throw std::invalid_argument("star: degree exceeds n");
    std::vector<cplx_t> c(n + 1, cplx_t(0));
    for (int k = 0; k <= p.degree(); ++k) c[n - k] = conj_c(p.c[k]);
    return CirclePoly(std::move(c));
}

real_t CircleTriple::full_log_density(const real_t& theta) const {
    real_t v = log_density(theta);
    if (g) v += g(theta);
    return v;
}

CirclePoly CircleTriple::W_star() const {
    return star(W(), static_cast<int>(b.size()));
}

void CircleTriple::validate() const {
    if (!log_density) throw std::invalid_argument("circle triple: missing density");
    for (const cplx_t& z : b)
        if (!(abs(z) < 1)) throw std::invalid_argument("circle triple: zero outside the open disk");
}

CircleONP circle_onp_from_moments(const std::vector<cplx_t>& t, int n) {
    if (static_cast<int>(t.size()) < n + 1)
        throw std::invalid_argument("circle_onp: need moments up to order n");
    auto tm = [&](int j) -> cplx_t {  // t_j for |j| <= n
        return j >= 0 ? t[j] : conj_c(t[-j]);
    };
    std::vector<cplx_t> u(n + 1, cplx_t(0));
    u[n] = 1;
    if (n > 0) {
        std::vector<std::vector<cplx_t>> A(n, std::vector<cplx_t>(n));
        std::vector<cplx_t> rhs(n);
        for (int m = 0; m < n; ++m) {
            for (int k = 0; k < n; ++k) A[m][k] = tm(k - m);
            rhs[m] = -tm(n - m);
        }
        std::vector<cplx_t> sol = solve_dense_cplx(std::move(A), std::move(rhs));
        for (int k = 0; k < n; ++k) u[k] = sol[k];
    }
    cplx_t nrm2 = 0;  // <phi, xi^n> = |phi|^2 for the monic solution
    for (int k = 0; k <= n; ++k) nrm2 += u[k] * tm(k - n);
    if (!(nrm2.real() > 0))
        throw PrecisionError("circle_onp: moment matrix lost positivity");
    real_t nrm = sqrt(nrm2.real());

    real_t defect = 0;
    for (int m = 0; m < n; ++m) {
        cplx_t r = 0;
        for (int k = 0; k <= n; ++k) r += u[k] * tm(k - m);
        defect = std::max(defect, abs(r));
    }

    CircleONP out;
    out.n = n;
    out.alpha = 1 / nrm;
    for (cplx_t& ck : u) ck /= nrm;
    out.phi = CirclePoly(std::move(u));
    out.phi_star = star(out.phi, n);
    out.ortho_residual = defect / (nrm * sqrt(t[0].real()));
    return out;
}

std::vector<cplx_t> circle_moments(const CircleTriple& t, int count, int grid) {
    t.validate();
    const int M = grid > 0 ? grid : std::max(32 * count, 512);
    CirclePoly W = t.W();
    std::vector<real_t> th = angular_grid(M);
    std::vector<cplx_t> mom(count, cplx_t(0));
    for (int j = 0; j < M; ++j) {
        cplx_t xi(cos(th[j]), sin(th[j]));
        real_t w = exp(t.full_log_density(th[j]));
        if (!t.b.empty()) w /= abs2(W.eval(xi));
        cplx_t p = w;  // w * xi^k accumulated
        for (int k = 0; k < count; ++k) {
            mom[k] += p;
            p *= xi;
        }
    }
    for (cplx_t& m : mom) m /= M;
    return mom;
}

CircleONP circle_onp(const CircleTriple& t, int n, int grid) {
    const int M = grid > 0 ? grid : std::max(32 * (n + 1), 512);
    return circle_onp_from_moments(circle_moments(t, n + 1, M), n);
}

cplx_t DiskOuter::eval(const cplx_t& z) const {
    if (abs(z) > 1) {  // exterior branch: 1/conj(D(1/conj z))
        cplx_t iz = cplx_t(1) / z;
        cplx_t acc = 0;
        for (int k = static_cast<int>(ck.size()); k >= 1; --k)
            acc = acc * iz + conj_c(ck[k - 1]);
        return exp(-(c0 / 2) - acc * iz);
    }
    cplx_t acc = 0;
    for (int k = static_cast<int>(ck.size()); k >= 1; --k) acc = acc * z + ck[k - 1];
    return exp(c0 / 2 + acc * z);
}

cplx_t DiskOuter::boundary(const real_t& theta) const {
    return eval(cplx_t(cos(theta), sin(theta)));
}

real_t DiskOuter::at0() const { return exp(c0 / 2); }

DiskOuter disk_outer(const std::function<real_t(const real_t&)>& log_w, int grid) {
    const int M = grid > 0 ? grid : 1024;
    std::vector<real_t> th = angular_grid(M);
    std::vector<real_t> vals(M);
    for (int j = 0; j < M; ++j) vals[j] = log_w(th[j]);
    DiskOuter d;
    d.ck.assign(M / 2 - 1, cplx_t(0));
    for (int j = 0; j < M; ++j) {
        d.c0 += vals[j];
        cplx_t e(cos(th[j]), -sin(th[j]));  // e^{-i theta}
        cplx_t p = e;
        for (size_t k = 0; k < d.ck.size(); ++k) {
            d.ck[k] += vals[j] * p;
            p *= e;
        }
    }
    d.c0 /= M;
    for (cplx_t& c : d.ck) c /= M;
    return d;
}

DiskOuter triple_szego(const CircleTriple& t, int grid) {
    return disk_outer([&t](const real_t& th) { return t.full_log_density(th); }, grid);
}

cplx_t Caratheodory::eval(const cplx_t& z) const { return deriv(z, 0); }

cplx_t Caratheodory::deriv(const cplx_t& z, int order) const {
    cplx_t acc = 0;
    for (int k = static_cast<int>(mk.size()); k >= std::max(order, 1); --k) {
        real_t f = 2;
        for (int i = 0; i < order; ++i) f *= k - i;
        acc = acc * z + f * mk[k - 1];
    }
    if (order == 0) return m0 + acc * z;
    return acc;
}

Caratheodory caratheodory(const CircleTriple& t, int grid) {
    const int M = grid > 0 ? grid : 1024;
    std::vector<real_t> th = angular_grid(M);
    Caratheodory F;
    F.mk.assign(M / 2 - 1, cplx_t(0));
    for (int j = 0; j < M; ++j) {
        real_t w = exp(t.full_log_density(th[j]));
        F.m0 += w;
        cplx_t e(cos(th[j]), -sin(th[j]));
        cplx_t p = e;
        for (size_t k = 0; k < F.mk.size(); ++k) {
            F.mk[k] += w * p;
            p *= e;
        }
    }
    F.m0 /= M;
    for (cplx_t& c : F.mk) c /= M;
    return F;
}

CirclePoly companion_psi_star(const CircleONP& p, const Caratheodory& F,
                              const std::vector<cplx_t>& b) {
    const int n = p.n;
    if (static_cast<int>(b.size()) != n)
        throw std::invalid_argument("companion: need exactly n denominator zeros");

    // Interpolation nodes: 0 and the zeros of W, equal values kept adjacent.
    std::vector<std::pair<cplx_t, int>> groups{{cplx_t(0), 1}};
    for (const cplx_t& z : b) {
        bool found = false;
        for (auto& gr : groups)
            if (gr.first == z) {
                ++gr.second;
                found = true;
                break;
            }
        if (!found) groups.emplace_back(z, 1);
    }

    std::vector<cplx_t> x;
    x.reserve(n + 1);
    for (const auto& gr : groups) x.insert(x.end(), gr.second, gr.first);

    // Derivatives of H = phi* F at each group value, scaled by 1/r!.
    auto H_scaled = [&](const cplx_t& z, int r) {
        cplx_t acc = 0;
        real_t binom = 1;  // C(r, i)
        for (int i = 0; i <= r; ++i) {
            acc += binom * p.phi_star.deriv(z, i) * F.deriv(z, r - i);
            binom = binom * (r - i) / (i + 1);
        }
        real_t fact = 1;
        for (int i = 2; i <= r; ++i) fact *= i;
        return acc / fact;
    };

    const int m = n + 1;
    std::vector<std::vector<cplx_t>> T(m, std::vector<cplx_t>(m, cplx_t(0)));
    for (int i = 0; i < m; ++i) T[i][0] = H_scaled(x[i], 0);
    for (int j = 1; j < m; ++j)
        for (int i = 0; i + j < m; ++i) {
            if (x[i + j] == x[i])
                T[i][j] = H_scaled(x[i], j);
            else
                T[i][j] = (T[i + 1][j - 1] - T[i][j - 1]) / (x[i + j] - x[i]);
        }

    // Newton form -> monomial coefficients by Horner over the nodes.
    std::vector<cplx_t> c{T[0][m - 1]};
    for (int j = m - 2; j >= 0; --j) {
        c.push_back(0);
        for (int k = static_cast<int>(c.size()) - 1; k > 0; --k)
            c[k] = c[k - 1] - x[j] * c[k];
        c[0] = -x[j] * c[0];
        c[0] += T[0][j];
    }
    return CirclePoly(std::move(c));
}

real_t lambda_at(const CircleONP& p, const CirclePoly& psi_star, const cplx_t& z) {
    return (psi_star.eval(z) / p.phi_star.eval(z)).real();
}

real_t lambda_mean(const CircleONP& p, const CirclePoly& psi_star, int grid) {
    std::vector<real_t> th = angular_grid(grid);
    real_t acc = 0;
    for (const real_t& t : th)
        acc += lambda_at(p, psi_star, cplx_t(cos(t), sin(t)));
    return acc / grid;
}

// ---- correspondence with varying weights on [-1, 1] ------------------------

namespace {

bool on_segment(const cplx_t& z) {
    return z.imag() == 0 && z.real() >= -1 && z.real() <= 1;
}

// int T_j(x) f(x) dmu(x), j = 0..count-1, Gauss order escalated until the
// moments stabilize.
std::vector<real_t> chebyshev_moments(const WeightSpec& mu,
                                      const std::function<real_t(const real_t&)>& f,
                                      int count) {
    auto compute = [&](int order) {
        QuadRule q = weight_rule(mu, order);
        std::vector<real_t> mom(count, real_t(0));
        for (int i = 0; i < q.n(); ++i) {
            const real_t& x = q.x[i];
            real_t wf = q.w[i] * (f ? f(x) : real_t(1));
            real_t tkm1 = 1, tk = x;
            for (int j = 0; j < count; ++j) {
                mom[j] += wf * tkm1;
                real_t nxt = 2 * x * tk - tkm1;
                tkm1 = tk;
                tk = nxt;
            }
        }
        return mom;
    };
    int order = std::max(2 * count + 48, 96);
    std::vector<real_t> prev = compute(order);
    const real_t tol = working_eps() * 1e8;
    for (int round = 0; round < 6; ++round) {
        order *= 2;
        std::vector<real_t> cur = compute(order);
        real_t diff = 0, scale = 1;
        for (int j = 0; j < count; ++j) {
            diff = std::max(diff, abs(cur[j] - prev[j]));
            scale = std::max(scale, abs(cur[j]));
        }
        if (diff <= tol * scale) return cur;
        prev = std::move(cur);
    }
    throw PrecisionError("chebyshev_moments: Gauss escalation did not stabilize");
}

}  // namespace

int IntervalTriple::pairs() const {
    return (static_cast<int>(tau_finite.size()) + tau_inf) / 2;
}

cplx_t IntervalTriple::tau(const cplx_t& z) const {
    cplx_t p = 1;
    for (const cplx_t& a : tau_finite) p *= cplx_t(1) - z / a;
    return p;
}

real_t IntervalTriple::tau(const real_t& x) const { return tau(cplx_t(x)).real(); }

void IntervalTriple::validate() const {
    mu.validate();
    if (!(mu.iv.a == -1 && mu.iv.b == 1))
        throw std::invalid_argument("interval triple: measure must live on [-1, 1]");
    if ((static_cast<int>(tau_finite.size()) + tau_inf) % 2 != 0)
        throw std::invalid_argument("interval triple: root multiset must have even size");
    std::vector<cplx_t> upper;
    for (const cplx_t& a : tau_finite) {
        if (on_segment(a))
            throw std::invalid_argument("interval triple: root on [-1, 1]");
        if (a.imag() > 0) upper.push_back(a);
    }
    for (const cplx_t& a : tau_finite) {
        if (a.imag() >= 0) continue;
        auto it = std::find(upper.begin(), upper.end(), conj_c(a));
        if (it == upper.end())
            throw std::invalid_argument("interval triple: roots are not conjugate-symmetric");
        upper.erase(it);
    }
    if (!upper.empty())
        throw std::invalid_argument("interval triple: roots are not conjugate-symmetric");
}

CircleTriple joukowski_lift(const IntervalTriple& t) {
    t.validate();
    ConformalFrame frame(t.mu.iv);
    CircleTriple out;
    out.b.reserve(2 * t.pairs());
    for (const cplx_t& a : t.tau_finite) out.b.push_back(frame.phi(a));
    out.b.insert(out.b.end(), t.tau_inf, cplx_t(0));
    WeightSpec mu = t.mu;
    out.log_density = [mu](const real_t& th) {
        return log(pi()) + log(abs(sin(th))) + mu.log_density(cos(th));
    };
    if (t.h) {
        std::function<real_t(const real_t&)> h = t.h;
        out.g = [h](const real_t& th) { return h(cos(th)); };
    }
    return out;
}

real_t joukowski_constant(const IntervalTriple& t) {
    ConformalFrame frame(t.mu.iv);
    cplx_t p = 1;
    for (const cplx_t& a : t.tau_finite) p *= 2 * a * frame.phi(a);
    if (!(p.real() > 0) || abs(p.imag()) > abs(p.real()) * 1e-6)
        throw std::invalid_argument("joukowski_constant: product is not positive");
    return p.real();
}

std::vector<cplx_t> lifted_moments(const IntervalTriple& t, int count) {
    t.validate();
    const real_t c = joukowski_constant(t);
    std::function<real_t(const real_t&)> h = t.h;
    IntervalTriple local = t;
    auto f = [local, h, c](const real_t& x) {
        real_t v = 1 / (c * local.tau(x));
        if (h) v *= exp(h(x));
        return v;
    };
    std::vector<real_t> mom = chebyshev_moments(t.mu, f, count);
    std::vector<cplx_t> out;
    out.reserve(mom.size());
    for (const real_t& m : mom) out.emplace_back(m);
    return out;
}

Caratheodory lifted_caratheodory(const IntervalTriple& t, int count) {
    t.validate();
    std::function<real_t(const real_t&)> h = t.h;
    std::function<real_t(const real_t&)> f;
    if (h) f = [h](const real_t& x) { return exp(h(x)); };
    std::vector<real_t> mom = chebyshev_moments(t.mu, f, count);
    Caratheodory F;
    F.m0 = mom[0];
    F.mk.assign(mom.begin() + 1, mom.end());
    return F;
}

DiskOuter disk_outer_from_trace(const LogTrace& trace, int terms) {
    if (!(trace.iv().a == -1 && trace.iv().b == 1))
        throw std::invalid_argument("disk_outer_from_trace: trace must live on [-1, 1]");
    const std::vector<real_t>& s = trace.smooth.c;
    const real_t log2 = log(real_t(2));
    DiskOuter d;
    d.c0 = (s.empty() ? real_t(0) : s[0]) - (trace.pa + trace.pb) * log2;
    int K = std::max(terms, static_cast<int>(s.size()) - 1);
    d.ck.assign(K, cplx_t(0));
    for (int k = 1; k <= K; ++k) {
        real_t v = 0;
        if (k < static_cast<int>(s.size())) v += s[k] / 2;
        real_t sign = k % 2 == 0 ? -1 : 1;  // (-1)^{k+1}
        v += (trace.pa * sign - trace.pb) / k;
        d.ck[k - 1] = v;
    }
    return d;
}

cplx_t IntervalViaCircle::pn_sq(const cplx_t& z) const {
    ConformalFrame frame{Interval(-1, 1)};
    cplx_t zeta = frame.phi(z);
    cplx_t s = circ.phi.eval(zeta) + circ.phi_star.eval(zeta);
    return s * s / (2 * c * pow_int(zeta, 2 * n) * (1 + B0));
}

IntervalViaCircle interval_onp_via_circle(const IntervalTriple& t) {
    IntervalViaCircle v;
    v.n = t.pairs();
    v.c = t.tau_finite.empty() ? real_t(1) : joukowski_constant(t);
    v.circ = circle_onp_from_moments(lifted_moments(t, 2 * v.n + 1), 2 * v.n);
    v.B0 = v.circ.phi.c[0].real() / v.circ.phi_star.c[0].real();
    v.gamma_sq = pow_int(real_t(2), 2 * v.n - 1) * v.circ.alpha * v.circ.alpha *
                 (1 + v.B0) / v.c;
    return v;
}

namespace {

LogTrace varying_trace(const IntervalTriple& t, int N) {
    LogTrace base = log_v_trace(t.mu, t.mu.iv, N);
    if (!t.h) return base;
    return trace_add(base, LogTrace(ChebSeries::interpolate(t.mu.iv, N, t.h)));
}

}  // namespace

cplx_t interval_G(const IntervalTriple& t, const cplx_t& z, int N) {
    return outer_eval(trace_scale(varying_trace(t, N), real_t(1) / 2), z);
}

real_t interval_G_inf(const IntervalTriple& t, int N) {
    return exp(outer_log_inf(trace_scale(varying_trace(t, N), real_t(1) / 2)));
}

cplx_t tau_blaschke(const IntervalTriple& t, const cplx_t& z) {
    ConformalFrame frame(t.mu.iv);
    cplx_t u = frame.phi(z);
    cplx_t p = pow_int(u, t.tau_inf);
    for (const cplx_t& a : t.tau_finite) {
        cplx_t ba = frame.phi(a);
        p *= (u - ba) / (cplx_t(1) - conj_c(ba) * u);
    }
    return p;
}

cplx_t strong_ratio(const IntervalTriple& t, const IntervalViaCircle& v,
                    const cplx_t& z, int N) {
    cplx_t G = interval_G(t, z, N);
    return 2 * G * G * v.pn_sq(z) * tau_blaschke(t, z) / t.tau(z);
}

real_t leading_ratio(const IntervalTriple& t, const IntervalViaCircle& v, int N) {
    real_t G = interval_G_inf(t, N);
    return G * G * v.gamma_sq * pow_int(real_t(2), 1 - 2 * v.n) * v.c;
}

}  // namespace angelesco
