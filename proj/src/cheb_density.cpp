#include "angelesco/cheb_density.hpp"

#include <stdexcept>

namespace angelesco {

ChebDensity::ChebDensity(Interval i, std::vector<real_t> coef)
    : iv(std::move(i)), g(std::move(coef)) {
    if (g.empty()) throw std::invalid_argument("ChebDensity needs coefficients");
}

ChebDensity ChebDensity::arcsine(const Interval& iv, const real_t& mass) {
    return ChebDensity(iv, {mass});
}

real_t ChebDensity::smooth_ref(const real_t& s) const {
    ChebSeries ser(Interval(real_t(-1), real_t(1)), g);
    return ser.eval_ref(s);
}

real_t ChebDensity::density(const real_t& x) const {
    if (!iv.strictly_inside(x)) {
        throw std::domain_error("density defined on the open interval");
    }
    const real_t s = iv.to_ref(x);
    return smooth_ref(s) / (pi() * sqrt(x - iv.a) * sqrt(iv.b - x));
}

real_t ChebDensity::edge_left() const {
    real_t acc = 0;
    for (std::size_t k = 0; k < g.size(); ++k) acc += (k % 2 == 0) ? g[k] : -g[k];
    return acc;
}

real_t ChebDensity::edge_right() const {
    real_t acc = 0;
    for (const auto& v : g) acc += v;
    return acc;
}

real_t ChebDensity::potential_on(const real_t& x) const {
    const real_t s = iv.to_ref(x);
    if (fabs(s) > 1) throw std::domain_error("potential_on expects x in the interval");
    // V = g_0 log(4/(b-a)) + sum_{k>=1} g_k T_k(s)/k
    real_t acc = g[0] * log(2 / iv.rad());
    real_t tkm1 = 1, tk = s;
    for (std::size_t k = 1; k < g.size(); ++k) {
        acc += g[k] * tk / static_cast<int>(k);
        real_t tkp1 = 2 * s * tk - tkm1;
        tkm1 = tk;
        tk = tkp1;
    }
    return acc;
}

real_t ChebDensity::potential(const cplx_t& z) const {
    if (z.imag() == 0) {
        const real_t x = z.real();
        if (x >= iv.a && x <= iv.b) return potential_on(x);
    }
    ConformalFrame cf(iv);
    cplx_t w, phi;
    cf.eval(z, w, phi);
    // V = g_0 (log|phi| + log(4/(b-a))) + sum_{k>=1} g_k Re phi^k / k
    real_t acc = g[0] * (log(abs(phi)) + log(2 / iv.rad()));
    cplx_t pk = 1;
    for (std::size_t k = 1; k < g.size(); ++k) {
        pk *= phi;
        acc += g[k] * pk.real() / static_cast<int>(k);
    }
    return acc;
}

cplx_t ChebDensity::log_primitive(const cplx_t& z) const {
    ConformalFrame cf(iv);
    bool flip = z.imag() < 0;
    cplx_t zz = flip ? conj(z) : z;
    cplx_t w, phi;
    cf.eval(zz, w, phi);
    // int log(z-x) dmu = g_0 log(rad/(2 phi)) - sum_{k>=1} g_k phi^k / k
    cplx_t acc = g[0] * log(iv.rad() / (2 * phi));
    cplx_t pk = 1;
    for (std::size_t k = 1; k < g.size(); ++k) {
        pk *= phi;
        acc -= g[k] * pk / static_cast<int>(k);
    }
    return flip ? conj(acc) : acc;
}

cplx_t ChebDensity::cauchy(const cplx_t& z) const {
    ConformalFrame cf(iv);
    cplx_t w, phi;
    cf.eval(z, w, phi);
    cplx_t acc = 0;
    cplx_t pk = 1;
    for (std::size_t k = 0; k < g.size(); ++k) {
        acc += g[k] * pk;
        pk *= phi;
    }
    return -acc / w;
}

real_t ChebDensity::cdf(const real_t& x) const {
    if (x <= iv.a) return 0;
    if (x >= iv.b) return mass();
    const real_t s = iv.to_ref(x);
    const real_t t = acos(s);
    const real_t p = pi();
    real_t acc = g[0] * (1 - t / p);
    for (std::size_t k = 1; k < g.size(); ++k) {
        acc -= g[k] * sin(static_cast<int>(k) * t) / (static_cast<int>(k) * p);
    }
    return acc;
}

real_t ChebDensity::integrate(const std::function<real_t(const real_t&)>& f, int N) const {
    const real_t p = pi();
    real_t acc = 0;
    for (int m = 0; m < N; ++m) {
        real_t theta = p * (2 * m + 1) / (2 * N);
        real_t s = cos(theta);
        acc += f(iv.from_ref(s)) * smooth_ref(s);
    }
    return acc / N;
}

}  // namespace angelesco
