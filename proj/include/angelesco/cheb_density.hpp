#pragma once

#include <functional>
#include <vector>

#include "angelesco/cheb.hpp"
#include "angelesco/conformal.hpp"

namespace angelesco {

// Measure on an interval with density
//   g(s) / (pi sqrt((x-a)(b-x))),   g(s) = sum_k g_k T_k(s),
// s the reference coordinate. Inverse-square-root edge behavior is built in;
// a soft (vanishing) edge corresponds to g -> 0 there. Everything downstream
// (potentials, Cauchy transforms, primitives) has a closed form in powers of
// the exterior map phi, which keeps evaluation spectral-accurate on and off
// the support.
struct ChebDensity {
    Interval iv;
    std::vector<real_t> g;

    ChebDensity() = default;
    ChebDensity(Interval i, std::vector<real_t> coef);

    static ChebDensity arcsine(const Interval& iv, const real_t& mass);

    real_t mass() const { return g.empty() ? real_t(0) : g[0]; }
    real_t smooth_ref(const real_t& s) const;     // g(s)
    real_t density(const real_t& x) const;        // w.r.t. Lebesgue measure
    real_t edge_left() const;                     // g(-1)
    real_t edge_right() const;                    // g(+1)

    // Logarithmic potential -int log|z - x| d mu(x); finite everywhere.
    real_t potential(const cplx_t& z) const;
    real_t potential_on(const real_t& x) const;   // x in [a, b]

    // int log(z - x) d mu(x), branch continuous in the upper half-plane and
    // conjugate-symmetric below.
    cplx_t log_primitive(const cplx_t& z) const;

    // int d mu(x) / (x - z) for z off the support.
    cplx_t cauchy(const cplx_t& z) const;

    real_t cdf(const real_t& x) const;

    // int f d mu by the N-point Gauss-Chebyshev-type rule.
    real_t integrate(const std::function<real_t(const real_t&)>& f, int N) const;
};

}  // namespace angelesco
