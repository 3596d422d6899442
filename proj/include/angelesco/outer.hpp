#pragma once

#include <functional>

#include "angelesco/cheb.hpp"
#include "angelesco/conformal.hpp"

namespace angelesco {

// Boundary trace of a log-modulus on an interval: a smooth Chebyshev part
// plus explicit log-distance terms at the endpoints,
//   trace(x) = smooth(x) + pa log(x - a) + pb log(b - x).
// Carrying the endpoint coefficients explicitly keeps the smooth part
// spectrally resolvable even for generalized-Jacobi data.
struct LogTrace {
    ChebSeries smooth;
    real_t pa = 0, pb = 0;

    LogTrace() = default;
    explicit LogTrace(ChebSeries s) : smooth(std::move(s)) {}
    LogTrace(ChebSeries s, real_t a, real_t b)
        : smooth(std::move(s)), pa(std::move(a)), pb(std::move(b)) {}

    const Interval& iv() const { return smooth.iv; }
    real_t eval(const real_t& x) const;
    bool has_singular() const { return pa != 0 || pb != 0; }
};

LogTrace project_trace(const Interval& iv, int N,
                       const std::function<real_t(const real_t&)>& f);

LogTrace trace_add(const LogTrace& u, const LogTrace& v);
LogTrace trace_scale(const LogTrace& u, const real_t& c);

// Outer function with boundary modulus e^{trace}: analytic and zero-free off
// the interval, positive at infinity. Evaluated as
//   exp(sum_k c_k phi^k) * (rad (1+phi)^2/2)^pa * (rad (1-phi)^2/2)^pb.
cplx_t outer_eval(const LogTrace& t, const cplx_t& z);

// log of the value at infinity; equals the mean of the trace against the
// arcsine measure of the interval.
real_t outer_log_inf(const LogTrace& t);

// Harmonic extension log|outer|; at z = infinity use outer_log_inf.
real_t harmonic_ext(const LogTrace& t, const cplx_t& z);

// Upper boundary value of the outer function at x inside the interval.
cplx_t outer_plus(const LogTrace& t, const real_t& x);

// log v for a weight restricted to dom (a subinterval of the weight's own
// interval): v = pi * density * sqrt((x - dom.a)(dom.b - x)). Endpoint
// exponents merge into the log-distance coefficients whenever dom shares an
// endpoint with the weight.
LogTrace log_v_trace(const WeightSpec& w, const Interval& dom, int N);

// Szego function of the (restricted) weight: the outer function of sqrt(v).
cplx_t szego_G(const WeightSpec& w, const Interval& dom, const cplx_t& z, int N = 64);
real_t szego_G_inf(const WeightSpec& w, const Interval& dom, int N = 64);

}  // namespace angelesco
