#include "angelesco/outer.hpp"

#include <stdexcept>

namespace angelesco {

real_t LogTrace::eval(const real_t& x) const {
    real_t v = smooth.eval(x);
    if (pa != 0) v += pa * log(x - iv().a);
    if (pb != 0) v += pb * log(iv().b - x);
    return v;
}

LogTrace project_trace(const Interval& iv, int N,
                       const std::function<real_t(const real_t&)>& f) {
    return LogTrace(ChebSeries::interpolate(iv, N, f));
}

LogTrace trace_add(const LogTrace& u, const LogTrace& v) {
    if (!(u.iv() == v.iv())) throw std::invalid_argument("trace_add: interval mismatch");
    std::vector<real_t> c(std::max(u.smooth.c.size(), v.smooth.c.size()), real_t(0));
    for (std::size_t k = 0; k < u.smooth.c.size(); ++k) c[k] += u.smooth.c[k];
    for (std::size_t k = 0; k < v.smooth.c.size(); ++k) c[k] += v.smooth.c[k];
    return LogTrace(ChebSeries(u.iv(), std::move(c)), u.pa + v.pa, u.pb + v.pb);
}

LogTrace trace_scale(const LogTrace& u, const real_t& c) {
    LogTrace out = u;
    for (auto& v : out.smooth.c) v *= c;
    out.pa *= c;
    out.pb *= c;
    return out;
}

namespace {

// Factors (rad (1 +- phi)^2 / 2)^p; phi strictly inside the unit disk keeps
// the principal branch continuous.
cplx_t edge_factor(const cplx_t& phi, const real_t& rad, const real_t& p, bool left) {
    if (p == 0) return cplx_t(1);
    cplx_t base = left ? (cplx_t(1) + phi) : (cplx_t(1) - phi);
    base = rad * base * base / 2;
    return exp(p * log(base));
}

}  // namespace

cplx_t outer_eval(const LogTrace& t, const cplx_t& z) {
    ConformalFrame cf(t.iv());
    bool flip = z.imag() < 0;
    cplx_t zz = flip ? conj(z) : z;
    cplx_t w, phi;
    cf.eval(zz, w, phi);
    cplx_t acc = 0;
    cplx_t pk = 1;
    for (std::size_t k = 0; k < t.smooth.c.size(); ++k) {
        acc += t.smooth.c[k] * pk;
        pk *= phi;
    }
    cplx_t val = exp(acc) * edge_factor(phi, t.iv().rad(), t.pa, true) *
                 edge_factor(phi, t.iv().rad(), t.pb, false);
    return flip ? conj(val) : val;
}

real_t outer_log_inf(const LogTrace& t) {
    real_t v = t.smooth.c.empty() ? real_t(0) : t.smooth.c[0];
    if (t.pa != 0 || t.pb != 0) v += (t.pa + t.pb) * log(t.iv().rad() / 2);
    return v;
}

real_t harmonic_ext(const LogTrace& t, const cplx_t& z) {
    return log(abs(outer_eval(t, z)));
}

cplx_t outer_plus(const LogTrace& t, const real_t& x) {
    ConformalFrame cf(t.iv());
    cplx_t phi = cf.phi_plus(x);
    cplx_t acc = 0;
    cplx_t pk = 1;
    for (std::size_t k = 0; k < t.smooth.c.size(); ++k) {
        acc += t.smooth.c[k] * pk;
        pk *= phi;
    }
    return exp(acc) * edge_factor(phi, t.iv().rad(), t.pa, true) *
           edge_factor(phi, t.iv().rad(), t.pb, false);
}

LogTrace log_v_trace(const WeightSpec& w, const Interval& dom, int N) {
    if (!(dom.a >= w.iv.a && dom.b <= w.iv.b)) {
        throw std::invalid_argument("log_v_trace: dom must sit inside the weight interval");
    }
    const bool share_a = dom.a == w.iv.a;
    const bool share_b = dom.b == w.iv.b;
    auto smooth = [&](const real_t& x) {
        real_t v = log(pi()) + w.A_at(x);
        if (!share_a && w.ga != 0) v += w.ga * log(x - w.iv.a);
        if (!share_b && w.gb != 0) v += w.gb * log(w.iv.b - x);
        return v;
    };
    LogTrace t(ChebSeries::interpolate(dom, N, smooth));
    t.pa = real_t(1) / 2 + (share_a ? w.ga : real_t(0));
    t.pb = real_t(1) / 2 + (share_b ? w.gb : real_t(0));
    return t;
}

cplx_t szego_G(const WeightSpec& w, const Interval& dom, const cplx_t& z, int N) {
    LogTrace t = trace_scale(log_v_trace(w, dom, N), real_t(1) / 2);
    return outer_eval(t, z);
}

real_t szego_G_inf(const WeightSpec& w, const Interval& dom, int N) {
    LogTrace t = trace_scale(log_v_trace(w, dom, N), real_t(1) / 2);
    return exp(outer_log_inf(t));
}

}  // namespace angelesco
