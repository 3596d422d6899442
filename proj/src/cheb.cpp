#include "angelesco/cheb.hpp"

#include <stdexcept>

namespace angelesco {

std::vector<real_t> cheb_ref_nodes(int N) {
    if (N < 1) throw std::invalid_argument("cheb_ref_nodes: N >= 1");
    const real_t p = pi();
    std::vector<real_t> x(N);
    for (int m = 0; m < N; ++m) {
        // descending angle -> ascending node
        x[m] = cos(p * (2 * (N - 1 - m) + 1) / (2 * N));
    }
    return x;
}

std::vector<real_t> cheb_nodes(const Interval& iv, int N) {
    auto s = cheb_ref_nodes(N);
    for (auto& v : s) v = iv.from_ref(v);
    return s;
}

std::vector<real_t> cheb_vals_to_coeffs(const std::vector<real_t>& vals) {
    const int N = static_cast<int>(vals.size());
    const real_t p = pi();
    // Direct discrete orthogonality sums; O(N^2) but N stays modest and the
    // arithmetic is multiprecision anyway.
    std::vector<real_t> theta(N);
    for (int m = 0; m < N; ++m) theta[m] = p * (2 * (N - 1 - m) + 1) / (2 * N);
    std::vector<real_t> c(N);
    for (int k = 0; k < N; ++k) {
        real_t acc = 0;
        for (int m = 0; m < N; ++m) acc += vals[m] * cos(k * theta[m]);
        c[k] = acc * (k == 0 ? real_t(1) : real_t(2)) / N;
    }
    return c;
}

std::vector<real_t> cheb_coeffs_to_vals(const std::vector<real_t>& coef) {
    const int N = static_cast<int>(coef.size());
    auto s = cheb_ref_nodes(N);
    ChebSeries ser(Interval(real_t(-1), real_t(1)), coef);
    std::vector<real_t> vals(N);
    for (int m = 0; m < N; ++m) vals[m] = ser.eval_ref(s[m]);
    return vals;
}

ChebSeries ChebSeries::interpolate(const Interval& iv, int N,
                                   const std::function<real_t(const real_t&)>& f) {
    auto xs = cheb_nodes(iv, N);
    std::vector<real_t> vals(xs.size());
    for (std::size_t m = 0; m < xs.size(); ++m) vals[m] = f(xs[m]);
    return ChebSeries(iv, cheb_vals_to_coeffs(vals));
}

ChebSeries ChebSeries::from_values(const Interval& iv, const std::vector<real_t>& vals) {
    return ChebSeries(iv, cheb_vals_to_coeffs(vals));
}

real_t ChebSeries::eval_ref(const real_t& s) const {
    // Clenshaw
    real_t b1 = 0, b2 = 0;
    const real_t two_s = 2 * s;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        real_t b0 = c[k] + two_s * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return (c.empty() ? real_t(0) : c[0]) + s * b1 - b2;
}

real_t ChebSeries::eval(const real_t& x) const { return eval_ref(iv.to_ref(x)); }

cplx_t ChebSeries::eval(const cplx_t& z) const {
    cplx_t s = iv.to_ref(z);
    cplx_t b1 = 0, b2 = 0;
    const cplx_t two_s = 2 * s;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        cplx_t b0 = two_s * b1 - b2 + c[k];
        b2 = b1;
        b1 = b0;
    }
    return (c.empty() ? cplx_t(0) : cplx_t(c[0])) + s * b1 - b2;
}

real_t ChebSeries::at_left() const {
    real_t acc = 0;
    for (std::size_t k = 0; k < c.size(); ++k) acc += (k % 2 == 0) ? c[k] : -c[k];
    return acc;
}

real_t ChebSeries::at_right() const {
    real_t acc = 0;
    for (const auto& v : c) acc += v;
    return acc;
}

real_t ChebSeries::tail_norm(int from) const {
    real_t acc = 0;
    for (std::size_t k = std::max(from, 0); k < c.size(); ++k) acc += fabs(c[k]);
    return acc;
}

}  // namespace angelesco
