#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"

namespace angelesco {

// First-kind Chebyshev points cos((2m+1)pi/(2N)), returned ascending.
std::vector<real_t> cheb_ref_nodes(int N);
std::vector<real_t> cheb_nodes(const Interval& iv, int N);

// Coefficients of the degree-(N-1) interpolant through values at the N
// first-kind points (same ordering as cheb_ref_nodes).
std::vector<real_t> cheb_vals_to_coeffs(const std::vector<real_t>& vals);
std::vector<real_t> cheb_coeffs_to_vals(const std::vector<real_t>& coef);

// Truncated Chebyshev series sum c_k T_k on an interval.
struct ChebSeries {
    Interval iv;
    std::vector<real_t> c;

    ChebSeries() = default;
    ChebSeries(Interval i, std::vector<real_t> coef) : iv(std::move(i)), c(std::move(coef)) {}

    static ChebSeries interpolate(const Interval& iv, int N,
                                  const std::function<real_t(const real_t&)>& f);
    static ChebSeries from_values(const Interval& iv, const std::vector<real_t>& vals);

    real_t eval(const real_t& x) const;
    cplx_t eval(const cplx_t& z) const;
    real_t eval_ref(const real_t& s) const;  // s already in [-1, 1]

    // Value of the series at the interval ends, sum c_k (+-1)^k.
    real_t at_left() const;
    real_t at_right() const;

    int size() const { return static_cast<int>(c.size()); }
    real_t tail_norm(int from) const;  // sum |c_k|, k >= from
};

}  // namespace angelesco
