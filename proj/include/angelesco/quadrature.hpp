#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"

namespace angelesco {

struct QuadRule {
    std::vector<real_t> x, w;
    int n() const { return static_cast<int>(x.size()); }

    real_t apply(const std::function<real_t(const real_t&)>& f) const {
        real_t acc = 0;
        for (int k = 0; k < n(); ++k) acc += w[k] * f(x[k]);
        return acc;
    }
};

// Gauss rule for the weight (1-s)^alpha (1+s)^beta on [-1,1]; alpha, beta > -1.
// Double-precision Golub-Welsch seeds refined by guarded Newton iteration at
// the working precision.
QuadRule gauss_jacobi(int n, const real_t& alpha, const real_t& beta);
QuadRule gauss_legendre(int n);

// Rule integrating f against the full WeightSpec density, endpoint factors
// absorbed into the weights: sum w_k f(x_k) ~ integral f dmu.
QuadRule weight_rule(const WeightSpec& w, int n);

// Adaptive tanh-sinh integration of f over [a, b]. The integrand receives
// (x, da, db) where da, db are the distances to the endpoints, computed
// without cancellation; integrable endpoint singularities should be written
// in terms of those. Returns the integral; *achieved gets an error estimate.
real_t integrate_ts(const std::function<real_t(const real_t&, const real_t&, const real_t&)>& f,
                    const real_t& a, const real_t& b, const real_t& tol,
                    real_t* achieved = nullptr);

// Convenience overload for integrands smooth up to the endpoints.
real_t integrate_ts(const std::function<real_t(const real_t&)>& f,
                    const real_t& a, const real_t& b, const real_t& tol,
                    real_t* achieved = nullptr);

}  // namespace angelesco
