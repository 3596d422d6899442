#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"

namespace angelesco {

// Profile of log mu' (or its magnitude) on an interval. Points where the
// profile blows up are declared so integrals can split there and probe the
// local decay instead of feeding a non-integrable product to quadrature.
struct LogWeightFn {
    Interval iv;
    std::function<real_t(const real_t&)> theta;
    std::vector<real_t> singular_points;
};

struct UszIntegral {
    real_t value = 0;      // +infinity when divergent
    bool divergent = false;
    real_t decay_p = 0;    // worst fitted shell-decay exponent among probes
};

// int_a^b theta(t) (t-a)^{-1/2} dt (Side::left) resp. with (b-t)^{-1/2}
// (Side::right). Dyadic shells toward the kernel end and toward every
// declared singular point decide convergence first; a slowly decaying shell
// sum (fitted exponent <= 1.1) yields the +infinity sentinel.
UszIntegral usz_endpoint_integral_ex(const LogWeightFn& w, const real_t& a,
                                     const real_t& b, Side side);
real_t usz_endpoint_integral(const LogWeightFn& w, const real_t& a,
                             const real_t& b, Side side);

// pi^{-1/2} int_gamma^x theta(t) |x-t|^{-1/2} dt; +infinity when the path
// crosses a non-integrable product.
real_t frac_integral(const LogWeightFn& w, const real_t& gamma,
                     const real_t& x);

// (1/pi) int_dom theta(t) dt / sqrt((t - a)(b - t)), same sentinel rules.
UszIntegral szego_integral_ex(const LogWeightFn& w, const Interval& dom);
real_t szego_integral(const LogWeightFn& w, const Interval& dom);

// The two-sided family on [-1, 1]: zero left of the origin,
// x^{-1/2} (1 - log x)^{-eps} to the right.
LogWeightFn make_example_weight(const real_t& eps);

// |log mu'| of a generalized-Jacobi weight.
LogWeightFn log_weight_magnitude(const WeightSpec& w);

// Finite shrinking-window verification at one endpoint of delta. For each
// threshold 2^{-k}, k = 0..K, every window lying within some neighborhood of
// the endpoint (on either side of it, clipped to the weight's interval, the
// kernel anchored according to which side of delta the endpoint is) must
// integrate below the threshold; the neighborhood size is found by search
// and recorded. Verdicts are resolution-limited observations, not proofs.
struct UszVerdict {
    bool pass = false;
    int thresholds_met = 0;
    std::vector<real_t> window_sizes;  // neighborhood found per threshold (0 = none)
    std::vector<real_t> values;        // worst window value attained there
};
UszVerdict usz_verdict(const LogWeightFn& w, const Interval& delta,
                       Side endpoint, int K = 8);

}  // namespace angelesco
