#pragma once

#include <vector>

#include "angelesco/domain.hpp"
#include "angelesco/precision.hpp"

// Shared fixtures and pinned reference values for the test suite.
//
// Everything in `frozen` was produced by an independent route (closed form,
// hand computation, or the from-scratch discrete energy minimizer in
// energy_oracle.*) and is pinned here so that regressions in the library
// surface as test failures rather than silent drift.

namespace testsup {

using angelesco::AngelescoSystem;
using angelesco::Interval;
using angelesco::WeightSpec;
using angelesco::cplx_t;
using angelesco::real_t;

// Uniform weight (Lebesgue) on an interval.
WeightSpec uniform(const Interval& iv);

// Chebyshev weight 1/sqrt((x-a)(b-x)) up to a constant.
WeightSpec chebyshev(const Interval& iv);

// Jacobi-type weight (x-a)^ga (b-x)^gb.
WeightSpec jacobi(const Interval& iv, const real_t& ga, const real_t& gb);

// [-1,0] and [0,1], both uniform: intervals touch at the origin and the
// system is symmetric under x -> -x.
AngelescoSystem touching_symmetric();

// [-1,0] uniform and [1,2] with a (x-1)^{1/2} factor: a gap between the
// intervals and deliberately unequal weights.
AngelescoSystem separated_mixed();

// Single uniform measure on [-1,1]; the d = 1 degenerate input.
AngelescoSystem single_legendre();

// Standard probe points off every hull used by asymptotics tests.
std::vector<cplx_t> probe_points();

namespace frozen {

// Pushed-endpoint data for touching_symmetric with c = (3/4, 1/4), solved at
// grid 64 / tol 1e-10 and cross-checked against the discrete energy
// minimizer (agreement 2.9e-4 at oracle resolution 512).
extern const char* pushed_alpha;   // left endpoint of the second support
extern const char* pushed_ell_0;   // first modified Robin constant
extern const char* pushed_ell_1;   // second modified Robin constant

// Discrete-energy objective of the separated_mixed c = (1/2,1/2) problem at
// oracle resolution 512 (regression pin for the oracle itself).
extern const char* sep_energy_objective;

// Endpoint-log coefficient that the coupled trace solver must place at the
// shared origin of touching_symmetric: exactly 1/6.
extern const char* touching_origin_tag_num;  // "1"
extern const char* touching_origin_tag_den;  // "6"

// Shrinking-window endpoint integrals of the borderline eps = 1/2 example
// weight, window [0, delta], right-normalized; computed by the
// singularity-split quadrature at 256 bits and spot-checked against the
// (1 - log delta)^{-1/2} envelope.
extern const char* usz_half_v_1em2;  // delta = 1e-2
extern const char* usz_half_v_1em8;  // delta = 1e-8

// Convergent endpoint-example case: the eps = 0 weight integrated against
// the arcsine measure of [-1, 0.7].
extern const char* usz_theta0_szego_m1_07;

}  // namespace frozen

// Monic multiple-orthogonality coefficients for uniform weights on
// [-1,0], [1,2] at multi-index (1,1), from the hand-solved 2x2 moment
// system: p(x) = x^2 - x - 5/6.
std::vector<real_t> mop11_coeffs();

// Monic degree-3 orthogonal polynomial for the uniform weight on [0,1]
// (shifted Legendre): x^3 - (3/2)x^2 + (3/5)x - 1/20.
std::vector<real_t> shifted_legendre3_coeffs();

}  // namespace testsup
