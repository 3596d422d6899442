#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"
#include "angelesco/quadrature.hpp"

namespace angelesco {

// Polynomial in the monomial basis; coeffs[k] multiplies x^k. Engine outputs
// are monic (leading coefficient exactly 1) and carry the recorded
// orthogonality residual relative to the weighted norm.
struct MonicPoly {
    std::vector<real_t> coeffs;
    real_t solve_residual = 0;

    MonicPoly() = default;
    explicit MonicPoly(std::vector<real_t> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    real_t eval(const real_t& x) const;
    cplx_t eval(const cplx_t& z) const;
    real_t eval_deriv(const real_t& x) const;
};

MonicPoly poly_from_zeros(const std::vector<real_t>& zeros);

// Base generalized-Jacobi weight with an extra exponent factor:
// e^{theta(x)} dmu(x). Null theta means theta == 0. n records the degree
// parameter the weight belongs to (bookkeeping only). breaks lists interior
// points where theta stops being analytic (support junctions of a pushed
// external field); when present, moments switch from a single Gauss-Jacobi
// rule to a double-exponential composite split at those points, which keeps
// the escalation ladder convergent for exponents with fractional-power kinks.
struct VaryingWeight {
    WeightSpec base;
    std::function<real_t(const real_t&)> theta;
    int n = 0;
    std::vector<real_t> breaks;
};

// Monic orthogonal polynomial of degree n: int x^k T_n e^{theta} dmu = 0 for
// k < n, solved from raw moments at escalating quadrature order. Throws
// PrecisionError when the residual target is unreachable at the current
// mantissa.
MonicPoly monic_orthogonal(const WeightSpec& w, int n);
MonicPoly monic_orthogonal(const VaryingWeight& w, int n);

// sqrt(int p^2 e^{theta} dmu).
real_t weighted_norm(const MonicPoly& p, const VaryingWeight& w, int order = 0);

// Real zeros of p inside iv, ascending: sign-change bracketing on a dense
// Chebyshev-point scan, then bisection-guarded Newton. No count check.
std::vector<real_t> zeros_in_interval(const MonicPoly& p, const Interval& iv);

// As above but requires exactly degree-many zeros (the situation for an
// orthogonal polynomial scanned on its own interval); throws otherwise.
std::vector<real_t> poly_zeros(const MonicPoly& p, const Interval& iv);

struct AsymptoticsCheck {
    cplx_t lhs, rhs;
    real_t rel_err;
};

// Compares P_n(z) against ((beta-alpha)/4 / phi(z))^n G(inf)/G(z), G the
// Szego function of the weight.
AsymptoticsCheck classical_asymptotics_check(const WeightSpec& w, int n,
                                             const cplx_t& z);

}  // namespace angelesco
