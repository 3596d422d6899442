#pragma once

#include "angelesco/domain.hpp"

namespace angelesco {

// Square-root branch and exterior conformal map attached to an interval.
//
// w(z) = sqrt((z - a)(z - b)) with the branch cut on [a, b] and w ~ z at
// infinity. phi(z) maps the interval exterior onto the open unit disk with
// phi(inf) = 0; on the reference interval phi(z) = s - w(s) where s is the
// affine image of z. Values for Im z < 0 come from conjugating the upper
// half-plane evaluation so the symmetry is exact in floating point.
struct ConformalFrame {
    Interval iv;

    explicit ConformalFrame(Interval i) : iv(std::move(i)) {}

    cplx_t w(const cplx_t& z) const;
    cplx_t phi(const cplx_t& z) const;

    // |w| on the interval itself: sqrt((x - a)(b - x)).
    real_t wabs_on(const real_t& x) const;

    // Upper-boundary values at x in [a, b]: w_+ = i |w|, phi_+ = e^{-i theta}
    // with x = mid + rad cos(theta).
    cplx_t w_plus(const real_t& x) const;
    cplx_t phi_plus(const real_t& x) const;

    // Both maps at once (shares the square root).
    void eval(const cplx_t& z, cplx_t& w_out, cplx_t& phi_out) const;

    // Inverse of phi: z = mid + rad (u + 1/u)/2 for 0 < |u| < 1.
    cplx_t from_phi(const cplx_t& u) const;

    void require_off_cut(const cplx_t& z) const;
};

}  // namespace angelesco
