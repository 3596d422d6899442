#include "angelesco/conformal.hpp"

#include <stdexcept>

namespace angelesco {

namespace {

// w and phi on the reference frame, Im s >= 0 assumed.
void eval_upper(const cplx_t& s, cplx_t& w, cplx_t& phi) {
    const real_t as = abs(s);
    if (as > 4) {
        // s sqrt(1 - s^-2) avoids cancellation at large |s|
        w = s * sqrt(cplx_t(1) - 1 / (s * s));
        phi = 1 / (s + w);
    } else {
        w = sqrt(s - 1) * sqrt(s + 1);
        if (as >= 1) {
            phi = 1 / (s + w);
        } else {
            phi = s - w;
        }
    }
}

}  // namespace

void ConformalFrame::require_off_cut(const cplx_t& z) const {
    if (z.imag() == 0) {
        const real_t x = z.real();
        if (x > iv.a && x < iv.b) {
            throw std::domain_error("evaluation point lies on the interval");
        }
    }
}

void ConformalFrame::eval(const cplx_t& z, cplx_t& w_out, cplx_t& phi_out) const {
    require_off_cut(z);
    cplx_t s = iv.to_ref(z);
    bool flip = s.imag() < 0;
    if (flip) s = conj(s);
    cplx_t w, phi;
    eval_upper(s, w, phi);
    if (flip) {
        w = conj(w);
        phi = conj(phi);
    }
    w_out = iv.rad() * w;
    phi_out = phi;
}

cplx_t ConformalFrame::w(const cplx_t& z) const {
    cplx_t w, phi;
    eval(z, w, phi);
    return w;
}

cplx_t ConformalFrame::phi(const cplx_t& z) const {
    cplx_t w, phi;
    eval(z, w, phi);
    return phi;
}

real_t ConformalFrame::wabs_on(const real_t& x) const {
    if (!iv.contains(x)) {
        throw std::domain_error("wabs_on expects a point of the interval");
    }
    return sqrt(x - iv.a) * sqrt(iv.b - x);
}

cplx_t ConformalFrame::w_plus(const real_t& x) const {
    return cplx_t(real_t(0), wabs_on(x));
}

cplx_t ConformalFrame::phi_plus(const real_t& x) const {
    const real_t s = iv.to_ref(x);
    if (fabs(s) > 1) throw std::domain_error("phi_plus expects a point of the interval");
    // e^{-i theta} = s - i sqrt(1 - s^2)
    return cplx_t(s, -sqrt((1 - s) * (1 + s)));
}

cplx_t ConformalFrame::from_phi(const cplx_t& u) const {
    return iv.from_ref((u + 1 / u) / 2);
}

}  // namespace angelesco
