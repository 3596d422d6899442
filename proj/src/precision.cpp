#include "angelesco/precision.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

namespace angelesco {

namespace {
thread_local unsigned g_bits = 256;
}

void set_working_precision(unsigned mantissa_bits) {
    if (mantissa_bits < 64) {
        throw std::invalid_argument("mantissa_bits must be at least 64");
    }
    g_bits = mantissa_bits;
    const auto digits10 =
        static_cast<unsigned>(std::ceil(mantissa_bits * 0.30102999566398119)) + 2;
    real_t::default_precision(digits10);
}

unsigned working_precision_bits() { return g_bits; }

real_t working_eps() {
    real_t eps = 1;
    return ldexp(eps, -static_cast<int>(g_bits - 1));
}

real_t pi() { return boost::math::constants::pi<real_t>(); }

namespace {
template <class T>
T pow_int_impl(T base, long e) {
    if (e < 0) {
        base = T(1) / base;
        e = -e;
    }
    T acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}
}  // namespace

real_t pow_int(const real_t& base, long e) { return pow_int_impl(base, e); }
cplx_t pow_int(const cplx_t& base, long e) { return pow_int_impl(base, e); }

real_t default_residual_tol() {
    return pow(working_eps(), real_t(1) / 4);
}

std::string to_string_full(const real_t& x) {
    return x.str(0, std::ios_base::scientific);
}

}  // namespace angelesco
