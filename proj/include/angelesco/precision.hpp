#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/complex_adaptor.hpp>
#include <stdexcept>
#include <string>

namespace angelesco {

namespace mp = boost::multiprecision;

// Arbitrary-precision scalar types. Precision is a per-run setting held in
// MPFR's thread-local default; call set_working_precision() before any
// computation.
using real_t = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using cplx_t = mp::number<mp::complex_adaptor<mp::mpfr_float_backend<0>>, mp::et_off>;

struct PrecisionConfig {
    unsigned mantissa_bits = 256;
    // 0 means "derived from the problem size" (each solver picks its own
    // floor and doubles on residual failure).
    unsigned quadrature_order = 0;
    // 0 means derived from the mantissa (eps^{1/4}).
    double solve_residual_tol = 0;
};

// Thrown when a solver cannot reach its residual target even after
// escalating quadrature order; the remedy is a larger mantissa.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

void set_working_precision(unsigned mantissa_bits);
unsigned working_precision_bits();

// Machine epsilon at the current working precision.
real_t working_eps();

real_t pi();

inline real_t sqr(const real_t& x) { return x * x; }

// Integer powers by squaring (boost's pow is not overloaded for the adapted
// complex type with integral exponents).
real_t pow_int(const real_t& base, long e);
cplx_t pow_int(const cplx_t& base, long e);

// Default residual target derived from the working precision.
real_t default_residual_tol();

// Round-trippable decimal serialization at the current precision.
std::string to_string_full(const real_t& x);

}  // namespace angelesco
