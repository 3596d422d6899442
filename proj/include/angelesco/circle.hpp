#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"
#include "angelesco/outer.hpp"

namespace angelesco {

// Polynomial with complex coefficients; c[k] multiplies z^k.
struct CirclePoly {
    std::vector<cplx_t> c;

    CirclePoly() = default;
    explicit CirclePoly(std::vector<cplx_t> coeffs) : c(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(c.size()) - 1; }
    cplx_t eval(const cplx_t& z) const;
    cplx_t deriv(const cplx_t& z, int order) const;
};

CirclePoly poly_from_roots(const std::vector<cplx_t>& roots);

// p*(z) = z^n conj(p(1/conj z)), defined on polynomials of degree at most n.
CirclePoly star(const CirclePoly& p, int n);

// Orthogonality data on the unit circle: an absolutely continuous measure
// sigma with density exp(log_density) against normalized Lebesgue measure
// (parametrized by the angle), a continuous real perturbation g (null means
// 0), and a monic denominator polynomial W with all zeros b[] in the open
// disk. The inner product is <f,k> = int f conj(k) e^g dsigma / |W|^2.
struct CircleTriple {
    std::function<real_t(const real_t&)> log_density;
    std::function<real_t(const real_t&)> g;
    std::vector<cplx_t> b;

    real_t full_log_density(const real_t& theta) const;
    CirclePoly W() const { return poly_from_roots(b); }
    CirclePoly W_star() const;
    void validate() const;
};

struct CircleONP {
    int n = 0;
    CirclePoly phi, phi_star;  // orthonormal, leading coefficient alpha > 0
    real_t alpha = 0;
    real_t ortho_residual = 0;  // largest normalized Gram defect
};

// Orthonormal polynomial from the moments t[j] = int xi^j w dm, j = 0..n
// (negative indices by conjugation): Hermitian Toeplitz system solved for the
// monic polynomial, then normalized.
CircleONP circle_onp_from_moments(const std::vector<cplx_t>& t, int n);

// Moments of the full orthogonality weight e^g sigma' / |W|^2 by trapezoid
// sums on a midpoint-shifted uniform angular grid (grid 0 picks
// max(32 (n+1), 512); spectrally accurate for smooth densities).
std::vector<cplx_t> circle_moments(const CircleTriple& t, int count, int grid = 0);

CircleONP circle_onp(const CircleTriple& t, int n, int grid = 0);

// Outer (Szego) function of a positive density w on the circle,
//   D(z) = exp( 1/2 int (xi+z)/(xi-z) log w(xi) dm(xi) ),
// held through Fourier coefficients of log w. D is analytic and zero-free in
// the disk, D(0) = exp(c0/2) > 0, and |D|^2 = w on the boundary.
struct DiskOuter {
    real_t c0 = 0;
    std::vector<cplx_t> ck;  // coefficient of e^{ik theta}, k = 1, 2, ...

    cplx_t eval(const cplx_t& z) const;          // |z| < 1
    cplx_t boundary(const real_t& theta) const;  // non-tangential limit
    real_t at0() const;
};

// log w sampled by angle; grid 0 picks 1024.
DiskOuter disk_outer(const std::function<real_t(const real_t&)>& log_w, int grid = 0);

// D of the full density e^g sigma' of the triple (the 1/|W|^2 factor does
// not enter).
DiskOuter triple_szego(const CircleTriple& t, int grid = 0);

// Caratheodory transform F(z) = int (xi+z)/(xi-z) e^g dsigma of the measure
// e^g sigma, held through its moments m_k = int conj(xi)^k e^g dsigma:
// F(z) = m0 + 2 sum_k mk[k-1] z^k.
struct Caratheodory {
    real_t m0 = 0;
    std::vector<cplx_t> mk;  // k = 1, 2, ...

    cplx_t eval(const cplx_t& z) const;
    cplx_t deriv(const cplx_t& z, int order) const;
};

Caratheodory caratheodory(const CircleTriple& t, int grid = 0);

// Companion polynomial: the unique psi* of degree at most n interpolating
// phi* F at the zeros of z W(z), counted with multiplicity (confluent Newton
// table, so repeated zeros and the pure Taylor case are handled uniformly).
CirclePoly companion_psi_star(const CircleONP& p, const Caratheodory& F,
                              const std::vector<cplx_t>& b);

// lambda(z) = Re(psi*(z)/phi*(z)): positive and harmonic on the closed disk;
// on the boundary it equals |W/phi|^2, and its mean over the circle equals
// lambda(0), the mass of e^g sigma.
real_t lambda_at(const CircleONP& p, const CirclePoly& psi_star, const cplx_t& z);
real_t lambda_mean(const CircleONP& p, const CirclePoly& psi_star, int grid = 512);

// ---- correspondence with varying weights on [-1, 1] ------------------------

// Weight e^h dmu / tau on [-1,1], with tau of degree at most 2n, positive on
// [-1,1], tau(0) = 1, encoded by its root multiset: tau(x) = prod (1 - x/a_j)
// over 2n roots off [-1,1]; roots at infinity contribute the factor 1 and are
// tracked by count. The multiset must be conjugate-symmetric so tau is real.
struct IntervalTriple {
    WeightSpec mu;                           // must live on [-1, 1]
    std::function<real_t(const real_t&)> h;  // null means 0
    std::vector<cplx_t> tau_finite;
    int tau_inf = 0;

    int pairs() const;  // n, where the root multiset has size 2n
    cplx_t tau(const cplx_t& z) const;
    real_t tau(const real_t& x) const;
    void validate() const;
};

// Image data on the circle under x = (zeta + 1/zeta)/2: roots map to
// b_j = phi(a_j) (phi the disk-valued exterior map of [-1,1], phi(inf) = 0)
// and the measure dmu maps to its symmetrized angular form.
CircleTriple joukowski_lift(const IntervalTriple& t);

// prod over finite roots of 2 a_j phi(a_j); positive, equals 1 when every
// root sits at infinity. |W(e^{i theta})|^2 = joukowski_constant * tau(cos theta).
real_t joukowski_constant(const IntervalTriple& t);

// Moments int T_j(x) e^{h(x)} dmu(x) / (c tau(x)), j = 0..count-1, evaluated
// by Gauss rules on the interval (these equal the angular moments of the
// lifted weight, but stay spectrally accurate for Jacobi-type endpoints).
std::vector<cplx_t> lifted_moments(const IntervalTriple& t, int count);

// Caratheodory moments of the lifted measure (no tau): m_k = int T_k e^h dmu.
Caratheodory lifted_caratheodory(const IntervalTriple& t, int count);

// Fourier data of D for a boundary trace on [-1,1]: the Chebyshev part maps
// coefficient-wise and the log-distance terms have explicit 1/k tails.
// terms bounds the stored tail length.
DiskOuter disk_outer_from_trace(const LogTrace& trace, int terms = 512);

// Orthonormal p_n on [-1,1] for the triple, computed through the degree-2n
// circle polynomial of the lifted data:
//   p_n^2(z)  = (phi2n + phi2n*)^2(zeta) / (2 c zeta^{2n} (1 + B0)),
//   gamma_n^2 = 2^{2n-1} alpha^2 (1 + B0) / c,  B0 = phi2n(0)/phi2n*(0),
// with z = (zeta + 1/zeta)/2.
struct IntervalViaCircle {
    int n = 0;
    CircleONP circ;  // phi_{2n} of the lifted triple
    real_t c = 1;
    real_t B0 = 0;
    real_t gamma_sq = 0;

    cplx_t pn_sq(const cplx_t& z) const;
};

IntervalViaCircle interval_onp_via_circle(const IntervalTriple& t);

// Szego function of e^h dmu on [-1,1] and its value at infinity.
cplx_t interval_G(const IntervalTriple& t, const cplx_t& z, int N = 64);
real_t interval_G_inf(const IntervalTriple& t, int N = 64);

// Blaschke-type product prod (phi(z) - phi(a_j)) / (1 - conj(phi(a_j)) phi(z));
// roots at infinity contribute the factor phi(z).
cplx_t tau_blaschke(const IntervalTriple& t, const cplx_t& z);

// Ratio the strong asymptotics drives to 1 off [-1,1]:
//   2 G^2(z) p_n^2(z) tau_blaschke(z) / tau(z).
cplx_t strong_ratio(const IntervalTriple& t, const IntervalViaCircle& v,
                    const cplx_t& z, int N = 64);

// Leading-coefficient form: G^2(inf) gamma_n^2 2^{1-2n} c -> 1.
real_t leading_ratio(const IntervalTriple& t, const IntervalViaCircle& v, int N = 64);

}  // namespace angelesco
