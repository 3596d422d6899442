#include "oracles.hpp"

namespace testsup {

WeightSpec uniform(const Interval& iv) {
    WeightSpec w;
    w.iv = iv;
    return w;
}

WeightSpec chebyshev(const Interval& iv) {
    WeightSpec w;
    w.iv = iv;
    w.ga = real_t(-1) / 2;
    w.gb = real_t(-1) / 2;
    return w;
}

WeightSpec jacobi(const Interval& iv, const real_t& ga, const real_t& gb) {
    WeightSpec w;
    w.iv = iv;
    w.ga = ga;
    w.gb = gb;
    return w;
}

AngelescoSystem touching_symmetric() {
    AngelescoSystem sys;
    sys.weights.push_back(uniform(Interval(-1, 0)));
    sys.weights.push_back(uniform(Interval(0, 1)));
    sys.validate();
    return sys;
}

AngelescoSystem separated_mixed() {
    AngelescoSystem sys;
    sys.weights.push_back(uniform(Interval(-1, 0)));
    sys.weights.push_back(jacobi(Interval(1, 2), real_t(1) / 2, real_t(0)));
    sys.validate();
    return sys;
}

AngelescoSystem single_legendre() {
    AngelescoSystem sys;
    sys.weights.push_back(uniform(Interval(-1, 1)));
    sys.validate();
    return sys;
}

std::vector<cplx_t> probe_points() {
    return {cplx_t(2, 1),       cplx_t(real_t("-2.5"), 0),
            cplx_t(real_t("0.5"), 2), cplx_t(3, 0),
            cplx_t(real_t("-1.8"), real_t("0.7")),
            cplx_t(real_t("1.2"), real_t("-1.5"))};
}

namespace frozen {

const char* pushed_alpha = "0.1538315680";
const char* pushed_ell_0 = "2.047357433075";
const char* pushed_ell_1 = "0.797275401121";

const char* sep_energy_objective = "0.524005088653";

const char* touching_origin_tag_num = "1";
const char* touching_origin_tag_den = "6";

const char* usz_half_v_1em2 = "0.385279";
const char* usz_half_v_1em8 = "0.219771";

const char* usz_theta0_szego_m1_07 = "0.871928";

}  // namespace frozen

std::vector<real_t> mop11_coeffs() {
    // Moments of the uniform weights: on [-1,0] they are 1, -1/2, 1/3; on
    // [1,2] they are 1, 3/2, 7/3. Degree-1 orthogonality to each measure
    // gives c0 + c1*(-1/2) = -1/3 and c0 + c1*(3/2) = -7/3, so c1 = -1 and
    // c0 = -5/6.
    return {real_t(-5) / 6, real_t(-1), real_t(1)};
}

std::vector<real_t> shifted_legendre3_coeffs() {
    return {real_t(-1) / 20, real_t(3) / 5, real_t(-3) / 2, real_t(1)};
}

}  // namespace testsup
