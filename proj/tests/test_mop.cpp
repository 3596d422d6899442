#include <doctest.h>

#include <vector>

#include "angelesco/mop.hpp"
#include "angelesco/precision.hpp"
#include "support/oracles.hpp"

using namespace angelesco;

namespace {
real_t rdist(const real_t& a, const real_t& b) { return abs(a - b); }

AngelescoSystem two_uniform() {
    AngelescoSystem sys;
    sys.weights.push_back(testsup::uniform(Interval(-1, 0)));
    sys.weights.push_back(testsup::uniform(Interval(1, 2)));
    sys.validate();
    return sys;
}
}  // namespace

TEST_CASE("hand-solved low-degree coefficients") {
    AngelescoSystem sys = two_uniform();

    // (1,0): plain degree-1 orthogonality to the first measure only
    const MonicPoly p10 = solve_mop(sys, {1, 0});
    CHECK(rdist(p10.coeffs[0], real_t(1) / 2) < real_t("1e-70"));

    const MonicPoly p11 = solve_mop(sys, {1, 1});
    const std::vector<real_t> ref = testsup::mop11_coeffs();
    REQUIRE(p11.degree() == 2);
    for (int k = 0; k <= 2; ++k)
        CHECK(rdist(p11.coeffs[k], ref[k]) < real_t("1e-70"));
    CHECK(p11.solve_residual < real_t("1e-50"));
}

TEST_CASE("zero split: exact per-interval counts and factor product") {
    AngelescoSystem sys = two_uniform();
    const MultiIndex n = {5, 3};
    const MonicPoly P = solve_mop(sys, n);
    const MopFactorization f = split_factors(P, sys, n);
    REQUIRE(f.factors.size() == 2);
    CHECK(static_cast<int>(f.zeros[0].size()) == 5);
    CHECK(static_cast<int>(f.zeros[1].size()) == 3);
    for (const real_t& x : f.zeros[0]) CHECK(sys.hull(0).contains(x));
    for (const real_t& x : f.zeros[1]) CHECK(sys.hull(1).contains(x));

    // product of the monic factors is the full polynomial
    for (const char* p : {"0.5", "-1.7", "2.31"}) {
        const real_t x(p);
        CHECK(rdist(f.factors[0].eval(x) * f.factors[1].eval(x), P.eval(x)) <
              real_t("1e-60"));
    }
}

TEST_CASE("symmetric system: mirrored factors") {
    AngelescoSystem sys = testsup::touching_symmetric();
    const MultiIndex n = {3, 3};
    const MopFactorization f = split_factors(solve_mop(sys, n), sys, n);
    REQUIRE(f.zeros[0].size() == 3);
    REQUIRE(f.zeros[1].size() == 3);
    // zeros are refined to 2^{-bits/2}, so mirror symmetry holds to that scale
    for (int k = 0; k < 3; ++k)
        CHECK(rdist(f.zeros[0][k], -f.zeros[1][2 - k]) < real_t("1e-35"));
}

TEST_CASE("moment table sharing and escalation") {
    MomentTable table(two_uniform());
    const int order0 = table.order();
    const std::vector<real_t> m0 = table.moments(0, 4);
    // uniform on [-1,0]: 1, -1/2, 1/3, -1/4
    CHECK(rdist(m0[0], 1) < real_t("1e-70"));
    CHECK(rdist(m0[1], real_t(-1) / 2) < real_t("1e-70"));
    CHECK(rdist(m0[2], real_t(1) / 3) < real_t("1e-70"));
    CHECK(rdist(m0[3], real_t(-1) / 4) < real_t("1e-70"));

    table.escalate();
    CHECK(table.order() == 2 * order0);
    const std::vector<real_t> m1 = table.moments(0, 4);
    for (int k = 0; k < 4; ++k) CHECK(rdist(m1[k], m0[k]) < real_t("1e-70"));

    // the table route and the from-scratch route agree
    const MonicPoly via_table = solve_mop(table, {4, 2});
    AngelescoSystem sys = two_uniform();
    const MonicPoly direct = solve_mop(sys, {4, 2});
    for (int k = 0; k <= 6; ++k)
        CHECK(rdist(via_table.coeffs[k], direct.coeffs[k]) < real_t("1e-60"));
}

TEST_CASE("counting measures and the kolmogorov distance") {
    // chebyshev zeros against the arcsine CDF: the sup distance is exactly
    // 1/(2n) by the equioscillation of the zero angles
    const WeightSpec ch = testsup::chebyshev(Interval(-1, 1));
    const int n = 10;
    const MonicPoly t = monic_orthogonal(ch, n);
    const DiscreteMeasure nu = counting_measure(poly_zeros(t, ch.iv));
    auto arcsine_cdf = [](const real_t& x) {
        return 1 - acos(x) / pi();
    };
    const real_t d = kolmogorov_distance(nu, arcsine_cdf);
    CHECK(rdist(d, real_t(1) / (2 * n)) < real_t("1e-30"));

    // atom-based cdf conventions
    CHECK(nu.cdf(real_t(-2)) == 0);
    CHECK(nu.cdf(real_t(2)) == 1);
    CHECK(rdist(nu.cdf(real_t(0)), real_t(1) / 2) < real_t("1e-70"));
}

TEST_CASE("gapped mixed system keeps exact split counts along a ray") {
    AngelescoSystem sys = testsup::separated_mixed();
    MomentTable table(sys);
    for (const MultiIndex& n :
         {MultiIndex{4, 4}, MultiIndex{7, 2}, MultiIndex{1, 9}, MultiIndex{6, 5}}) {
        const MonicPoly P = solve_mop(table, n);
        CHECK(P.solve_residual < real_t("1e-20"));
        const MopFactorization f = split_factors(P, sys, n);
        CHECK(static_cast<int>(f.zeros[0].size()) == n[0]);
        CHECK(static_cast<int>(f.zeros[1].size()) == n[1]);
    }
}

TEST_CASE("multi-index validation") {
    AngelescoSystem sys = two_uniform();
    CHECK_THROWS(validate_multi_index(sys, {1, -1}));
    CHECK_THROWS(validate_multi_index(sys, {1, 2, 3}));
    CHECK_NOTHROW(validate_multi_index(sys, {0, 0}));
}
