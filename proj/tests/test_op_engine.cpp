#include <doctest.h>

#include <vector>

#include "angelesco/conformal.hpp"
#include "angelesco/op_engine.hpp"
#include "angelesco/precision.hpp"
#include "angelesco/quadrature.hpp"
#include "support/oracles.hpp"

using namespace angelesco;

namespace {

real_t rdist(const real_t& a, const real_t& b) { return abs(a - b); }

// Dense solve of a small linear system by partial-pivot elimination; used to
// build moment-based reference polynomials without touching the engine.
std::vector<real_t> dense_solve(std::vector<std::vector<real_t>> A,
                                std::vector<real_t> b) {
    const int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (abs(A[r][k]) > abs(A[piv][k])) piv = r;
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (int r = k + 1; r < n; ++r) {
            const real_t m = A[r][k] / A[k][k];
            for (int c = k; c < n; ++c) A[r][c] -= m * A[k][c];
            b[r] -= m * b[k];
        }
    }
    std::vector<real_t> x(n);
    for (int k = n - 1; k >= 0; --k) {
        real_t acc = b[k];
        for (int c = k + 1; c < n; ++c) acc -= A[k][c] * x[c];
        x[k] = acc / A[k][k];
    }
    return x;
}

}  // namespace

TEST_CASE("closed-form monic polynomials and their zeros") {
    const WeightSpec ch = testsup::chebyshev(Interval(-1, 1));
    const MonicPoly t3 = monic_orthogonal(ch, 3);
    CHECK(rdist(t3.coeffs[0], 0) < real_t("1e-70"));
    CHECK(rdist(t3.coeffs[1], real_t(-3) / 4) < real_t("1e-70"));
    CHECK(rdist(t3.coeffs[2], 0) < real_t("1e-70"));
    const std::vector<real_t> z3 = poly_zeros(t3, ch.iv);
    REQUIRE(z3.size() == 3);
    CHECK(rdist(z3[0], -sqrt(real_t(3)) / 2) < real_t("1e-70"));
    CHECK(rdist(z3[1], 0) < real_t("1e-70"));
    CHECK(rdist(z3[2], sqrt(real_t(3)) / 2) < real_t("1e-70"));

    const WeightSpec leg = testsup::uniform(Interval(-1, 1));
    const MonicPoly p2 = monic_orthogonal(leg, 2);
    CHECK(rdist(p2.coeffs[0], real_t(-1) / 3) < real_t("1e-70"));
    CHECK(rdist(p2.coeffs[1], 0) < real_t("1e-70"));
    const std::vector<real_t> z2 = poly_zeros(p2, leg.iv);
    REQUIRE(z2.size() == 2);
    CHECK(rdist(z2[1], 1 / sqrt(real_t(3))) < real_t("1e-70"));

    // uniform weight on [0,1]: shifted Legendre
    const MonicPoly s3 = monic_orthogonal(testsup::uniform(Interval(0, 1)), 3);
    const std::vector<real_t> ref = testsup::shifted_legendre3_coeffs();
    for (int k = 0; k < 4; ++k)
        CHECK(rdist(s3.coeffs[k], ref[k]) < real_t("1e-70"));
}

TEST_CASE("exponential factor against a recurrence-based moment solve") {
    // weight e^x dx on [-1,1]; moments from the integration-by-parts
    // recurrence I_k = (e - (-1)^k/e) - k I_{k-1}, no quadrature involved
    const real_t e1 = exp(real_t(1));
    std::vector<real_t> m(9);
    m[0] = e1 - 1 / e1;
    for (int k = 1; k < 9; ++k) {
        const real_t boundary = (k % 2 == 0) ? e1 - 1 / e1 : e1 + 1 / e1;
        m[k] = boundary - k * m[k - 1];
    }
    std::vector<std::vector<real_t>> A(4, std::vector<real_t>(4));
    std::vector<real_t> rhs(4);
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 4; ++j) A[k][j] = m[k + j];
        rhs[k] = -m[k + 4];
    }
    const std::vector<real_t> ref = dense_solve(A, rhs);

    VaryingWeight w;
    w.base = testsup::uniform(Interval(-1, 1));
    w.theta = [](const real_t& x) { return x; };
    w.n = 4;
    const MonicPoly p = monic_orthogonal(w, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(rdist(p.coeffs[k], ref[k]) < real_t("1e-60"));
}

TEST_CASE("high-degree orthogonality residuals") {
    const WeightSpec leg = testsup::uniform(Interval(-1, 1));
    const MonicPoly p = monic_orthogonal(leg, 40);
    CHECK(p.solve_residual < real_t("1e-20"));

    // independent re-integration at a fixed high order
    VaryingWeight vw;
    vw.base = leg;
    const real_t nrm = weighted_norm(p, vw);
    const QuadRule gl = gauss_legendre(160);
    for (int k : {0, 17, 39}) {
        const real_t r = gl.apply([&](const real_t& x) {
            return pow_int(x, k) * p.eval(x);
        });
        CHECK(abs(r) / nrm < real_t("1e-20"));
    }
}

TEST_CASE("zero count and interlacing for a jacobi weight") {
    const WeightSpec w = testsup::jacobi(Interval(1, 2), real_t(1) / 2, 0);
    const MonicPoly p11 = monic_orthogonal(w, 11);
    const MonicPoly p12 = monic_orthogonal(w, 12);
    const std::vector<real_t> z11 = poly_zeros(p11, w.iv);
    const std::vector<real_t> z12 = poly_zeros(p12, w.iv);
    REQUIRE(z11.size() == 11);
    REQUIRE(z12.size() == 12);
    for (size_t k = 0; k + 1 < z12.size(); ++k) {
        CHECK(z12[k] < z11[k]);
        CHECK(z11[k] < z12[k + 1]);
    }
    for (const real_t& x : z12) CHECK(w.iv.strictly_inside(x));
}

TEST_CASE("norm minimality among monic perturbations") {
    VaryingWeight w;
    w.base = testsup::uniform(Interval(-1, 1));
    const MonicPoly p = monic_orthogonal(w.base, 6);
    const real_t best = weighted_norm(p, w);
    for (int k = 0; k < 6; ++k) {
        for (int sgn : {-1, 1}) {
            MonicPoly q = p;
            q.coeffs[k] += sgn * real_t(1) / 1000;
            CHECK(best <= weighted_norm(q, w));
        }
    }
}

TEST_CASE("constant exponent shift leaves the polynomial invariant") {
    VaryingWeight w;
    w.base = testsup::jacobi(Interval(-1, 1), real_t(1) / 2, real_t(-1) / 4);
    w.theta = [](const real_t&) { return real_t(1) / 2; };
    const MonicPoly shifted = monic_orthogonal(w, 5);
    const MonicPoly plain = monic_orthogonal(w.base, 5);
    for (int k = 0; k < 5; ++k)
        CHECK(rdist(shifted.coeffs[k], plain.coeffs[k]) < real_t("1e-60"));
}

TEST_CASE("fractional-power kink handled through declared break points") {
    VaryingWeight w;
    w.base = testsup::uniform(Interval(-1, 1));
    const real_t b("0.3");
    w.theta = [b](const real_t& x) {
        const real_t d = abs(x - b);
        return d * sqrt(d);
    };
    w.breaks = {b};
    w.n = 6;
    const MonicPoly p = monic_orthogonal(w, 6);
    CHECK(p.solve_residual < real_t("1e-25"));

    // orthogonality re-checked with a panel-split adaptive rule
    const real_t nrm = weighted_norm(p, w);
    for (int k : {0, 2, 5}) {
        auto f = [&](const real_t& x) {
            return pow_int(x, k) * p.eval(x) * exp(w.theta(x));
        };
        const real_t tol("1e-40");
        const real_t r = integrate_ts(f, w.base.iv.a, b, tol) +
                         integrate_ts(f, b, w.base.iv.b, tol);
        CHECK(abs(r) / nrm < real_t("1e-30"));
    }
}

TEST_CASE("classical asymptotics check") {
    const WeightSpec ch = testsup::chebyshev(Interval(-1, 1));
    const ConformalFrame fr(ch.iv);
    const cplx_t z2(2, 0);
    // chebyshev correction term is exactly |phi|^{2n}
    const real_t q = abs(fr.phi(z2));
    const AsymptoticsCheck a8 = classical_asymptotics_check(ch, 8, z2);
    CHECK(a8.rel_err > pow_int(q, 16) / 2);
    CHECK(a8.rel_err < pow_int(q, 16) * 2);
    const AsymptoticsCheck a12 = classical_asymptotics_check(ch, 12, z2);
    CHECK(a12.rel_err < a8.rel_err);

    const WeightSpec leg = testsup::uniform(Interval(-1, 1));
    const cplx_t z15(real_t("1.5"), 0);
    real_t prev;
    bool first = true;
    for (int n : {4, 8, 16}) {
        const AsymptoticsCheck c = classical_asymptotics_check(leg, n, z15);
        if (!first) CHECK(c.rel_err < prev);
        prev = c.rel_err;
        first = false;
    }

    // degenerate degree: monic polynomial is identically 1
    const AsymptoticsCheck c0 = classical_asymptotics_check(leg, 0, z15);
    CHECK(c0.lhs == cplx_t(1, 0));

    CHECK_THROWS(classical_asymptotics_check(leg, 4, cplx_t(real_t(1) / 2, 0)));
}
