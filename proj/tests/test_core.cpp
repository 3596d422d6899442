#include <doctest.h>

#include <functional>

#include "angelesco/cheb.hpp"
#include "angelesco/cheb_density.hpp"
#include "angelesco/conformal.hpp"
#include "angelesco/domain.hpp"
#include "angelesco/outer.hpp"
#include "angelesco/precision.hpp"
#include "angelesco/quadrature.hpp"
#include "support/oracles.hpp"

using namespace angelesco;

namespace {
real_t rdist(const real_t& a, const real_t& b) { return abs(a - b); }
real_t cdist(const cplx_t& a, const cplx_t& b) { return abs(a - b); }
}  // namespace

TEST_CASE("precision round trip and derived tolerances") {
    CHECK(working_precision_bits() == 256);
    CHECK(working_eps() < real_t("1e-75"));
    CHECK(default_residual_tol() < real_t("1e-18"));
    CHECK(default_residual_tol() > working_eps());

    const real_t x("0.12345678901234567890123456789012345678901234567890"
                   "12345678901234567890");
    CHECK(real_t(to_string_full(x)) == x);

    CHECK(pow_int(real_t(2), -3) == real_t(1) / 8);
    CHECK(pow_int(real_t(-3), 3) == real_t(-27));
    CHECK(cdist(pow_int(cplx_t(0, 1), 4), cplx_t(1, 0)) == 0);
    CHECK(sqr(real_t(3)) == 9);
}

TEST_CASE("interval maps and validation") {
    Interval iv(real_t(-1), real_t(3));
    const real_t x("0.731");
    CHECK(rdist(iv.from_ref(iv.to_ref(x)), x) < real_t("1e-75"));
    const cplx_t z(2, 5);
    CHECK(cdist(iv.from_ref(iv.to_ref(z)), z) < real_t("1e-74"));
    CHECK(iv.contains(3));
    CHECK(!iv.strictly_inside(3));

    WeightSpec bad = testsup::uniform(iv);
    bad.ga = -1;
    CHECK_THROWS(bad.validate());

    AngelescoSystem overlap;
    overlap.weights.push_back(testsup::uniform(Interval(-1, real_t("0.5"))));
    overlap.weights.push_back(testsup::uniform(Interval(0, 1)));
    CHECK_THROWS(overlap.validate());

    // touching endpoints are allowed
    CHECK_NOTHROW(testsup::touching_symmetric().validate());
}

TEST_CASE("chebyshev interpolation is spectrally exact for entire functions") {
    const Interval iv(0, 2);
    auto f = [](const real_t& x) { return exp(x) * cos(x); };
    const ChebSeries s = ChebSeries::interpolate(iv, 48, f);
    CHECK(s.tail_norm(40) < real_t("1e-40"));
    for (const char* p : {"0.1", "0.77", "1.3", "1.999"}) {
        const real_t x(p);
        CHECK(rdist(s.eval(x), f(x)) < real_t("1e-60"));
    }
    CHECK(rdist(s.at_left(), f(real_t(0))) < real_t("1e-60"));
    CHECK(rdist(s.at_right(), f(real_t(2))) < real_t("1e-60"));
}

TEST_CASE("gauss rules integrate their weight classes exactly") {
    const QuadRule gl = gauss_legendre(16);
    // exact through degree 31
    CHECK(rdist(gl.apply([](const real_t& x) { return pow_int(x, 30); }),
                real_t(2) / 31) < real_t("1e-70"));
    const QuadRule gc = gauss_jacobi(12, real_t(-1) / 2, real_t(-1) / 2);
    CHECK(rdist(gc.apply([](const real_t&) { return real_t(1); }), pi()) <
          real_t("1e-70"));

    // weight_rule absorbs the endpoint factors: int_1^2 (x-1)^{1/2} dx = 2/3
    const WeightSpec w = testsup::jacobi(Interval(1, 2), real_t(1) / 2, 0);
    const QuadRule wr = weight_rule(w, 10);
    CHECK(rdist(wr.apply([](const real_t&) { return real_t(1); }),
                real_t(2) / 3) < real_t("1e-70"));
}

TEST_CASE("tanh-sinh integration handles endpoint singularities") {
    const real_t tol("1e-50");
    real_t got = integrate_ts(
        [](const real_t&, const real_t& da, const real_t&) { return -log(da); },
        real_t(0), real_t(1), tol);
    CHECK(rdist(got, real_t(1)) < real_t("1e-45"));
    got = integrate_ts(
        [](const real_t&, const real_t& da, const real_t&) {
            return 1 / sqrt(da);
        },
        real_t(0), real_t(1), tol);
    CHECK(rdist(got, real_t(2)) < real_t("1e-45"));
}

TEST_CASE("conformal frame: disk image, round trip, conjugate symmetry") {
    const ConformalFrame fr(Interval(-1, 1));
    for (const cplx_t& z : testsup::probe_points()) {
        CHECK(abs(fr.phi(z)) < 1);
        CHECK(cdist(fr.from_phi(fr.phi(z)), z) < real_t("1e-20"));
        CHECK(cdist(fr.from_phi(fr.phi(z)), z) < real_t("1e-60"));
        CHECK(cdist(fr.phi(conj(z)), conj(fr.phi(z))) == 0);
    }
    // w(z) = z + O(1) at infinity
    const cplx_t far(real_t("1e6"), real_t("1e5"));
    CHECK(cdist(fr.w(far) / far, cplx_t(1, 0)) < real_t("1e-11"));
}

TEST_CASE("arcsine density: closed forms for mass, cdf, potential, cauchy") {
    const ChebDensity mu = ChebDensity::arcsine(Interval(-1, 1), 1);
    CHECK(mu.mass() == 1);
    CHECK(rdist(mu.integrate([](const real_t&) { return real_t(1); }, 64),
                real_t(1)) < real_t("1e-70"));
    // F(1/2) = 1 - acos(1/2)/pi = 2/3
    CHECK(rdist(mu.cdf(real_t(1) / 2), real_t(2) / 3) < real_t("1e-70"));

    // potential is the constant log 2 on the support
    for (const char* p : {"-0.9", "0.0", "0.64"}) {
        CHECK(rdist(mu.potential_on(real_t(p)), log(real_t(2))) <
              real_t("1e-70"));
    }

    // cauchy transform equals -1/sqrt(z^2-1)
    const ConformalFrame fr(Interval(-1, 1));
    for (const cplx_t& z : testsup::probe_points()) {
        CHECK(cdist(mu.cauchy(z), -1 / fr.w(z)) < real_t("1e-70"));
    }
}

TEST_CASE("potential normalization at large distance") {
    // V(z) + log|z| -> 0 for a unit mass, with decay once past the hull
    const ChebDensity mu = ChebDensity::arcsine(Interval(0, 1), 1);
    const real_t e3 = abs(mu.potential(cplx_t(real_t("1e3"), 0)) +
                          log(real_t("1e3")));
    const real_t e6 = abs(mu.potential(cplx_t(real_t("1e6"), 0)) +
                          log(real_t("1e6")));
    CHECK(e3 < real_t("1e-2"));
    CHECK(e6 < real_t("1e-5"));
    CHECK(e6 < e3 / 100);
}

TEST_CASE("arcsine potential matches the exterior-map constant identity") {
    // V(z) = log|phi(z)| + log(4/(b-a)); recorded for both endpoint-interval
    // choices to guard the constant's sign.
    for (const Interval& iv : {Interval(-1, 1), Interval(0, 1)}) {
        const ChebDensity mu = ChebDensity::arcsine(iv, 1);
        const ConformalFrame fr(iv);
        for (const cplx_t& z : {cplx_t(2, 1), cplx_t(-3, real_t("0.2"))}) {
            const real_t lhs = mu.potential(z);
            const real_t rhs = log(abs(fr.phi(z))) + log(4 / iv.length());
            CHECK(rdist(lhs, rhs) < real_t("1e-70"));
        }
    }
}

TEST_CASE("log_primitive differentiates to minus the cauchy transform") {
    ChebDensity mu = ChebDensity::arcsine(Interval(-1, 0), 1);
    mu.g.push_back(real_t("0.3"));  // non-trivial smooth part
    const cplx_t z(real_t("0.8"), real_t("0.6"));
    const real_t h("1e-25");
    const cplx_t der = (mu.log_primitive(z + h) - mu.log_primitive(z - h)) /
                       (2 * h);
    CHECK(cdist(der, -mu.cauchy(z)) < real_t("1e-45"));
}

TEST_CASE("outer functions: reciprocal product, boundary modulus, mean") {
    const Interval iv(-1, 1);
    auto f = [](const real_t& x) { return cos(x) + x * x / 3; };
    const LogTrace t = project_trace(iv, 40, f);
    const LogTrace tm = trace_scale(t, real_t(-1));

    for (const cplx_t& z : testsup::probe_points()) {
        CHECK(cdist(outer_eval(t, z) * outer_eval(tm, z), cplx_t(1, 0)) <
              real_t("1e-60"));
    }

    // |outer_plus(x)| = e^{t(x)} inside the interval
    const real_t x("0.37");
    CHECK(rdist(abs(outer_plus(t, x)), exp(t.eval(x))) < real_t("1e-60"));

    // value at infinity is the arcsine mean of the trace
    const QuadRule gc = gauss_jacobi(48, real_t(-1) / 2, real_t(-1) / 2);
    const real_t mean = gc.apply(f) / pi();
    CHECK(rdist(outer_log_inf(t), mean) < real_t("1e-10"));
    CHECK(rdist(outer_log_inf(t), mean) < real_t("1e-55"));
}

TEST_CASE("harmonic extension recovers its boundary data") {
    const Interval iv(0, 2);
    auto f = [](const real_t& x) { return exp(-x) + x / 5; };
    const LogTrace t = project_trace(iv, 48, f);
    const real_t x("1.21");
    real_t prev;
    bool first = true;
    for (const char* e : {"1e-2", "1e-3", "1e-4"}) {
        const real_t err = abs(harmonic_ext(t, cplx_t(x, real_t(e))) - f(x));
        if (!first) CHECK(err < prev / 5);
        prev = err;
        first = false;
    }
    CHECK(prev < real_t("1e-4"));
}

TEST_CASE("log_v_trace merges endpoint exponents into the singular part") {
    const WeightSpec w = testsup::jacobi(Interval(1, 2), real_t(1) / 2, 0);
    const LogTrace t = log_v_trace(w, w.iv, 32);
    // v = pi (x-1)^{1/2} sqrt((x-1)(2-x)): exponent 1 at the left endpoint,
    // 1/2 at the right
    CHECK(t.pa == 1);
    CHECK(t.pb == real_t(1) / 2);
    const real_t x("1.4");
    const real_t direct = log(pi()) + w.log_density(x) +
                          log(sqrt((x - 1) * (2 - x)));
    CHECK(rdist(t.eval(x), direct) < real_t("1e-60"));
}

TEST_CASE("szego function closed forms for chebyshev and legendre weights") {
    const Interval iv(-1, 1);
    const WeightSpec ch = testsup::chebyshev(iv);
    // v is the constant pi, so G is sqrt(pi) everywhere
    const cplx_t z(2, 1);
    CHECK(cdist(szego_G(ch, iv, z), cplx_t(sqrt(pi()), 0)) < real_t("1e-60"));
    CHECK(rdist(szego_G_inf(ch, iv), sqrt(pi())) < real_t("1e-60"));

    // legendre: G(inf) = sqrt(pi/2)
    const WeightSpec leg = testsup::uniform(iv);
    CHECK(rdist(szego_G_inf(leg, iv), sqrt(pi() / 2)) < real_t("1e-60"));
}
