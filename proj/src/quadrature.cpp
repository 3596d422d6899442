#include "angelesco/quadrature.hpp"

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <stdexcept>

namespace angelesco {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials:
//   p_{k+1}(s) = (s - a_k) p_k(s) - b_k p_{k-1}(s)
void jacobi_recurrence(int n, const real_t& al, const real_t& be,
                       std::vector<real_t>& a, std::vector<real_t>& b) {
    a.resize(n);
    b.resize(n);
    const real_t s = al + be;
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            a[0] = (be - al) / (s + 2);
            b[0] = pow(real_t(2), s + 1) * boost::math::beta(al + 1, be + 1);
        } else {
            const real_t t = 2 * k + s;
            a[k] = (be - al) * (be + al) / (t * (t + 2));
            if (k == 1) {
                b[1] = 4 * (al + 1) * (be + 1) / (sqr(s + 2) * (s + 3));
            } else {
                b[k] = 4 * k * (k + al) * (k + be) * (k + s) /
                       (sqr(t) * (t + 1) * (t - 1));
            }
        }
    }
}

// Monic p_n and its derivative at s via the three-term recurrence.
void eval_monic(const std::vector<real_t>& a, const std::vector<real_t>& b,
                const real_t& s, real_t& p, real_t& dp) {
    const int n = static_cast<int>(a.size());
    real_t pm1 = 0, dpm1 = 0;
    p = 1;
    dp = 0;
    for (int k = 0; k < n; ++k) {
        real_t pk = (s - a[k]) * p - (k > 0 ? b[k] * pm1 : real_t(0));
        real_t dpk = p + (s - a[k]) * dp - (k > 0 ? b[k] * dpm1 : real_t(0));
        pm1 = p;
        dpm1 = dp;
        p = pk;
        dp = dpk;
    }
}

real_t eval_monic_value(const std::vector<real_t>& a, const std::vector<real_t>& b,
                        int deg, const real_t& s) {
    real_t pm1 = 0, p = 1;
    for (int k = 0; k < deg; ++k) {
        real_t pk = (s - a[k]) * p - (k > 0 ? b[k] * pm1 : real_t(0));
        pm1 = p;
        p = pk;
    }
    return p;
}

}  // namespace

QuadRule gauss_jacobi(int n, const real_t& alpha, const real_t& beta) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
    if (!(alpha > -1 && beta > -1)) {
        throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
    }
    std::vector<real_t> a, b;
    jacobi_recurrence(n, alpha, beta, a, b);

    // Seeds from the symmetric tridiagonal eigenproblem in double precision.
    Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
    for (int k = 0; k < n; ++k) diag[k] = static_cast<double>(a[k]);
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(static_cast<double>(b[k]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, n > 1 ? sub : Eigen::VectorXd::Zero(0),
                              Eigen::EigenvaluesOnly);
    Eigen::VectorXd seeds = es.eigenvalues();

    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);

    real_t norm_prod = 1;
    for (int k = 0; k < n; ++k) norm_prod *= b[k];

    const real_t eps = working_eps();
    for (int k = 0; k < n; ++k) {
        real_t lo = (k == 0) ? real_t(-1)
                             : (real_t(seeds[k - 1]) + real_t(seeds[k])) / 2;
        real_t hi = (k == n - 1) ? real_t(1)
                                 : (real_t(seeds[k]) + real_t(seeds[k + 1])) / 2;
        real_t s = real_t(seeds[k]), p, dp;
        for (int it = 0; it < 80; ++it) {
            eval_monic(a, b, s, p, dp);
            if (dp == 0) break;
            real_t snew = s - p / dp;
            if (!(snew > lo && snew < hi)) snew = (lo + hi) / 2;  // guard
            real_t delta = fabs(snew - s);
            s = snew;
            if (delta < 4 * eps * (1 + fabs(s))) break;
        }
        eval_monic(a, b, s, p, dp);
        rule.x[k] = s;
        real_t pm1 = eval_monic_value(a, b, n - 1, s);
        rule.w[k] = norm_prod / (dp * pm1);
    }
    return rule;
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, real_t(0), real_t(0)); }

QuadRule weight_rule(const WeightSpec& w, int n) {
    QuadRule ref = gauss_jacobi(n, w.gb, w.ga);
    const real_t rad = w.iv.rad();
    const real_t scale = pow(rad, 1 + w.ga + w.gb);
    QuadRule out;
    out.x.resize(n);
    out.w.resize(n);
    for (int k = 0; k < n; ++k) {
        out.x[k] = w.iv.from_ref(ref.x[k]);
        out.w[k] = scale * ref.w[k] * exp(w.A_at(out.x[k]));
    }
    return out;
}

real_t integrate_ts(const std::function<real_t(const real_t&, const real_t&, const real_t&)>& f,
                    const real_t& a, const real_t& b, const real_t& tol,
                    real_t* achieved) {
    boost::math::quadrature::tanh_sinh<real_t> integrator(18, real_t("1e-140"));
    real_t err = 0, l1 = 0;
    real_t len = b - a;
    auto g = [&](const real_t& t, const real_t& tc) {
        // tc < 0 on the left half (|tc| = t-a), tc > 0 on the right (tc = b-t)
        real_t da, db;
        if (tc < 0) {
            da = -tc;
            db = len - da;
        } else {
            db = tc;
            da = len - db;
        }
        if (da == 0 || db == 0) return real_t(0);
        return f(t, da, db);
    };
    real_t res = integrator.integrate(g, a, b, tol, &err, &l1);
    if (achieved) *achieved = err * (l1 > 1 ? l1 : real_t(1));
    return res;
}

real_t integrate_ts(const std::function<real_t(const real_t&)>& f,
                    const real_t& a, const real_t& b, const real_t& tol,
                    real_t* achieved) {
    return integrate_ts(
        [&](const real_t& x, const real_t&, const real_t&) { return f(x); }, a, b,
        tol, achieved);
}

}  // namespace angelesco
