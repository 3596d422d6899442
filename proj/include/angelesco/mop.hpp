#pragma once

#include <functional>
#include <vector>

#include "angelesco/domain.hpp"
#include "angelesco/op_engine.hpp"

namespace angelesco {

// Raw moments int x^t dmu_i of an Angelesco system, shared across solves so a
// ray sequence of multi-indices pays for quadrature once. Escalation doubles
// the order and invalidates the cache.
class MomentTable {
  public:
    explicit MomentTable(AngelescoSystem sys);

    const AngelescoSystem& system() const { return sys_; }
    const std::vector<real_t>& moments(int i, int count);
    int order() const { return order_; }
    void escalate();

  private:
    AngelescoSystem sys_;
    int order_;
    std::vector<std::vector<real_t>> m_;
};

struct MopFactorization {
    MonicPoly full;
    std::vector<MonicPoly> factors;
    std::vector<std::vector<real_t>> zeros;  // per measure, ascending
};

// Type-II multiple orthogonal polynomial: the monic degree-|n| polynomial
// with int x^k P dmu_i = 0 for k < n_i, each i, solved as one dense system of
// mixed moments. Residuals verified at doubled quadrature order.
MonicPoly solve_mop(MomentTable& table, const MultiIndex& n);
MonicPoly solve_mop(const AngelescoSystem& sys, const MultiIndex& n);

// Partition the zeros of P by interval membership (closed intervals with a
// small collar); requires exactly n_i zeros per interval and rebuilds the
// monic factors from them.
MopFactorization split_factors(const MonicPoly& P, const AngelescoSystem& sys,
                               const MultiIndex& n);

// Normalized counting measure of a zero set.
struct DiscreteMeasure {
    std::vector<real_t> atoms;  // ascending

    real_t cdf(const real_t& x) const;
};

DiscreteMeasure counting_measure(const std::vector<real_t>& zeros);
DiscreteMeasure counting_measure(const MonicPoly& factor, const Interval& iv);

// sup-distance between the discrete CDF and a reference CDF, evaluated at
// both sides of every atom.
real_t kolmogorov_distance(const DiscreteMeasure& m,
                           const std::function<real_t(const real_t&)>& cdf);

}  // namespace angelesco
