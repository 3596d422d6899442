#pragma once

#include <vector>

#include "angelesco/cheb_density.hpp"
#include "angelesco/domain.hpp"
#include "angelesco/grid_density.hpp"

namespace angelesco {

// Solution of the vector equilibrium problem with interaction matrix
// (1 + delta_{ij}) on pairwise disjoint hulls: masses c_i, supports possibly
// strictly inside the hulls (pushing), densities in closed form, and the
// variational constants.
struct EquilibriumSolution {
    std::vector<Interval> hulls;
    std::vector<real_t> c;
    std::vector<Interval> supports;
    std::vector<ChebDensity> densities;
    std::vector<real_t> ell;
    real_t solve_residual = 0;

    int d() const { return static_cast<int>(hulls.size()); }
};

// 2 V_i(x) + sum_{j != i} V_j(x); equals ell_i on support i.
real_t effective_potential(const EquilibriumSolution& sol, int i,
                           const real_t& x);

// Supports start at the hulls (or at initial_supports) and relax by
// bisection on the edge value of the smooth density factor; the density on
// fixed supports is a single dense collocation solve.
EquilibriumSolution solve_vector_equilibrium(
    const std::vector<Interval>& hulls, const std::vector<real_t>& c,
    int grid_n, const real_t& tol,
    const std::vector<Interval>* initial_supports = nullptr);

struct VariationalResidual {
    real_t eq_max;
    real_t ineq_min;  // meaningful only when has_free_region
    bool has_free_region;
};

// Residuals of the equality/inequality conditions on a probe grid; the
// default (prime) size never shares nodes with an even collocation grid.
VariationalResidual variational_residual(const EquilibriumSolution& sol,
                                         int probe_n = 181);

// (1/c_i)(-V_i(x) + ell_i/2 - (1/2) sum_{j != i} V_j(x)); zero on the
// support, negative on the free part of the hull.
real_t kappa(const EquilibriumSolution& sol, int i, const real_t& x);

struct EndpointExponent {
    real_t fitted;   // raw log-log slope of the density near the endpoint
    real_t snapped;  // nearer of -1/2, +1/2
    real_t fit_residual;
};

// Dyadic-distance fit of the density exponent at a support endpoint; throws
// when neither +-1/2 is resolved.
EndpointExponent endpoint_exponent(const EquilibriumSolution& sol, int i,
                                   Side side);

}  // namespace angelesco
