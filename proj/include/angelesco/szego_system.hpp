#pragma once

#include <vector>

#include "angelesco/equilibrium.hpp"
#include "angelesco/mop.hpp"
#include "angelesco/outer.hpp"

namespace angelesco {

// Coupled family of outer functions attached to the system restricted to the
// equilibrium supports: each S_i is conjugate-symmetric, zero-free off
// supp_i, positive at infinity, and the boundary moduli tie together through
//   |S_{i,+}(x)|^2 prod_{j != i} S_j(x) = v_i(x)  on supp_i,
// v_i the density of mu_i against the arcsine measure of supp_i. In
// log-modulus form this is a linear system for the boundary traces s_i,
// solved by collocation; endpoint log terms are carried explicitly and their
// coefficients satisfy a small exact linear system resolved beforehand.
struct SzegoSystem {
    AngelescoSystem sys;
    std::vector<Interval> supports;
    std::vector<LogTrace> s;           // boundary trace of log|S_i|
    std::vector<real_t> log_S_inf;     // log S_i(infinity)
    real_t collocation_residual = 0;   // trace-equation defect off the grid

    int d() const { return static_cast<int>(supports.size()); }
};

SzegoSystem solve_szego_system(const AngelescoSystem& sys,
                               const std::vector<Interval>& supports, int N);

cplx_t eval_S(const SzegoSystem& ss, int i, const cplx_t& z);

// max_i sup | |S_{i,+}|^2 prod_{j != i} S_j / v_i - 1 | over interior probe
// points of every support.
real_t szego_boundary_residual(const SzegoSystem& ss, int probe_n = 181);

// Componentwise -1/2 sum_{j != i} (harmonic extension of u_j) restricted to
// targets[i]; an endpoint log term of u_j transfers a log singularity to any
// target sharing that endpoint, and the returned traces split it off again.
std::vector<LogTrace> apply_H(const std::vector<LogTrace>& u,
                              const std::vector<Interval>& targets, int M);

// Nonlinear counterpart built from monic polynomials with varying weights:
// component i of the image of u is
//   (1/2) sum_{j != i} ( log|T_{n_j}(e^{2u_j - |n| sum_{k != j} V_k} mu_j)|
//                        + |n| V_j )
// restricted to hull i, where V_k is the potential of the equilibrium
// component omega_k for c = n/|n|. The factor vector of the multiple
// orthogonal polynomial is its unique fixed point.
struct DOperatorContext {
    AngelescoSystem sys;
    MultiIndex n;
    EquilibriumSolution eq;  // solved for c = n/|n| on the hulls of sys
    int grid_n = 48;         // interpolation size of the images
};

std::vector<ChebSeries> apply_D(const DOperatorContext& ctx,
                                const std::vector<ChebSeries>& u);

// The exact fixed point assembled from a solved factorization:
// q_i = (1/2) sum_{j != i} (log|P_j| + |n| V_j) on hull i.
std::vector<ChebSeries> q_from_factors(const DOperatorContext& ctx,
                                       const MopFactorization& f);

struct FixedPointResult {
    std::vector<ChebSeries> u;
    int iterations = 0;
    real_t last_delta = 0;
    bool converged = false;
};

// Plain fixed-point iteration with averaging when the step sizes stop
// decreasing.
FixedPointResult iterate_D(const DOperatorContext& ctx,
                           std::vector<ChebSeries> u0, int max_iter,
                           const real_t& tol);

real_t sup_distance(const std::vector<ChebSeries>& a,
                    const std::vector<ChebSeries>& b, int probe_n = 97);

}  // namespace angelesco
