#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "angelesco/equilibrium.hpp"
#include "angelesco/mop.hpp"
#include "angelesco/szego_system.hpp"

namespace angelesco {

// One lhs-vs-rhs comparison. Zero-distribution rows store the sup distance in
// rel_err and leave z at the origin. flags carries semicolon-joined markers
// for upstream residuals that exceeded the context tolerance.
struct CheckRow {
    int n_total = 0;
    int i = 0;  // component, 0-based
    cplx_t z{0, 0};
    cplx_t lhs{0, 0}, rhs{0, 0};
    real_t rel_err{0};
    std::string flags;
};

// Equilibrium and the coupled outer system depend on a multi-index only
// through its direction, so a ray schedule shares one solve: directions are
// cached under the reduced multi-index, fixed directions under their exact
// coordinates. Factorized polynomials are cached per multi-index on top of
// the shared moment table.
class RayContext {
  public:
    struct Direction {
        EquilibriumSolution eq;
        SzegoSystem ss;
    };

    RayContext(AngelescoSystem sys, int grid_n, real_t tol);

    const AngelescoSystem& system() const { return sys_; }
    MomentTable& moments() { return table_; }
    int grid_n() const { return grid_n_; }
    const real_t& tol() const { return tol_; }

    const Direction& direction(const MultiIndex& n);
    const Direction& direction_c(const std::vector<real_t>& c);
    const MopFactorization& factors(const MultiIndex& n);

    // Markers for every cached residual above the tolerance that the given
    // multi-index depends on.
    std::string flags_for(const MultiIndex& n, const Direction& dir) const;

  private:
    AngelescoSystem sys_;
    MomentTable table_;
    int grid_n_;
    real_t tol_;
    std::map<MultiIndex, Direction> by_index_;
    std::map<std::vector<real_t>, Direction> by_c_;
    std::map<MultiIndex, MopFactorization> mops_;

    Direction solve_direction(const std::vector<real_t>& c);
};

// P_{n,i}(z) against exp(|n| int log(z - x) d omega_i) S_i(inf)/S_i(z) for
// every component and probe point; omega and S come from the direction of n,
// or from the fixed direction c when given.
std::vector<CheckRow> verify_sa4_at(RayContext& ctx, const MultiIndex& n,
                                    const std::vector<cplx_t>& zs,
                                    const std::vector<real_t>* fixed_c = nullptr);

// Sup distance between the normalized zero counting measure of factor i and
// the mass-normalized equilibrium CDF; one row per component.
std::vector<CheckRow> verify_weak_at(RayContext& ctx, const MultiIndex& n);

// Data for one varying-weight comparison: orthogonality measure mu, the unit
// external measure omega, optional smooth perturbation h, and the field
// correction kappa (null outside the pushed mode). restrict_to is the
// interval carrying the outer-function ratio on the right-hand side.
struct VaryingConfig {
    WeightSpec mu;
    ChebDensity omega;
    std::function<real_t(const real_t&)> h;
    std::function<real_t(const real_t&)> kappa;
    Interval restrict_to;
    int n = 0;
};

// Pushed-mode config for component i: omega is the i-th equilibrium component
// scaled to unit mass, kappa the effective-potential defect, restriction to
// the i-th support. The equilibrium data is captured by value.
VaryingConfig varying_from_equilibrium(const AngelescoSystem& sys,
                                       const EquilibriumSolution& eq, int i,
                                       int n,
                                       std::function<real_t(const real_t&)> h = {});

struct VaryingResult {
    std::vector<CheckRow> rows;  // one per probe point
    MonicPoly T;
    real_t norm_sq{0};      // int T^2 e^theta dmu
    real_t norm_target{0};  // 2 G^2 at infinity for e^h mu restricted
    real_t norm_ratio{0};
};

VaryingResult verify_vw_at(const VaryingConfig& cfg,
                           const std::vector<cplx_t>& zs, int quad_n = 64,
                           const real_t* tol = nullptr);

// Centered couplings 2 * H(s - mean s) of the solved coupled system,
// restricted to the given intervals: the exponents that reassemble the
// coupled right-hand side from single-weight ingredients.
std::vector<LogTrace> coupling_exponents(const SzegoSystem& ss,
                                         const std::vector<Interval>& targets,
                                         int M = 64);

// exp(|n| int log(z - x) d omega_i) * G(inf)/G(z) for the weight
// e^{coupling} mu_i restricted to support i; matches the coupled rhs up to
// collocation error.
cplx_t vw_assembled_rhs(const AngelescoSystem& sys,
                        const RayContext::Direction& dir,
                        const std::vector<LogTrace>& coupling, int i,
                        const MultiIndex& n, const cplx_t& z, int quad_n = 64);

}  // namespace angelesco
