#pragma once

#include <vector>

#include "angelesco/cheb_density.hpp"
#include "angelesco/domain.hpp"

namespace angelesco {

// Sampled density on an interval: ascending nodes, nonnegative values of the
// Lebesgue density at the nodes, and positive quadrature weights such that
// sum values[k] * quad_weights[k] recovers the mass.
struct GridDensity {
    Interval iv;
    std::vector<real_t> nodes;
    std::vector<real_t> values;
    std::vector<real_t> quad_weights;

    void validate() const;
    real_t mass() const;
    int n() const { return static_cast<int>(nodes.size()); }
};

// Sample a ChebDensity on N Gauss-Chebyshev-type nodes; the quadrature
// weights absorb the inverse-square-root edge factors.
GridDensity sample_density(const ChebDensity& d, int N);

// -int log|z - x| times the sampled density. Points close to or on the
// support get a split treatment: the quadrature-node sum for the smooth part
// plus an analytically integrated log kernel against a local linear density
// model on the panel containing Re z. Accuracy is limited by the panel
// resolution; use ChebDensity::potential for spectral accuracy.
real_t log_potential(const GridDensity& d, const cplx_t& z);

}  // namespace angelesco
