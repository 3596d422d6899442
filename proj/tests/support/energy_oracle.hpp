#pragma once

#include <vector>

#include "angelesco/domain.hpp"

namespace angelesco {
namespace testing {

// Discrete constrained-energy minimizer, independent of the library solver:
// piecewise-constant cell masses on cosine-graded cells of each hull, energy
// (1/2) sum_{ij} (1+delta_{ij}) I[w_i, w_j] with exact log-kernel cell-pair
// integrals, minimized by accelerated projected gradient with per-component
// simplex projection. Nonnegativity projection discovers the supports; no
// support logic is built in. Plain double arithmetic throughout.
struct EnergyCells {
    std::vector<double> edges;  // n + 1 ascending cell boundaries
    std::vector<double> mass;   // n cell masses

    int n() const { return static_cast<int>(mass.size()); }
    double width(int k) const { return edges[k + 1] - edges[k]; }
    double avg_density(int k) const { return mass[k] / width(k); }
};

struct EnergyOracleOptions {
    int cells_per_interval = 1024;
    int fista_iters = 3000;
    double active_eps = 1e-12;  // mass level separating active cells
    bool kkt_polish = true;
    int polish_rounds = 40;
};

struct EnergyOracleResult {
    std::vector<EnergyCells> comp;
    double objective = 0;
    double grad_step_sup = 0;  // sup-norm of one projected-gradient step at the result
    bool polished = false;
    int polish_rounds_used = 0;

    // Leftmost/rightmost active cell boundaries of component i.
    Interval support(int i) const;
};

EnergyOracleResult energy_minimize(const std::vector<Interval>& hulls,
                                   const std::vector<double>& c,
                                   const EnergyOracleOptions& opt = {});

// Cell-averaged densities of component i aggregated onto the m-cell cosine
// grid of the same hull (m must divide the internal cell count).
std::vector<double> aggregate_density(const EnergyOracleResult& r, int i, int m);

// Pointwise density readout of one component: a Chebyshev polynomial over
// the inverse-square-root edge factor of a hard-edge support, least-squares
// fitted to the oracle cell masses. Turns the cell histogram into an
// evaluable density; nothing here touches the library solver.
struct EdgeModelDensity {
    Interval support;
    std::vector<double> coef;
    double fit_residual = 0;  // relative l2 misfit of the cell masses

    double eval(double x) const;
};

EdgeModelDensity fit_edge_model(const EnergyOracleResult& r, int i,
                                int degree = 40);

// Second-order Richardson step across a nested pair of cell resolutions
// (fine has twice the cells of coarse); removes the leading discretization
// bias of the cell histogram from the fitted coefficients.
EdgeModelDensity richardson(const EdgeModelDensity& coarse,
                            const EdgeModelDensity& fine);

// Matching cell boundaries of the m-cell cosine grid on an interval.
std::vector<double> cosine_edges(const Interval& iv, int m);

}  // namespace testing
}  // namespace angelesco
