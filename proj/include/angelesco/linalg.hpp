#pragma once

#include <vector>

#include "angelesco/precision.hpp"

namespace angelesco {

// Dense solves at working precision. Real systems go through Eigen's
// partial-pivot LU on multiprecision scalars; the complex variant is a small
// local LU since Eigen is not wired up for the adapted complex type.

struct RealSolveResult {
    std::vector<real_t> x;
    real_t residual = 0;  // max_i |Ax - b|_i / (1 + |b|_i)
};

RealSolveResult solve_dense(const std::vector<std::vector<real_t>>& A,
                            const std::vector<real_t>& b);

std::vector<cplx_t> solve_dense_cplx(std::vector<std::vector<cplx_t>> A,
                                     std::vector<cplx_t> b);

// Smallest singular value estimate (double precision is enough for
// conditioning diagnostics).
double smallest_singular_value(const std::vector<std::vector<real_t>>& A);

}  // namespace angelesco
