#include "angelesco/linalg.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <stdexcept>

namespace angelesco {

using MatX = Eigen::Matrix<real_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<real_t, Eigen::Dynamic, 1>;

RealSolveResult solve_dense(const std::vector<std::vector<real_t>>& A,
                            const std::vector<real_t>& b) {
    const int n = static_cast<int>(A.size());
    if (n == 0 || static_cast<int>(b.size()) != n) {
        throw std::invalid_argument("solve_dense: bad dimensions");
    }
    MatX M(n, n);
    VecX rhs(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(A[i].size()) != n) {
            throw std::invalid_argument("solve_dense: ragged matrix");
        }
        for (int j = 0; j < n; ++j) M(i, j) = A[i][j];
        rhs(i) = b[i];
    }
    VecX x = M.partialPivLu().solve(rhs);
    VecX r = M * x - rhs;
    RealSolveResult out;
    out.x.resize(n);
    for (int i = 0; i < n; ++i) {
        out.x[i] = x(i);
        real_t ri = fabs(r(i)) / (1 + fabs(rhs(i)));
        if (ri > out.residual) out.residual = ri;
    }
    return out;
}

std::vector<cplx_t> solve_dense_cplx(std::vector<std::vector<cplx_t>> A,
                                     std::vector<cplx_t> b) {
    const int n = static_cast<int>(A.size());
    if (n == 0 || static_cast<int>(b.size()) != n) {
        throw std::invalid_argument("solve_dense_cplx: bad dimensions");
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        real_t best = abs(A[col][col]);
        for (int r = col + 1; r < n; ++r) {
            real_t v = abs(A[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) throw std::runtime_error("solve_dense_cplx: singular matrix");
        if (piv != col) {
            std::swap(A[piv], A[col]);
            std::swap(b[piv], b[col]);
        }
        const cplx_t d = A[col][col];
        for (int r = col + 1; r < n; ++r) {
            cplx_t f = A[r][col] / d;
            if (f == cplx_t(0)) continue;
            A[r][col] = 0;
            for (int j = col + 1; j < n; ++j) A[r][j] -= f * A[col][j];
            b[r] -= f * b[col];
        }
    }
    std::vector<cplx_t> x(n);
    for (int i = n - 1; i >= 0; --i) {
        cplx_t acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= A[i][j] * x[j];
        x[i] = acc / A[i][i];
    }
    return x;
}

double smallest_singular_value(const std::vector<std::vector<real_t>>& A) {
    const int n = static_cast<int>(A.size());
    const int m = n ? static_cast<int>(A[0].size()) : 0;
    Eigen::MatrixXd M(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) M(i, j) = static_cast<double>(A[i][j]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace angelesco
