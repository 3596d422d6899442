#include "angelesco/grid_density.hpp"

#include <stdexcept>

namespace angelesco {

void GridDensity::validate() const {
    const std::size_t m = nodes.size();
    if (m == 0 || values.size() != m || quad_weights.size() != m) {
        throw std::invalid_argument("GridDensity: inconsistent array sizes");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!(nodes[k] >= iv.a && nodes[k] <= iv.b)) {
            throw std::invalid_argument("GridDensity: node outside the interval");
        }
        if (k > 0 && !(nodes[k] > nodes[k - 1])) {
            throw std::invalid_argument("GridDensity: nodes must ascend");
        }
        if (!(quad_weights[k] > 0)) {
            throw std::invalid_argument("GridDensity: weights must be positive");
        }
        if (values[k] < 0) {
            throw std::invalid_argument("GridDensity: negative density value");
        }
    }
}

real_t GridDensity::mass() const {
    real_t acc = 0;
    for (int k = 0; k < n(); ++k) acc += values[k] * quad_weights[k];
    return acc;
}

GridDensity sample_density(const ChebDensity& d, int N) {
    GridDensity out;
    out.iv = d.iv;
    out.nodes.resize(N);
    out.values.resize(N);
    out.quad_weights.resize(N);
    const real_t p = pi();
    const real_t rad = d.iv.rad();
    for (int m = 0; m < N; ++m) {
        // ascending in x
        real_t theta = p * (2 * (N - 1 - m) + 1) / (2 * N);
        real_t s = cos(theta);
        real_t x = d.iv.from_ref(s);
        real_t wabs = rad * sin(theta);  // sqrt((x-a)(b-x))
        out.nodes[m] = x;
        real_t sm = d.smooth_ref(s);
        out.values[m] = (sm < 0 && sm > -1e-30 ? real_t(0) : sm) / (p * wabs);
        out.quad_weights[m] = p * wabs / N;
    }
    return out;
}

namespace {

// Primitives of log sqrt(t^2 + y^2) and t log sqrt(t^2 + y^2).
real_t prim_log(const real_t& t, const real_t& y) {
    if (t == 0) return 0;
    if (y == 0) return t * log(fabs(t)) - t;
    return t * log(t * t + y * y) / 2 - t + y * atan(t / y);
}

real_t prim_tlog(const real_t& t, const real_t& y) {
    const real_t r2 = t * t + y * y;
    if (r2 == 0) return 0;
    return r2 * (log(r2) - 1) / 4;
}

}  // namespace

real_t log_potential(const GridDensity& d, const cplx_t& z) {
    d.validate();
    const int m = d.n();
    const real_t x0 = z.real(), y = z.imag();

    real_t hmax = 0;
    for (int k = 1; k < m; ++k) hmax = std::max(hmax, d.nodes[k] - d.nodes[k - 1]);

    const bool near_support =
        fabs(y) <= hmax && x0 >= d.iv.a - hmax && x0 <= d.iv.b + hmax;

    if (!near_support) {
        real_t acc = 0;
        for (int k = 0; k < m; ++k) {
            real_t dx = x0 - d.nodes[k];
            acc -= d.values[k] * d.quad_weights[k] * log(dx * dx + y * y) / 2;
        }
        return acc;
    }

    // nearest node and its cell (midpoints to the neighbors)
    int j = 0;
    real_t best = fabs(x0 - d.nodes[0]);
    for (int k = 1; k < m; ++k) {
        real_t dk = fabs(x0 - d.nodes[k]);
        if (dk < best) {
            best = dk;
            j = k;
        }
    }
    real_t cl = (j > 0) ? (d.nodes[j - 1] + d.nodes[j]) / 2 : d.iv.a;
    real_t cr = (j < m - 1) ? (d.nodes[j] + d.nodes[j + 1]) / 2 : d.iv.b;

    real_t acc = 0;
    for (int k = 0; k < m; ++k) {
        if (k == j) continue;
        real_t dx = x0 - d.nodes[k];
        acc -= d.values[k] * d.quad_weights[k] * log(dx * dx + y * y) / 2;
    }

    // local linear density model across the cell
    int lo = (j > 0) ? j - 1 : j;
    int hi = (j < m - 1) ? j + 1 : j;
    real_t slope = (hi > lo)
                       ? (d.values[hi] - d.values[lo]) / (d.nodes[hi] - d.nodes[lo])
                       : real_t(0);
    const real_t tl = cl - x0, tr = cr - x0;
    real_t lin = d.values[j] + slope * (x0 - d.nodes[j]);
    real_t panel = lin * (prim_log(tr, y) - prim_log(tl, y)) +
                   slope * (prim_tlog(tr, y) - prim_tlog(tl, y));
    return acc - panel;
}

}  // namespace angelesco
