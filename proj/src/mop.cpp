#include "angelesco/mop.hpp"

#include <algorithm>
#include <stdexcept>

#include "angelesco/linalg.hpp"
#include "angelesco/quadrature.hpp"

namespace angelesco {

MomentTable::MomentTable(AngelescoSystem sys) : sys_(std::move(sys)) {
    sys_.validate();
    order_ = 32;
    m_.resize(sys_.d());
}

const std::vector<real_t>& MomentTable::moments(int i, int count) {
    std::vector<real_t>& mi = m_[i];
    if (static_cast<int>(mi.size()) >= count) return mi;
    // Rebuild from scratch at an order comfortably above the requested moment
    // range (a rule of q points integrates monomials up to degree 2q-1
    // exactly; the analytic factor needs headroom on top).
    if (order_ < 2 * count) order_ = 2 * count;
    QuadRule r = weight_rule(sys_.weights[i], order_);
    mi.assign(count, real_t(0));
    for (int q = 0; q < r.n(); ++q) {
        real_t pw = r.w[q];
        for (int t = 0; t < count; ++t) {
            mi[t] += pw;
            pw *= r.x[q];
        }
    }
    return mi;
}

void MomentTable::escalate() {
    order_ *= 2;
    std::vector<size_t> counts;
    for (auto& mi : m_) {
        counts.push_back(mi.size());
        mi.clear();
    }
    for (int i = 0; i < sys_.d(); ++i) {
        if (counts[i]) moments(i, static_cast<int>(counts[i]));
    }
}

namespace {

// Direct re-evaluation of the orthogonality integrals at an independent
// order: max_{i,k} |int x^k P dmu_i| and the root-sum-square norm.
void mop_residual(const MonicPoly& P, const AngelescoSystem& sys,
                  const MultiIndex& n, int order, real_t& res_max,
                  real_t& norm) {
    res_max = 0;
    real_t nrm2 = 0;
    for (int i = 0; i < sys.d(); ++i) {
        if (n[i] == 0) continue;
        QuadRule r = weight_rule(sys.weights[i], order);
        std::vector<real_t> resid(n[i], real_t(0));
        for (int q = 0; q < r.n(); ++q) {
            const real_t pv = P.eval(r.x[q]);
            nrm2 += r.w[q] * pv * pv;
            real_t pw = r.w[q] * pv;
            for (int k = 0; k < n[i]; ++k) {
                resid[k] += pw;
                pw *= r.x[q];
            }
        }
        for (const real_t& rk : resid) res_max = std::max(res_max, fabs(rk));
    }
    norm = sqrt(fabs(nrm2));
}

}  // namespace

MonicPoly solve_mop(MomentTable& table, const MultiIndex& n) {
    const AngelescoSystem& sys = table.system();
    validate_multi_index(sys, n);
    const int N = total_degree(n);
    if (N == 0) return MonicPoly({real_t(1)});

    const real_t target = default_residual_tol();
    real_t last_res = 0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<std::vector<real_t>> A(N, std::vector<real_t>(N));
        std::vector<real_t> b(N);
        int row = 0;
        for (int i = 0; i < sys.d(); ++i) {
            if (n[i] == 0) continue;
            const std::vector<real_t>& m = table.moments(i, n[i] + N);
            for (int k = 0; k < n[i]; ++k, ++row) {
                for (int j = 0; j < N; ++j) A[row][j] = m[k + j];
                b[row] = -m[k + N];
            }
        }
        RealSolveResult sol = solve_dense(A, b);
        MonicPoly P(std::move(sol.x));
        P.coeffs.push_back(real_t(1));

        real_t res_max, nrm;
        mop_residual(P, sys, n, 2 * std::max(table.order(), 2 * N), res_max, nrm);
        last_res = res_max / nrm;
        if (last_res < target) {
            P.solve_residual = last_res;
            return P;
        }
        table.escalate();
    }
    throw PrecisionError(
        "solve_mop: residual " + to_string_full(last_res) +
        " above target after order escalation; increase mantissa_bits");
}

MonicPoly solve_mop(const AngelescoSystem& sys, const MultiIndex& n) {
    MomentTable table(sys);
    return solve_mop(table, n);
}

MopFactorization split_factors(const MonicPoly& P, const AngelescoSystem& sys,
                               const MultiIndex& n) {
    validate_multi_index(sys, n);
    if (P.degree() != total_degree(n)) {
        throw std::invalid_argument("split_factors: degree does not match |n|");
    }
    const real_t collar =
        ldexp(real_t(1), -static_cast<int>(working_precision_bits() / 4));

    MopFactorization out;
    out.full = P;
    int found = 0;
    for (int i = 0; i < sys.d(); ++i) {
        const Interval& hull = sys.hull(i);
        const real_t pad_a = collar * (1 + fabs(hull.a));
        const real_t pad_b = collar * (1 + fabs(hull.b));
        Interval widened(hull.a - pad_a, hull.b + pad_b);
        std::vector<real_t> z = zeros_in_interval(P, widened);
        // Zeros in the collar of a shared endpoint would be claimed twice;
        // keep only those on this hull's side (ties cannot occur for simple
        // zeros at working precision).
        if (i > 0 && sys.hull(i - 1).b == hull.a) {
            std::erase_if(z, [&](const real_t& x) { return x < hull.a; });
        }
        if (i + 1 < sys.d() && sys.hull(i + 1).a == hull.b) {
            std::erase_if(z, [&](const real_t& x) { return x > hull.b; });
        }
        if (static_cast<int>(z.size()) != n[i]) {
            throw std::runtime_error(
                "split_factors: interval " + std::to_string(i) + " holds " +
                std::to_string(z.size()) + " zeros, expected " +
                std::to_string(n[i]) + " (numerical failure)");
        }
        found += static_cast<int>(z.size());
        out.factors.push_back(poly_from_zeros(z));
        out.zeros.push_back(std::move(z));
    }
    if (found != P.degree()) {
        throw std::runtime_error("split_factors: zeros outside every interval");
    }
    return out;
}

real_t DiscreteMeasure::cdf(const real_t& x) const {
    const auto it = std::upper_bound(atoms.begin(), atoms.end(), x);
    return real_t(static_cast<int>(it - atoms.begin())) /
           static_cast<int>(atoms.size());
}

DiscreteMeasure counting_measure(const std::vector<real_t>& zeros) {
    DiscreteMeasure m;
    m.atoms = zeros;
    std::sort(m.atoms.begin(), m.atoms.end());
    if (m.atoms.empty()) {
        throw std::invalid_argument("counting_measure: empty zero set");
    }
    return m;
}

DiscreteMeasure counting_measure(const MonicPoly& factor, const Interval& iv) {
    return counting_measure(poly_zeros(factor, iv));
}

real_t kolmogorov_distance(const DiscreteMeasure& m,
                           const std::function<real_t(const real_t&)>& cdf) {
    const int n = static_cast<int>(m.atoms.size());
    real_t dist = 0;
    for (int k = 0; k < n; ++k) {
        const real_t F = cdf(m.atoms[k]);
        dist = std::max(dist, fabs(F - real_t(k) / n));
        dist = std::max(dist, fabs(F - real_t(k + 1) / n));
    }
    return dist;
}

}  // namespace angelesco
