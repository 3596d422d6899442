#pragma once

#include <vector>

#include "angelesco/precision.hpp"

namespace angelesco {

enum class Side { left, right };

// Closed interval [a, b] with a < b.
struct Interval {
    real_t a, b;

    Interval() : a(-1), b(1) {}
    Interval(real_t lo, real_t hi);

    real_t mid() const { return (a + b) / 2; }
    real_t rad() const { return (b - a) / 2; }
    real_t length() const { return b - a; }
    bool contains(const real_t& x) const { return x >= a && x <= b; }
    bool strictly_inside(const real_t& x) const { return x > a && x < b; }

    // Affine map to/from the reference interval [-1, 1].
    real_t to_ref(const real_t& x) const { return (2 * x - a - b) / (b - a); }
    real_t from_ref(const real_t& s) const { return mid() + rad() * s; }
    cplx_t to_ref(const cplx_t& z) const { return (2 * z - a - b) / (b - a); }
    cplx_t from_ref(const cplx_t& s) const { return mid() + rad() * s; }
};

bool operator==(const Interval& u, const Interval& v);

// Absolutely continuous weight on an interval with generalized-Jacobi form
//   w(x) = (x - a)^ga * (b - x)^gb * exp(A(x)),
// ga, gb > -1, A a polynomial given by its coefficients (A[k] multiplies x^k).
struct WeightSpec {
    Interval iv;
    real_t ga = 0, gb = 0;
    std::vector<real_t> A;

    void validate() const;
    real_t log_density(const real_t& x) const;  // undefined at the endpoints when g < 0
    real_t density(const real_t& x) const;
    real_t A_at(const real_t& x) const;
};

// A system of measures on pairwise disjoint intervals, ordered left to right
// (endpoints may touch but interiors must not overlap).
struct AngelescoSystem {
    std::vector<WeightSpec> weights;

    int d() const { return static_cast<int>(weights.size()); }
    const Interval& hull(int i) const { return weights[i].iv; }
    void validate() const;
};

// Multi-index of orthogonality degrees, one entry per measure.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& n);
void validate_multi_index(const AngelescoSystem& sys, const MultiIndex& n);

}  // namespace angelesco
