#include "angelesco/domain.hpp"

#include <stdexcept>

namespace angelesco {

Interval::Interval(real_t lo, real_t hi) : a(std::move(lo)), b(std::move(hi)) {
    if (!(a < b)) {
        throw std::invalid_argument("Interval requires a < b");
    }
}

bool operator==(const Interval& u, const Interval& v) {
    return u.a == v.a && u.b == v.b;
}

void WeightSpec::validate() const {
    if (!(ga > -1 && gb > -1)) {
        throw std::invalid_argument("weight exponents must exceed -1");
    }
}

real_t WeightSpec::A_at(const real_t& x) const {
    real_t acc = 0;
    for (auto it = A.rbegin(); it != A.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

real_t WeightSpec::log_density(const real_t& x) const {
    real_t v = A_at(x);
    if (ga != 0) v += ga * log(x - iv.a);
    if (gb != 0) v += gb * log(iv.b - x);
    return v;
}

real_t WeightSpec::density(const real_t& x) const {
    if (x == iv.a) return ga > 0 ? real_t(0) : (ga == 0 ? exp(A_at(x)) : real_t(0));
    if (x == iv.b) return gb > 0 ? real_t(0) : (gb == 0 ? exp(A_at(x)) : real_t(0));
    return exp(log_density(x));
}

void AngelescoSystem::validate() const {
    if (weights.empty()) {
        throw std::invalid_argument("system needs at least one measure");
    }
    for (const auto& w : weights) w.validate();
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        if (!(weights[i].iv.b <= weights[i + 1].iv.a)) {
            throw std::invalid_argument("intervals must be ordered and non-overlapping");
        }
    }
}

int total_degree(const MultiIndex& n) {
    int t = 0;
    for (int k : n) t += k;
    return t;
}

void validate_multi_index(const AngelescoSystem& sys, const MultiIndex& n) {
    if (static_cast<int>(n.size()) != sys.d()) {
        throw std::invalid_argument("multi-index length must match the system");
    }
    for (int k : n) {
        if (k < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    }
}

}  // namespace angelesco
