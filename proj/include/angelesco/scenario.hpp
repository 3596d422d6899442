#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "angelesco/domain.hpp"

namespace angelesco {

// Run configuration: a flat `key = value` text file, '#' starts a comment,
// every key must come from the schema below, anything else is an error.
//
//   system.d              number of measures
//   system.<i>.interval   two reals "a b", hull of measure i (1-based i)
//   system.<i>.weight.ga  exponent of (x-a) in the weight          (default 0)
//   system.<i>.weight.gb  exponent of (b-x) in the weight          (default 0)
//   system.<i>.weight.A   coefficients of the analytic log factor,
//                         A[k] multiplying x^k                     (default none)
//   ray.c                 d positive reals, direction of the degree ray
//   ray.schedule          strictly increasing positive totals |n|
//   z-points              evaluation points as re im pairs
//   precision.bits        MPFR mantissa bits                       (default 256)
//   grid.n                collocation grid size                    (default 64)
//   tol                   residual tolerance, 0 = solver default   (default 0)
//
// Numeric values are re-parsed after the precision is applied, so entries
// round-trip at full working precision.
struct Scenario {
    AngelescoSystem system;
    std::vector<real_t> c;
    std::vector<int> schedule;
    std::vector<cplx_t> z_points;
    unsigned precision_bits = 256;
    int grid_n = 64;
    real_t tol{0};

    // key/value pairs in file order, echoed into report summaries
    std::vector<std::pair<std::string, std::string>> entries;

    bool has_system() const { return system.d() > 0; }
    bool has_ray() const { return !c.empty(); }

    // Multi-index with total N closest to the ray direction: floors of N*c_i
    // (c normalized), remainder to the largest fractional parts, ties to the
    // lowest component.
    MultiIndex index_for(int N) const;
};

// Command-line values that take precedence over the corresponding file keys.
struct ScenarioOverrides {
    std::optional<unsigned> precision_bits;
    std::optional<int> grid_n;
    std::optional<std::string> tol;
};

// Both throw std::runtime_error naming the offending key or line. Parsing
// sets the working precision (override > file key > default) before any
// numeric conversion.
Scenario parse_scenario(const std::string& text,
                        const ScenarioOverrides& ov = {});
Scenario load_scenario(const std::string& path,
                       const ScenarioOverrides& ov = {});

}  // namespace angelesco
