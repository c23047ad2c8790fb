#pragma once

#include <span>
#include <vector>

#include "loopconv/core.hpp"

namespace loopconv::lp {

struct FeasibilityResult {
    bool feasible = false;
    double infeasibility = 0.0;  // optimal phase-1 objective (sum of artificials)
    std::vector<double> x;       // a feasible point when feasible
    int pivots = 0;
};

/// Phase-1 dense tableau simplex for {x >= 0 : A x = b}, Bland's rule.
/// `a` is row-major with `rows` x `cols` entries.
FeasibilityResult feasible_point(int rows, int cols, std::span<const double> a,
                                 std::span<const double> b, double feas_tol = 1e-9);

/// Is x a convex combination of the points? Points are stored contiguously,
/// `dim` coordinates each.
FeasibilityResult convex_combination(int dim, std::span<const double> points,
                                     std::span<const double> x, double feas_tol = 1e-9);

/// Euclidean distance from x to conv(points) by Wolfe's minimum-norm-point
/// active-set method.
double distance_to_hull(int dim, std::span<const double> points, std::span<const double> x);

}  // namespace loopconv::lp
