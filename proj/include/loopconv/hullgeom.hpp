#pragma once

#include <vector>

#include "loopconv/core.hpp"

namespace loopconv {

using Point = std::vector<double>;

/// Extreme points of a convex polytope in R^2 or R^3. In the plane the
/// extremes are counterclockwise.
struct HullModel {
    int dim = 2;
    std::vector<Point> extremes;
    double tol = 0.0;

    /// Coordinates of all extremes, point-major.
    std::vector<double> flat() const;
};

/// Monotone chain. Throws DomainError on empty or non-finite input.
HullModel hull2d(const std::vector<Point>& points, double tol = 0.0);

/// Incremental hull; coplanar and collinear inputs fall back to the lower
/// dimensional construction embedded in R^3.
HullModel hull3d(const std::vector<Point>& points, double tol = 0.0);

/// hull2d or hull3d by dimension.
HullModel build_hull(int dim, const std::vector<Point>& points, double tol = 0.0);

/// True when no extreme is a convex combination of the others (LP check).
bool extremes_are_irredundant(const HullModel& h);

/// x within Euclidean distance tol of conv(extremes): LP feasibility first,
/// then the exact distance when the LP reports infeasible.
bool contains(const HullModel& h, const Point& x, double tol);

/// Exact for dim 2, minimum-norm point for dim 3.
double distance_to_hull(const HullModel& h, const Point& x);

/// max over extremes of a of the distance to conv(b).
double hausdorff_directed(const HullModel& a, const HullModel& b);
double hausdorff(const HullModel& a, const HullModel& b);

/// Batch planar test: max signed distance to the edge lines for each point
/// (<= 0 exactly when inside). Requires a 2D hull with at least 3 extremes.
std::vector<double> edge_violations(const HullModel& h, const std::vector<double>& xs,
                                    const std::vector<double>& ys);

}  // namespace loopconv
