#include "loopconv/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace loopconv::lp {

FeasibilityResult feasible_point(int rows, int cols, std::span<const double> a,
                                 std::span<const double> b, double feas_tol) {
    if (static_cast<int>(a.size()) != rows * cols || static_cast<int>(b.size()) != rows) {
        throw DimensionError("feasible_point: shape mismatch");
    }
    // Tableau: rows x (cols + rows artificials + rhs), plus the reduced-cost row.
    const int width = cols + rows + 1;
    const int rhs = cols + rows;
    std::vector<double> t(static_cast<size_t>((rows + 1) * width), 0.0);
    auto at = [&](int r, int c) -> double& { return t[static_cast<size_t>(r * width + c)]; };
    std::vector<int> basis(static_cast<size_t>(rows));
    double scale = 1.0;
    for (int r = 0; r < rows; ++r) {
        const double sgn = b[static_cast<size_t>(r)] < 0.0 ? -1.0 : 1.0;
        for (int c = 0; c < cols; ++c) {
            at(r, c) = sgn * a[static_cast<size_t>(r * cols + c)];
            scale = std::max(scale, std::abs(at(r, c)));
        }
        at(r, cols + r) = 1.0;
        at(r, rhs) = sgn * b[static_cast<size_t>(r)];
        basis[static_cast<size_t>(r)] = cols + r;
    }
    for (int c = 0; c < cols; ++c) {
        double s = 0.0;
        for (int r = 0; r < rows; ++r) s += at(r, c);
        at(rows, c) = -s;
    }
    double w = 0.0;
    for (int r = 0; r < rows; ++r) w += at(r, rhs);
    at(rows, rhs) = -w;

    const double eps = 1e-12 * scale;
    FeasibilityResult res;
    const int max_pivots = 50 * (rows + cols) + 100;
    for (; res.pivots < max_pivots; ++res.pivots) {
        int enter = -1;
        for (int c = 0; c < cols + rows; ++c) {
            if (at(rows, c) < -eps) {
                enter = c;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < rows; ++r) {
            const double piv = at(r, enter);
            if (piv <= eps) continue;
            const double ratio = at(r, rhs) / piv;
            if (ratio < best || (ratio == best && basis[static_cast<size_t>(r)] < basis[static_cast<size_t>(leave)])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) break;  // unbounded direction; cannot happen in phase 1
        const double piv = at(leave, enter);
        for (int c = 0; c < width; ++c) at(leave, c) /= piv;
        for (int r = 0; r <= rows; ++r) {
            if (r == leave) continue;
            const double f = at(r, enter);
            if (f == 0.0) continue;
            for (int c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
        }
        basis[static_cast<size_t>(leave)] = enter;
    }
    res.infeasibility = std::max(0.0, -at(rows, rhs));
    res.feasible = res.infeasibility <= feas_tol;
    res.x.assign(static_cast<size_t>(cols), 0.0);
    for (int r = 0; r < rows; ++r) {
        const int c = basis[static_cast<size_t>(r)];
        if (c < cols) res.x[static_cast<size_t>(c)] = std::max(0.0, at(r, rhs));
    }
    return res;
}

FeasibilityResult convex_combination(int dim, std::span<const double> points,
                                     std::span<const double> x, double feas_tol) {
    const int count = static_cast<int>(points.size()) / dim;
    const int rows = dim + 1;
    std::vector<double> a(static_cast<size_t>(rows * count));
    std::vector<double> b(static_cast<size_t>(rows));
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < count; ++c) a[static_cast<size_t>(r * count + c)] = points[static_cast<size_t>(c * dim + r)];
        b[static_cast<size_t>(r)] = x[static_cast<size_t>(r)];
    }
    for (int c = 0; c < count; ++c) a[static_cast<size_t>(dim * count + c)] = 1.0;
    b[static_cast<size_t>(dim)] = 1.0;
    return feasible_point(rows, count, a, b, feas_tol);
}

double distance_to_hull(int dim, std::span<const double> points, std::span<const double> x) {
    const int count = static_cast<int>(points.size()) / dim;
    if (count == 0) throw DomainError("distance_to_hull: empty point set");
    std::vector<RVector> q;
    q.reserve(static_cast<size_t>(count));
    double scale = 0.0;
    for (int i = 0; i < count; ++i) {
        RVector v(dim);
        for (int r = 0; r < dim; ++r) v(r) = points[static_cast<size_t>(i * dim + r)] - x[static_cast<size_t>(r)];
        scale = std::max(scale, v.squaredNorm());
        q.push_back(std::move(v));
    }
    const double tol = 1e-14 * std::max(scale, 1e-300);

    std::vector<int> active;
    std::vector<double> weight;
    int start = 0;
    for (int i = 1; i < count; ++i)
        if (q[static_cast<size_t>(i)].squaredNorm() < q[static_cast<size_t>(start)].squaredNorm()) start = i;
    active.push_back(start);
    weight.push_back(1.0);
    RVector cur = q[static_cast<size_t>(start)];

    for (int major = 0; major < 10 * count + 100; ++major) {
        int best = -1;
        double best_dot = cur.squaredNorm();
        for (int i = 0; i < count; ++i) {
            const double dt = cur.dot(q[static_cast<size_t>(i)]);
            if (dt < best_dot - tol) {
                best_dot = dt;
                best = i;
            }
        }
        if (best < 0 || std::find(active.begin(), active.end(), best) != active.end()) break;
        active.push_back(best);
        weight.push_back(0.0);

        for (int minor = 0; minor < 100; ++minor) {
            const int s = static_cast<int>(active.size());
            Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < s; ++j)
                    kkt(i, j) = q[static_cast<size_t>(active[static_cast<size_t>(i)])].dot(
                        q[static_cast<size_t>(active[static_cast<size_t>(j)])]);
                kkt(i, s) = 1.0;
                kkt(s, i) = 1.0;
            }
            RVector rhs = RVector::Zero(s + 1);
            rhs(s) = 1.0;
            const RVector sol = kkt.fullPivLu().solve(rhs);
            bool interior = true;
            for (int i = 0; i < s; ++i) interior = interior && sol(i) > 1e-14;
            if (interior) {
                for (int i = 0; i < s; ++i) weight[static_cast<size_t>(i)] = sol(i);
                break;
            }
            double theta = 1.0;
            for (int i = 0; i < s; ++i) {
                const double wi = weight[static_cast<size_t>(i)];
                if (sol(i) <= 1e-14 && wi - sol(i) > 0.0) theta = std::min(theta, wi / (wi - sol(i)));
            }
            for (int i = 0; i < s; ++i) {
                weight[static_cast<size_t>(i)] = theta * sol(i) + (1.0 - theta) * weight[static_cast<size_t>(i)];
            }
            std::vector<int> na;
            std::vector<double> nw;
            for (int i = 0; i < s; ++i) {
                if (weight[static_cast<size_t>(i)] > 1e-14) {
                    na.push_back(active[static_cast<size_t>(i)]);
                    nw.push_back(weight[static_cast<size_t>(i)]);
                }
            }
            if (na.empty()) {
                na.push_back(active.back());
                nw.push_back(1.0);
            }
            active = std::move(na);
            weight = std::move(nw);
        }
        double total = 0.0;
        for (double wv : weight) total += wv;
        cur = RVector::Zero(dim);
        for (size_t i = 0; i < active.size(); ++i) cur += (weight[i] / total) * q[static_cast<size_t>(active[i])];
    }
    return cur.norm();
}

}  // namespace loopconv::lp
