#include "loopconv/hullgeom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "loopconv/kernels.hpp"
#include "loopconv/simplex.hpp"

namespace loopconv {

namespace {

constexpr double kDistinct = 1e-12;

void check_points(const std::vector<Point>& points, int dim) {
    if (points.empty()) throw DomainError("hull: empty point set");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) throw DomainError("hull: point dimension mismatch");
        for (double c : p)
            if (!std::isfinite(c)) throw DomainError("hull: non-finite coordinate");
    }
}

std::vector<Point> dedupe(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Point> out;
    for (auto& p : pts) {
        if (!out.empty()) {
            double d2 = 0.0;
            for (size_t i = 0; i < p.size(); ++i) d2 += (p[i] - out.back()[i]) * (p[i] - out.back()[i]);
            if (std::sqrt(d2) <= kDistinct) continue;
        }
        out.push_back(std::move(p));
    }
    return out;
}

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> monotone_chain(std::vector<Point> pts) {
    pts = dedupe(std::move(pts));
    if (pts.size() <= 2) return pts;
    std::vector<Point> hull(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0.0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

// Drops extremes the LP finds inside the hull of the remaining ones.
std::vector<Point> prune_redundant(int dim, std::vector<Point> ext) {
    if (ext.size() <= 2) return ext;
    for (size_t i = 0; i < ext.size();) {
        std::vector<double> others;
        for (size_t j = 0; j < ext.size(); ++j)
            if (j != i) others.insert(others.end(), ext[j].begin(), ext[j].end());
        if (lp::convex_combination(dim, others, ext[i]).feasible) {
            ext.erase(ext.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    return ext;
}

using Vec3 = Eigen::Vector3d;

Vec3 v3(const Point& p) { return {p[0], p[1], p[2]}; }

struct Face {
    std::array<int, 3> v;
    Vec3 normal;
    double offset;
};

Face make_face(const std::vector<Vec3>& p, int a, int b, int c) {
    Face f{{a, b, c}, (p[b] - p[a]).cross(p[c] - p[a]), 0.0};
    const double len = f.normal.norm();
    if (len > 0.0) f.normal /= len;
    f.offset = f.normal.dot(p[a]);
    return f;
}

std::vector<Point> hull3d_points(const std::vector<Point>& input) {
    std::vector<Point> pts = dedupe(input);
    if (pts.size() == 1) return pts;
    std::vector<Vec3> p;
    double scale = 1.0;
    for (const auto& q : pts) {
        p.push_back(v3(q));
        scale = std::max(scale, p.back().cwiseAbs().maxCoeff());
    }
    const double degenerate = 1e-10 * scale;
    const int count = static_cast<int>(p.size());

    int i0 = 0, i1 = 0, i2 = 0, i3 = 0;
    double best = -1.0;
    for (int i = 0; i < count; ++i) {
        const double d = (p[i] - p[i0]).norm();
        if (d > best) best = d, i1 = i;
    }
    const Vec3 dir = (p[i1] - p[i0]).normalized();
    best = -1.0;
    for (int i = 0; i < count; ++i) {
        const Vec3 r = p[i] - p[i0];
        const double d = (r - r.dot(dir) * dir).norm();
        if (d > best) best = d, i2 = i;
    }
    if (best <= degenerate) {
        // Collinear: the two extreme projections on the line.
        int lo = 0, hi = 0;
        for (int i = 0; i < count; ++i) {
            const double t = (p[i] - p[i0]).dot(dir);
            if (t < (p[lo] - p[i0]).dot(dir)) lo = i;
            if (t > (p[hi] - p[i0]).dot(dir)) hi = i;
        }
        return {pts[static_cast<size_t>(lo)], pts[static_cast<size_t>(hi)]};
    }
    const Vec3 nrm = (p[i1] - p[i0]).cross(p[i2] - p[i0]).normalized();
    best = -1.0;
    for (int i = 0; i < count; ++i) {
        const double d = std::abs((p[i] - p[i0]).dot(nrm));
        if (d > best) best = d, i3 = i;
    }
    if (best <= degenerate) {
        // Coplanar: planar hull in an orthonormal frame of the plane.
        const Vec3 e1 = dir;
        const Vec3 e2 = nrm.cross(e1);
        std::vector<Point> flat;
        for (int i = 0; i < count; ++i) {
            const Vec3 r = p[i] - p[i0];
            flat.push_back({r.dot(e1), r.dot(e2), static_cast<double>(i)});
        }
        std::vector<Point> planar;
        for (const auto& f : flat) planar.push_back({f[0], f[1]});
        const std::vector<Point> ring = monotone_chain(planar);
        std::vector<Point> out;
        for (const auto& r : ring) {
            for (const auto& f : flat) {
                if (f[0] == r[0] && f[1] == r[1]) {
                    out.push_back(pts[static_cast<size_t>(f[2])]);
                    break;
                }
            }
        }
        return out;
    }

    const Vec3 centre = (p[i0] + p[i1] + p[i2] + p[i3]) / 4.0;
    std::vector<Face> faces;
    auto add_oriented = [&](int a, int b, int c) {
        Face f = make_face(p, a, b, c);
        if (f.normal.dot(centre) - f.offset > 0.0) f = make_face(p, a, c, b);
        faces.push_back(f);
    };
    add_oriented(i0, i1, i2);
    add_oriented(i0, i1, i3);
    add_oriented(i0, i2, i3);
    add_oriented(i1, i2, i3);

    const double visible_eps = 1e-12 * scale;
    for (int i = 0; i < count; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        std::set<std::pair<int, int>> edges;
        std::vector<Face> keep;
        bool any = false;
        for (const auto& f : faces) {
            if (f.normal.dot(p[i]) - f.offset > visible_eps) {
                any = true;
                for (int e = 0; e < 3; ++e) edges.insert({f.v[e], f.v[(e + 1) % 3]});
            } else {
                keep.push_back(f);
            }
        }
        if (!any) continue;
        for (const auto& [a, b] : edges) {
            if (!edges.count({b, a})) keep.push_back(make_face(p, a, b, i));
        }
        faces = std::move(keep);
    }
    std::set<int> used;
    for (const auto& f : faces) used.insert(f.v.begin(), f.v.end());
    std::vector<Point> out;
    for (int i : used) out.push_back(pts[static_cast<size_t>(i)]);
    return out;
}

double segment_distance(const Point& a, const Point& b, const Point& x) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((x[0] - a[0]) * dx + (x[1] - a[1]) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(x[0] - a[0] - t * dx, x[1] - a[1] - t * dy);
}

}  // namespace

std::vector<double> HullModel::flat() const {
    std::vector<double> out;
    out.reserve(extremes.size() * static_cast<size_t>(dim));
    for (const auto& e : extremes) out.insert(out.end(), e.begin(), e.end());
    return out;
}

HullModel hull2d(const std::vector<Point>& points, double tol) {
    check_points(points, 2);
    return {2, prune_redundant(2, monotone_chain(points)), tol};
}

HullModel hull3d(const std::vector<Point>& points, double tol) {
    check_points(points, 3);
    return {3, prune_redundant(3, hull3d_points(points)), tol};
}

HullModel build_hull(int dim, const std::vector<Point>& points, double tol) {
    if (dim == 2) return hull2d(points, tol);
    if (dim == 3) return hull3d(points, tol);
    throw DomainError("build_hull: dimension must be 2 or 3");
}

bool extremes_are_irredundant(const HullModel& h) {
    if (h.extremes.size() <= 1) return true;
    for (size_t i = 0; i < h.extremes.size(); ++i) {
        std::vector<double> others;
        for (size_t j = 0; j < h.extremes.size(); ++j)
            if (j != i) others.insert(others.end(), h.extremes[j].begin(), h.extremes[j].end());
        if (lp::convex_combination(h.dim, others, h.extremes[i]).feasible) return false;
    }
    return true;
}

double distance_to_hull(const HullModel& h, const Point& x) {
    if (static_cast<int>(x.size()) != h.dim) throw DomainError("distance_to_hull: dimension mismatch");
    if (h.extremes.empty()) throw DomainError("distance_to_hull: empty hull");
    if (h.dim == 3) return lp::distance_to_hull(3, h.flat(), x);
    const auto& e = h.extremes;
    const size_t k = e.size();
    if (k == 1) return std::hypot(x[0] - e[0][0], x[1] - e[0][1]);
    if (k == 2) return segment_distance(e[0], e[1], x);
    bool inside = true;
    for (size_t i = 0; i < k && inside; ++i) inside = cross2(e[i], e[(i + 1) % k], x) >= 0.0;
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < k; ++i) best = std::min(best, segment_distance(e[i], e[(i + 1) % k], x));
    return best;
}

bool contains(const HullModel& h, const Point& x, double tol) {
    if (static_cast<int>(x.size()) != h.dim) throw DomainError("contains: dimension mismatch");
    if (tol < 0.0) throw DomainError("contains: negative tolerance");
    if (h.extremes.empty()) return false;
    if (lp::convex_combination(h.dim, h.flat(), x).feasible) return true;
    return tol > 0.0 && distance_to_hull(h, x) <= tol;
}

double hausdorff_directed(const HullModel& a, const HullModel& b) {
    if (a.dim != b.dim) throw DomainError("hausdorff: dimension mismatch");
    double out = 0.0;
    for (const auto& e : a.extremes) out = std::max(out, distance_to_hull(b, e));
    return out;
}

double hausdorff(const HullModel& a, const HullModel& b) {
    return std::max(hausdorff_directed(a, b), hausdorff_directed(b, a));
}

std::vector<double> edge_violations(const HullModel& h, const std::vector<double>& xs,
                                    const std::vector<double>& ys) {
    if (h.dim != 2 || h.extremes.size() < 3) throw DomainError("edge_violations: need a planar polygon");
    if (xs.size() != ys.size()) throw DimensionError("edge_violations: coordinate length mismatch");
    const size_t k = h.extremes.size();
    std::vector<double> nx(k), ny(k), c(k);
    for (size_t i = 0; i < k; ++i) {
        const Point& a = h.extremes[i];
        const Point& b = h.extremes[(i + 1) % k];
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        const double len = std::hypot(ex, ey);
        nx[i] = ey / len;
        ny[i] = -ex / len;
        c[i] = nx[i] * a[0] + ny[i] * a[1];
    }
    std::vector<double> out(xs.size());
    kernels::active().halfplane_violation(k, nx.data(), ny.data(), c.data(), xs.size(), xs.data(),
                                          ys.data(), out.data());
    return out;
}

}  // namespace loopconv
