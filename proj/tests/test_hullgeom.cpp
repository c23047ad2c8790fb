#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "loopconv/hullgeom.hpp"
#include "loopconv/simplex.hpp"

using namespace loopconv;

namespace {

std::vector<Point> random_points(std::uint64_t seed, int count, int dim, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, scale);
    std::vector<Point> pts(static_cast<size_t>(count), Point(static_cast<size_t>(dim)));
    for (auto& p : pts)
        for (auto& x : p) x = g(rng);
    return pts;
}

bool has_point(const HullModel& h, const Point& p) {
    return std::any_of(h.extremes.begin(), h.extremes.end(), [&](const Point& e) {
        double d = 0.0;
        for (size_t i = 0; i < p.size(); ++i) d = std::max(d, std::abs(e[i] - p[i]));
        return d <= 1e-12;
    });
}

}  // namespace

TEST_CASE("hull2d: square with interior and edge points") {
    const HullModel h = hull2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}, {1, 0.25}});
    REQUIRE(h.extremes.size() == 4);
    for (const Point& p : std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}) CHECK(has_point(h, p));
    // Counterclockwise.
    double area = 0.0;
    for (size_t i = 0; i < 4; ++i) {
        const Point& a = h.extremes[i];
        const Point& b = h.extremes[(i + 1) % 4];
        area += a[0] * b[1] - a[1] * b[0];
    }
    CHECK(area == doctest::Approx(2.0));
    CHECK(extremes_are_irredundant(h));
}

TEST_CASE("hull2d: degenerate inputs") {
    CHECK(hull2d({{1, 2}}).extremes.size() == 1);
    CHECK(hull2d({{1, 2}, {1, 2}, {1, 2}}).extremes.size() == 1);
    const HullModel seg = hull2d({{0, 0}, {1, 1}, {2, 2}, {0.5, 0.5}});
    REQUIRE(seg.extremes.size() == 2);
    CHECK(has_point(seg, {0, 0}));
    CHECK(has_point(seg, {2, 2}));
    CHECK(contains(seg, {1.5, 1.5}, 1e-12));
    CHECK_FALSE(contains(seg, {1.5, 1.6}, 1e-3));
    CHECK(distance_to_hull(seg, {3, 3}) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(hull2d({}), DomainError);
    CHECK_THROWS_AS(hull2d({{0.0, std::numeric_limits<double>::quiet_NaN()}}), DomainError);
    CHECK_THROWS_AS(hull2d({{0.0, 1.0}, {0.0, 1.0, 2.0}}), DomainError);
}

TEST_CASE("hull2d: disk samples") {
    std::vector<Point> pts;
    for (int i = 0; i < 64; ++i) {
        const double t = 2.0 * M_PI * i / 64.0;
        pts.push_back({std::cos(t), std::sin(t)});
    }
    for (const auto& p : random_points(5, 300, 2, 0.3))
        if (std::hypot(p[0], p[1]) < 0.9) pts.push_back(p);
    const HullModel h = hull2d(pts);
    CHECK(h.extremes.size() == 64);
    CHECK(extremes_are_irredundant(h));
    CHECK(contains(h, {0.0, 0.0}, 0.0));
    // Inner radius of the 64-gon is cos(pi/64).
    CHECK(distance_to_hull(h, {2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distance_to_hull(h, {0.5, 0.0}) == 0.0);
}

TEST_CASE("hull3d: cube and tetrahedron") {
    std::vector<Point> cube;
    for (int i = 0; i < 8; ++i) cube.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    std::vector<Point> pts = cube;
    for (const auto& p : random_points(6, 100, 3, 0.1)) pts.push_back({0.5 + p[0], 0.5 + p[1], 0.5 + p[2]});
    pts.push_back({0.5, 0.5, 0.0});
    pts.push_back({1.0, 0.5, 0.5});
    const HullModel h = hull3d(pts);
    bool all_inside = true;
    for (const auto& p : pts) all_inside = all_inside && contains(h, p, 1e-9);
    CHECK(all_inside);
    CHECK(h.extremes.size() == 8);
    for (const auto& c : cube) CHECK(has_point(h, c));
    CHECK(extremes_are_irredundant(h));
    CHECK(distance_to_hull(h, {2.0, 0.5, 0.5}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(distance_to_hull(h, {2.0, 2.0, 2.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

    const HullModel t = hull3d({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0.1, 0.1, 0.1}});
    CHECK(t.extremes.size() == 4);
    // Closest point of the face x+y+z=1 to (1,1,1) is its centroid.
    CHECK(distance_to_hull(t, {1, 1, 1}) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("hull3d: coplanar and collinear fall back") {
    const HullModel plane = hull3d({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {0.5, 0.5, 1}});
    CHECK(plane.dim == 3);
    CHECK(plane.extremes.size() == 4);
    CHECK(contains(plane, {0.2, 0.7, 1.0}, 1e-12));
    CHECK(distance_to_hull(plane, {0.5, 0.5, 3.0}) == doctest::Approx(2.0).epsilon(1e-9));
    const HullModel line = hull3d({{0, 0, 0}, {1, 2, 3}, {0.5, 1, 1.5}});
    CHECK(line.extremes.size() == 2);
    CHECK(hull3d({{1, 1, 1}, {1, 1, 1}}).extremes.size() == 1);
}

TEST_CASE("contains: facet offset and tolerance") {
    const HullModel sq = hull2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const double tol = 1e-3;
    CHECK(contains(sq, {0.5, 1.0 + 0.5 * tol}, tol));
    CHECK_FALSE(contains(sq, {0.5, 1.0 + 2.0 * tol}, tol));
    // Near a corner the distance is Euclidean, not per-axis.
    CHECK_FALSE(contains(sq, {1.0 + 0.8 * tol, 1.0 + 0.8 * tol}, tol));
    CHECK(contains(sq, {1.0 + 0.6 * tol, 1.0 + 0.6 * tol}, tol));
    CHECK_THROWS_AS(contains(sq, {0.5, 0.5}, -1.0), DomainError);
    CHECK_THROWS_AS(contains(sq, {0.5}, 0.0), DomainError);
}

TEST_CASE("contains: monotone in tol and agrees with distance") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int dim = 2 + static_cast<int>(s % 2);
        const HullModel h = build_hull(dim, random_points(s, 30, dim));
        for (const auto& x : random_points(s + 100, 20, dim, 1.5)) {
            const double d = distance_to_hull(h, x);
            bool prev = false;
            for (double tol : {0.0, 0.01, 0.1, 0.5, 1.0, 4.0}) {
                const bool in = contains(h, x, tol);
                CHECK((!prev || in));
                prev = in;
                if (std::abs(d - tol) > 1e-9) CHECK(in == (d <= tol));
            }
        }
    }
}

TEST_CASE("hull: union contains parts, midpoints stay inside") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const int dim = 2 + static_cast<int>(s % 2);
        const auto a = random_points(s, 25, dim), b = random_points(s + 50, 25, dim);
        std::vector<Point> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        const HullModel ha = build_hull(dim, a), hab = build_hull(dim, ab);
        for (const auto& e : ha.extremes) CHECK(contains(hab, e, 1e-9));
        CHECK(hausdorff_directed(ha, hab) <= 1e-9);
        for (size_t i = 0; i + 1 < ha.extremes.size(); ++i) {
            Point mid(static_cast<size_t>(dim));
            for (int k = 0; k < dim; ++k)
                mid[static_cast<size_t>(k)] = 0.5 * (ha.extremes[i][static_cast<size_t>(k)] +
                                                     ha.extremes[i + 1][static_cast<size_t>(k)]);
            CHECK(contains(ha, mid, 1e-9));
        }
    }
}

TEST_CASE("hausdorff") {
    const HullModel sq = hull2d({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(hausdorff(sq, sq) == 0.0);
    const HullModel shifted = hull2d({{0.1, 0}, {1.1, 0}, {1.1, 1}, {0.1, 1}});
    CHECK(hausdorff(sq, shifted) == doctest::Approx(0.1).epsilon(1e-12));
    // Scaled square: brute force over vertices gives sqrt(2).
    const HullModel big = hull2d({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(hausdorff_directed(sq, big) == 0.0);
    CHECK(hausdorff_directed(big, sq) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(hausdorff(big, sq) == hausdorff(sq, big));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const HullModel a = hull3d(random_points(s, 20, 3)), b = hull3d(random_points(s + 7, 20, 3));
        CHECK(hausdorff(a, b) == hausdorff(b, a));
        CHECK(hausdorff(a, b) >= 0.0);
    }
    CHECK_THROWS_AS(hausdorff(sq, hull3d({{0, 0, 0}})), DomainError);
}

TEST_CASE("edge_violations matches contains") {
    const HullModel h = hull2d(random_points(3, 40, 2));
    const auto q = random_points(4, 200, 2, 1.2);
    std::vector<double> xs, ys;
    for (const auto& p : q) xs.push_back(p[0]), ys.push_back(p[1]);
    const auto v = edge_violations(h, xs, ys);
    REQUIRE(v.size() == q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (std::abs(v[i]) < 1e-9) continue;
        CHECK((v[i] <= 0.0) == contains(h, q[i], 0.0));
        if (v[i] > 0.0) CHECK(distance_to_hull(h, q[i]) >= v[i] - 1e-12);
    }
    CHECK_THROWS_AS(edge_violations(hull2d({{0, 0}, {1, 1}}), xs, ys), DomainError);
}

TEST_CASE("lp: feasibility and Wolfe distance") {
    // x + y = 1, x - y = 0.5: x = 0.75, y = 0.25.
    const auto r = lp::feasible_point(2, 2, std::vector<double>{1, 1, 1, -1}, std::vector<double>{1, 0.5});
    REQUIRE(r.feasible);
    CHECK(r.x[0] == doctest::Approx(0.75));
    CHECK(r.x[1] == doctest::Approx(0.25));
    // x = -1 has no nonnegative solution.
    CHECK_FALSE(lp::feasible_point(1, 1, std::vector<double>{1}, std::vector<double>{-1}).feasible);
    const std::vector<double> tri = {0, 0, 1, 0, 0, 1};
    CHECK(lp::convex_combination(2, tri, std::vector<double>{0.2, 0.2}).feasible);
    CHECK_FALSE(lp::convex_combination(2, tri, std::vector<double>{0.6, 0.6}).feasible);
    CHECK(lp::distance_to_hull(2, tri, std::vector<double>{1, 1}) == doctest::Approx(std::sqrt(0.5)));
}
