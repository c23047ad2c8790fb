#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "loopconv/liecore.hpp"

using namespace loopconv;

namespace {

CMatrix diag_i(std::initializer_list<double> v) {
    CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) d(i, i) = cplx(0.0, x), ++i;
    return d;
}

}  // namespace

TEST_CASE("inner: trace form values") {
    CHECK(inner(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)) == cplx(2.0));
    const CMatrix h = diag_i({1.0, -1.0});
    CHECK(inner(h, h) == cplx(2.0));
    CHECK(algebra_norm(h) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(inner(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("inner: Ad-invariance and conjugate symmetry") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const int n = 2 + static_cast<int>(s % 3);
        const CMatrix k = random_unitary(split_seed(1, 0, s), n, false);
        const CMatrix x = random_su(split_seed(1, 1, s), n);
        const CMatrix y = random_su(split_seed(1, 2, s), n);
        CHECK(std::abs(inner(k * x * k.adjoint(), k * y * k.adjoint()) - inner(x, y)) <= 1e-12);
        CHECK(std::abs(inner(x, y).imag()) <= 1e-14);
        const CMatrix a = random_gaussian(split_seed(1, 3, s), n, n);
        const CMatrix b = random_gaussian(split_seed(1, 4, s), n, n);
        CHECK(std::abs(inner(a, b) - std::conj(inner(b, a))) <= 1e-14);
    }
}

TEST_CASE("dominant_project: examples") {
    SUBCASE("already dominant gives identity conjugator") {
        const auto r = dominant_project(diag_i({1.0, -1.0}));
        CHECK(r.coords.v == std::vector<double>{1.0, -1.0});
        CHECK((r.conjugator - CMatrix::Identity(2, 2)).norm() <= 1e-15);
    }
    SUBCASE("antidominant gives the swap") {
        const auto r = dominant_project(diag_i({-1.0, 1.0}));
        CHECK(r.coords.v[0] == doctest::Approx(1.0));
        CHECK(r.coords.v[1] == doctest::Approx(-1.0));
        CMatrix swap = CMatrix::Zero(2, 2);
        swap(0, 1) = swap(1, 0) = 1.0;
        CHECK((r.conjugator - swap).norm() <= 1e-15);
    }
    SUBCASE("spectrum survives conjugation") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const CMatrix k = random_unitary(split_seed(2, 0, s), 3, false);
            const CMatrix p = k * diag_i({2.0, -1.0, -1.0}) * k.adjoint();
            const auto r = dominant_project(p);
            CHECK(r.coords.v[0] == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(r.coords.v[1] == doctest::Approx(-1.0).epsilon(1e-12));
            CHECK(r.coords.v[2] == doctest::Approx(-1.0).epsilon(1e-12));
            CMatrix rebuilt = r.conjugator * diag_i({r.coords.v[0], r.coords.v[1], r.coords.v[2]}) *
                              r.conjugator.adjoint();
            CHECK((rebuilt - p).norm() <= 1e-8);
        }
    }
    SUBCASE("rejects non-skew and traced input") {
        CHECK_THROWS_AS(dominant_project(CMatrix::Identity(2, 2)), DomainError);
        CHECK_THROWS_AS(dominant_project(diag_i({1.0, 1.0})), DomainError);
    }
}

TEST_CASE("weyl_orbit") {
    CHECK(weyl_orbit({{0.0, 0.0}}).size() == 1);
    const auto o2 = weyl_orbit({{1.0, -1.0}});
    REQUIRE(o2.size() == 2);
    CHECK(o2[0] == std::vector<double>{1.0, -1.0});
    CHECK(o2[1] == std::vector<double>{-1.0, 1.0});
    CHECK(weyl_orbit({{2.0, -1.0, -1.0}}).size() == 3);
    CHECK(weyl_orbit({{2.0, 1.0, -3.0}}).size() == 6);
}

TEST_CASE("dominance order") {
    const Coweight zero({0, 0}), one({1, -1}), two({2, -2});
    CHECK(dominance_leq(zero, one));
    CHECK(dominance_leq(one, one));
    CHECK_FALSE(dominance_leq(two, one));
    CHECK_THROWS_AS(dominance_leq(Coweight({-1, 1}), one), DomainError);
    CHECK_THROWS_AS(dominance_leq(one, Coweight({1, 0, -1})), DimensionError);

    // Partial order on all dominant SU(3) coweights of radius 3.
    const auto cw = dominant_coweights(3, 3);
    for (const auto& a : cw) {
        CHECK(dominance_leq(a, a));
        for (const auto& b : cw) {
            if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
            if (!dominance_leq(a, b)) continue;
            for (const auto& c : cw)
                if (dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
    }
}

TEST_CASE("coweights") {
    CHECK_THROWS_AS(Coweight({1, 0}), DomainError);
    const Coweight c({-2, 3, -1});
    CHECK(c.norm() == 3);
    CHECK_FALSE(c.is_dominant());
    CHECK(c.dominant() == Coweight({3, -1, -2}));
    // SU(2): (a,-a) for |a| <= 2.
    CHECK(all_coweights(2, 2).size() == 5);
    CHECK(dominant_coweights(2, 2).size() == 3);
    for (const auto& d : dominant_coweights(3, 2)) CHECK(d.is_dominant());
    for (std::uint64_t s = 0; s < 200; ++s) {
        const Coweight r = random_coweight(s, 3, 2);
        CHECK(r.norm() <= 2);
    }
}

TEST_CASE("random_unitary") {
    CHECK((random_unitary(5, 2, false) - random_unitary(5, 2, false)).norm() == 0.0);
    for (std::uint64_t s = 0; s < 50; ++s) {
        for (int n : {2, 3, 4}) {
            const CMatrix k = random_unitary(s, n, false);
            CHECK((k.adjoint() * k - CMatrix::Identity(n, n)).norm() <= 1e-12);
            CHECK(std::abs(k.determinant() - cplx(1.0)) <= 1e-10);
            const CMatrix r = random_unitary(s, n, true);
            CHECK(r.imag().cwiseAbs().maxCoeff() <= 1e-15);
            CHECK(is_special_unitary(r, 1e-12));
        }
    }
    // Haar: entries average to zero.
    cplx mean = 0.0;
    const int count = 1000;
    for (int s = 0; s < count; ++s) mean += random_unitary(split_seed(3, 0, s), 3, false).sum();
    mean /= 9.0 * count;
    CHECK(std::abs(mean) <= 0.05);
}
