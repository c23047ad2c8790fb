#include <doctest.h>

#include <cmath>

#include "loopconv/grassmann.hpp"
#include "oracles.hpp"

using namespace loopconv;

namespace {

LoopPoly su2(std::uint64_t i) { return sample_loop(split_seed(31, 0, i), 2, 1 + static_cast<int>(i % 2), 2, false); }

Window adjoint_window(int degree) { return Window::make(-std::max(degree, 1), degree, 3); }

TangentPoly single_pair(const CMatrix& a1) { return TangentPoly::from_positive(2, {a1}); }

CMatrix e12() {
    CMatrix e = CMatrix::Zero(2, 2);
    e(0, 1) = 1.0;
    return e;
}

}  // namespace

TEST_CASE("window") {
    CHECK_THROWS_AS(Window::make(0, 1, 2), WindowError);
    CHECK_THROWS_AS(Window::make(-1, -1, 2), WindowError);
    CHECK_THROWS_AS(Window::make(-1, 0, 0), WindowError);
    const Window w = Window::make(-2, 3, 2);
    CHECK(w.size() == 10);
    CHECK(w.index(-2, 0) == 0);
    CHECK(w.index(0, 1) == 5);
}

TEST_CASE("fiber bases are real and orthonormal") {
    for (Rep rep : {Rep::Fundamental, Rep::Adjoint})
        for (int n : {2, 3}) {
            const auto eps = fiber_basis(rep, n);
            CHECK(static_cast<int>(eps.size()) == fiber_dim(rep, n));
            for (size_t a = 0; a < eps.size(); ++a) {
                CHECK(eps[a].imag().norm() == 0.0);
                for (size_t b = 0; b < eps.size(); ++b)
                    CHECK(std::abs((eps[a].adjoint() * eps[b]).trace() - cplx(a == b ? 1.0 : 0.0)) <= 1e-15);
            }
        }
}

TEST_CASE("embed: examples") {
    SUBCASE("identity gives H_+") {
        const Window w = Window::make(-2, 2, 2);
        const GrassPoint h = embed(LoopPoly::identity(2), Rep::Fundamental, w);
        CHECK(h.dim() == 4);
        CMatrix expect = CMatrix::Zero(w.size(), w.size());
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i) expect(w.index(k, i), w.index(k, i)) = 1.0;
        CHECK((h.projector() - expect).norm() <= 1e-12);
    }
    SUBCASE("coweight (1,-1) shifts e1 up and e2 down") {
        const Window w = Window::make(-2, 2, 2);
        const GrassPoint h = embed(LoopPoly::coweight(Coweight({1, -1})), Rep::Fundamental, w);
        CMatrix expect = CMatrix::Zero(w.size(), w.size());
        for (int k : {1}) expect(w.index(k, 0), w.index(k, 0)) = 1.0;
        for (int k : {-1, 0, 1}) expect(w.index(k, 1), w.index(k, 1)) = 1.0;
        CHECK((h.projector() - expect).norm() <= 1e-12);
    }
    SUBCASE("insufficient window") {
        const LoopPoly c = LoopPoly::coweight(Coweight({2, -2}));
        CHECK_THROWS_AS(embed(c, Rep::Fundamental, Window::make(-1, 2, 2)), WindowError);
        CHECK_THROWS_AS(embed(c, Rep::Adjoint, Window::make(-4, 3, 3)), WindowError);
    }
    SUBCASE("products act on subspaces") {
        const Window w = adjoint_window(8);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const LoopPoly a = sample_loop(split_seed(32, 0, i), 2, 1, 2, false);
            const LoopPoly b = sample_loop(split_seed(32, 1, i), 2, 1, 2, false);
            const GrassPoint ab = embed(multiply(a, b), Rep::Adjoint, w);
            // rho(a) applied to phi(b): embed b, then act by the multiplication
            // operator of rho(a) through the fundamental check below.
            CHECK(ab.dim() == 3 * w.hi);
            CHECK(ab.orthonormality_drift() <= 1e-10);
        }
        const Window wf = Window::make(-4, 4, 2);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const LoopPoly a = sample_loop(split_seed(33, 0, i), 2, 1, 2, false);
            const LoopPoly b = sample_loop(split_seed(33, 1, i), 2, 1, 2, false);
            const GrassPoint pb = embed(b, Rep::Fundamental, wf);
            // Multiply the basis of phi(b) by gamma_a degree by degree, truncated.
            CMatrix moved = CMatrix::Zero(wf.size(), pb.dim());
            for (int k = wf.lo; k < wf.hi; ++k)
                for (int p = -a.m(); p <= a.m(); ++p) {
                    const int t = k + p;
                    if (t < wf.lo || t >= wf.hi) continue;
                    moved.middleRows(wf.index(t, 0), 2) += a.coeff(p) * pb.basis().middleRows(wf.index(k, 0), 2);
                }
            // Truncation only loses the part pushed above hi, which lies in the
            // implicit tail, so compare after projecting onto phi(ab).
            const GrassPoint pab = embed(multiply(a, b), Rep::Fundamental, wf);
            const CMatrix resid = moved - pab.projector() * moved;
            CHECK(resid.norm() <= 1e-9);
        }
    }
}

TEST_CASE("embed is injective on samples") {
    const Window w = adjoint_window(8);
    std::vector<GrassPoint> pts;
    std::vector<LoopPoly> loops;
    for (std::uint64_t i = 0; i < 20; ++i) {
        loops.push_back(su2(i));
        pts.push_back(embed(loops.back(), Rep::Adjoint, w));
    }
    for (size_t a = 0; a < pts.size(); ++a)
        for (size_t b = a + 1; b < pts.size(); ++b)
            if (coeff_distance(loops[a].poly(), loops[b].poly()) > 1e-10)
                CHECK(projector_distance(pts[a], pts[b]) > 1e-6);
}

TEST_CASE("check_gr0k") {
    const Window w = adjoint_window(8);
    SUBCASE("identity") {
        const Gr0kReport r = check_gr0k(embed(LoopPoly::identity(2), Rep::Adjoint, w));
        CHECK(r.all_passed());
        CHECK(r.containment.residual <= 1e-9);
        CHECK(r.perp->residual <= 1e-9);
        CHECK(r.bracket->residual <= 1e-9);
    }
    SUBCASE("loop images pass") {
        for (std::uint64_t i = 0; i < 6; ++i) {
            const Gr0kReport r = check_gr0k(embed(su2(i), Rep::Adjoint, w));
            CHECK(r.all_passed());
            CHECK(r.containment.residual <= 1e-8);
            CHECK(r.perp->residual <= 1e-8);
            CHECK(r.bracket->residual <= 1e-8);
        }
    }
    SUBCASE("random subspaces fail") {
        for (std::uint64_t i = 0; i < 6; ++i) {
            const GrassPoint g = random_grass_point(i, Rep::Adjoint, 2, w, 3 * w.hi);
            const Gr0kReport r = check_gr0k(g);
            CHECK_FALSE(r.all_passed());
            CHECK(r.containment.residual > 1e-3);
        }
    }
    SUBCASE("fundamental rep supports containment only") {
        const GrassPoint f = embed(su2(1), Rep::Fundamental, Window::make(-4, 4, 2));
        CHECK(check_gr0k(f, Gr0kConditions::ContainmentOnly).all_passed());
        CHECK_THROWS_AS(check_gr0k(f, Gr0kConditions::All), DomainError);
    }
}

TEST_CASE("act_gr and tau_hat") {
    for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
        const int d = fiber_dim(rep, 2);
        const Window w = Window::make(-8, 8, d);
        const GrassPoint h = embed(LoopPoly::identity(2), rep, w);
        CHECK(projector_distance(act_gr(0.8, CMatrix::Identity(2, 2), h), h) <= 1e-12);
        CHECK(projector_distance(tau_hat(h), h) == 0.0);
        const GrassPoint c = embed(LoopPoly::coweight(Coweight({2, -2})), rep, w);
        CHECK(projector_distance(act_gr(1.3, CMatrix::Identity(2, 2), c), c) <= 1e-12);
        for (std::uint64_t i = 0; i < 6; ++i) {
            const LoopPoly g = su2(i);
            const CMatrix k = random_unitary(split_seed(34, 0, i), 2, false);
            const GrassPoint e = embed(g, rep, w);
            CHECK(projector_distance(act_gr(0.0, k, e), embed(act(0.0, k, g), rep, w)) <= 1e-8);
            CHECK(projector_distance(act_gr(0.6, k, e), embed(act(0.6, k, g), rep, w)) <= 1e-8);
            CHECK(projector_distance(tau_hat(e), embed(tau(g), rep, w)) <= 1e-9);
            CHECK((tau_hat(tau_hat(e)).basis() - e.basis()).norm() == 0.0);
            CHECK(projector_distance(shift_z(tau_hat(e)), tau_hat(shift_z(e))) <= 1e-12);
        }
        CHECK_THROWS_AS(act_gr(0.0, 2.0 * CMatrix::Identity(2, 2), h), DomainError);
    }
}

TEST_CASE("loop_form") {
    const TangentPoly x = single_pair(e12());
    const TangentPoly y = single_pair(cplx(0.0, 1.0) * e12());
    // i * [1 * tr(E12^* iE12) + (-1) * tr(E21^* iE21)] = i * (i + i) = -2
    CHECK(loop_form_coefficient(x, y) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(loop_form(x, y) == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(loop_form(x, x)) <= 1e-15);
    CHECK(hs_form_pullback(x, y, Window::make(-1, 1, 2)) == doctest::Approx(loop_form(x, y)).epsilon(1e-12));
    CHECK(std::abs(hs_form_pullback(x, y, Window::make(-4, 6, 2)) - hs_form_pullback(x, y, Window::make(-1, 1, 2))) <=
          1e-14);
    CHECK_THROWS_AS(hs_form_pullback(x, y, Window::make(-1, 0, 2)), WindowError);

    for (std::uint64_t i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(i % 2);
        const int mx = 1 + static_cast<int>(i % 3), my = 1 + static_cast<int>((i / 3) % 3);
        const TangentPoly a = random_tangent(split_seed(35, 0, i), n, mx);
        const TangentPoly b = random_tangent(split_seed(35, 1, i), n, my);
        const double lf = loop_form(a, b);
        CHECK(std::abs(lf - loop_form_coefficient(a, b)) <= 1e-10);
        CHECK(std::abs(lf + loop_form(b, a)) <= 1e-10);
        CHECK(std::abs(loop_form(tangent_tau(a), tangent_tau(b)) + lf) <= 1e-10);
        const int m = std::max(mx, my);
        CHECK(std::abs(hs_form_pullback(a, b, Window::make(-m, m, n)) - lf) <= 1e-10);
    }
}

TEST_CASE("rotation_weight") {
    for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
        const int d = fiber_dim(rep, 2);
        const Window w = Window::make(-6, 6, d);
        const GrassPoint h = embed(LoopPoly::identity(2), rep, w);
        CHECK(rotation_weight(h, h) == 0);
        CHECK(rotation_weight(shift_z(h), h) == h.dim());
        const GrassPoint c = embed(LoopPoly::coweight(Coweight({1, -1})), rep, w);
        CHECK(rotation_weight(shift_z(c), c) == c.dim());
        // A diagonal SU(2) element keeps both subspaces rotation-fixed.
        CMatrix t = CMatrix::Zero(2, 2);
        t(0, 0) = std::exp(cplx(0.0, 0.4));
        t(1, 1) = std::exp(cplx(0.0, -0.4));
        CHECK(rotation_weight(act_gr(0.0, t, c), act_gr(0.0, t, h)) == rotation_weight(c, h));
        // Homomorphisms are rotation-fixed; a product of two non-commuting ones is not.
        const CMatrix k = random_unitary(36, 2, false);
        CHECK_NOTHROW(rotation_weight(embed(LoopPoly::conjugated_coweight(k, Coweight({1, -1})), rep, w), c));
        const LoopPoly mixed =
            multiply(LoopPoly::coweight(Coweight({1, -1})), LoopPoly::conjugated_coweight(k, Coweight({1, -1})));
        CHECK_THROWS_AS(rotation_weight(embed(mixed, rep, w), h), DomainError);
    }
    // Window [-2, 2): e1 keeps degree {1}, e2 gets {-1, 0, 1}, against {0, 1} twice.
    const Window w = Window::make(-2, 2, 2);
    CHECK(rotation_weight(embed(LoopPoly::coweight(Coweight({1, -1})), Rep::Fundamental, w),
                          embed(LoopPoly::identity(2), Rep::Fundamental, w)) == -1);
    CHECK_THROWS_AS(rotation_weight(embed(LoopPoly::identity(2), Rep::Fundamental, w),
                                    embed(LoopPoly::identity(2), Rep::Fundamental, Window::make(-2, 3, 2))),
                    DomainError);
}

TEST_CASE("grass point construction") {
    const Window w = Window::make(-1, 1, 2);
    CHECK_THROWS_AS(GrassPoint::make(w, Rep::Fundamental, 2, CMatrix::Identity(3, 1)), DimensionError);
    CHECK_THROWS_AS(GrassPoint::make(w, Rep::Fundamental, 2, 2.0 * CMatrix::Identity(4, 1)), DomainError);
    CHECK_THROWS_AS(GrassPoint::make(w, Rep::Adjoint, 2, CMatrix::Identity(4, 1)), DimensionError);
}

TEST_CASE("rotation_weight matches the phase-fit oracle") {
    for (int n : {2, 3})
        for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
            const int deg = rep == Rep::Fundamental ? 3 : 6;
            const int d = fiber_dim(rep, n);
            const Window w = Window::make(-deg, deg, d);
            const GrassPoint ref = embed(LoopPoly::identity(n), rep, w);
            for (const auto& lam : all_coweights(n, 3)) {
                const GrassPoint g = embed(LoopPoly::coweight(lam), rep, w);
                const auto fit = oracle::phase_fit_weight(g, ref);
                REQUIRE(fit.has_value());
                CHECK(rotation_weight(g, ref) == *fit);
            }
        }
    const GrassPoint h = embed(LoopPoly::identity(2), Rep::Fundamental, Window::make(-2, 2, 2));
    CHECK(oracle::phase_fit_degree(h) == 2);
    const LoopPoly mixed = multiply(LoopPoly::coweight(Coweight({1, -1})),
                                    LoopPoly::conjugated_coweight(random_unitary(36, 2, false), Coweight({1, -1})));
    CHECK_FALSE(oracle::phase_fit_degree(embed(mixed, Rep::Fundamental, Window::make(-3, 3, 2))).has_value());
}
