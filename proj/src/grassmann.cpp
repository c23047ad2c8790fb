#include "loopconv/grassmann.hpp"

#include <algorithm>
#include <cmath>

#include "loopconv/liecore.hpp"

namespace loopconv {

namespace {

cplx unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Matrix of Z -> -Z^* on adjoint coordinates, combined with conj(): the
// compact real form conjugation is v -> J conj(v).
CMatrix compact_conj_matrix(int n) {
    const auto eps = fiber_basis(Rep::Adjoint, n);
    const int d = static_cast<int>(eps.size());
    CMatrix j(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) j(a, b) = -inner(eps[a], eps[b].transpose().eval());
    return j;
}

CMatrix to_algebra(const std::vector<CMatrix>& eps, const CVector& v, int offset) {
    CMatrix out = CMatrix::Zero(eps[0].rows(), eps[0].rows());
    for (size_t i = 0; i < eps.size(); ++i) out += v(offset + static_cast<int>(i)) * eps[i];
    return out;
}

}  // namespace

int fiber_dim(Rep rep, int n) { return rep == Rep::Fundamental ? n : n * n - 1; }

Window Window::make(int lo, int hi, int d) {
    if (!(lo < 0 && 0 <= hi)) throw WindowError("window must satisfy lo < 0 <= hi");
    if (d < 1) throw WindowError("window fiber dimension must be positive");
    return {lo, hi, d};
}

GrassPoint GrassPoint::make(Window window, Rep rep, int n, CMatrix basis) {
    if (window.d != fiber_dim(rep, n)) throw DimensionError("GrassPoint: fiber dimension mismatch");
    if (basis.rows() != window.size()) throw DimensionError("GrassPoint: basis rows != window size");
    GrassPoint w(window, rep, n, std::move(basis));
    if (w.orthonormality_drift() > 1e-10) throw DomainError("GrassPoint: basis not orthonormal");
    return w;
}

double GrassPoint::orthonormality_drift() const {
    return (basis_.adjoint() * basis_ - CMatrix::Identity(basis_.cols(), basis_.cols())).norm();
}

std::vector<CMatrix> fiber_basis(Rep rep, int n) {
    std::vector<CMatrix> out;
    if (rep == Rep::Fundamental) {
        for (int i = 0; i < n; ++i) {
            CMatrix e = CMatrix::Zero(n, 1);
            e(i, 0) = 1.0;
            out.push_back(e);
        }
        return out;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            CMatrix e = CMatrix::Zero(n, n);
            e(a, b) = 1.0;
            out.push_back(e);
        }
    for (int k = 1; k < n; ++k) {
        CMatrix h = CMatrix::Zero(n, n);
        const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) h(i, i) = s;
        h(k, k) = -k * s;
        out.push_back(h);
    }
    return out;
}

CMatrix rho(Rep rep, const CMatrix& g) {
    if (rep == Rep::Fundamental) return g;
    const int n = static_cast<int>(g.rows());
    const auto eps = fiber_basis(rep, n);
    const CMatrix ginv = g.inverse();
    const int d = static_cast<int>(eps.size());
    CMatrix r(d, d);
    for (int b = 0; b < d; ++b) {
        const CMatrix img = g * eps[b] * ginv;
        for (int a = 0; a < d; ++a) r(a, b) = (eps[a].adjoint() * img).trace();
    }
    return r;
}

int rep_degree(Rep rep, const LoopPoly& g) { return rep == Rep::Fundamental ? g.m() : 2 * g.m(); }

TrigPoly rho_loop(Rep rep, const LoopPoly& g) {
    if (rep == Rep::Fundamental) return g.poly();
    const int n = g.n();
    const int m = g.m();
    const auto eps = fiber_basis(rep, n);
    const int d = static_cast<int>(eps.size());
    TrigPoly out(d, 2 * m);
    // Ad_gamma(z) e_b = sum_{k,l} A_k e_b (A_{-l})^* z^{k+l}
    for (int b = 0; b < d; ++b) {
        std::vector<CMatrix> img(static_cast<size_t>(4 * m + 1), CMatrix::Zero(n, n));
        for (int k = -m; k <= m; ++k) {
            const CMatrix left = g.coeff(k) * eps[b];
            for (int l = -m; l <= m; ++l)
                img[static_cast<size_t>(k + l + 2 * m)].noalias() += left * g.coeff(-l).adjoint();
        }
        for (int p = -2 * m; p <= 2 * m; ++p)
            for (int a = 0; a < d; ++a)
                out.coeff(p)(a, b) = (eps[a].adjoint() * img[static_cast<size_t>(p + 2 * m)]).trace();
    }
    return out;
}

GrassPoint embed(const LoopPoly& g, Rep rep, const Window& window) {
    const int d = fiber_dim(rep, g.n());
    if (window.d != d) throw DimensionError("embed: window fiber dimension does not match rep");
    const int deg = rep_degree(rep, g);
    if (window.lo > -deg || window.hi < deg) {
        throw WindowError("embed: window must satisfy lo <= -M and hi >= M for loop degree M = " +
                          std::to_string(deg));
    }
    const TrigPoly r = rho_loop(rep, g);
    // Columns: truncations of rho(gamma) e_i z^j for 0 <= j < hi + M. Since
    // rho(gamma) is unitary on L^2, G G^* is exactly the projector onto V.
    const int ncols = d * (window.hi + deg);
    CMatrix gen = CMatrix::Zero(window.size(), ncols);
    for (int j = 0; j < window.hi + deg; ++j)
        for (int p = -deg; p <= deg; ++p) {
            const int k = j + p;
            if (k < window.lo || k >= window.hi) continue;
            gen.block(window.index(k, 0), j * d, d, d) = r.coeff(p);
        }
    const CMatrix proj = gen * gen.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(proj);
    const RVector& ev = es.eigenvalues();
    std::vector<int> keep;
    for (int i = static_cast<int>(ev.size()) - 1; i >= 0; --i)
        if (ev(i) > 0.5) keep.push_back(i);
    if (static_cast<int>(keep.size()) != d * window.hi) {
        throw DomainError("embed: image does not have virtual dimension zero");
    }
    CMatrix basis(window.size(), static_cast<Eigen::Index>(keep.size()));
    for (size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(keep[c]);
    return GrassPoint::make(window, rep, g.n(), std::move(basis));
}

double projector_distance(const GrassPoint& a, const GrassPoint& b) {
    if (!(a.window() == b.window())) throw WindowError("projector_distance: windows differ");
    return (a.projector() - b.projector()).norm();
}

bool Gr0kReport::all_passed() const {
    return containment.passed && (!perp || perp->passed) && (!bracket || bracket->passed);
}

namespace {

double containment_residual(const GrassPoint& w) {
    const Window& win = w.window();
    const int d = win.d;
    const CMatrix& b = w.basis();
    // z * basis, dropping the top slot (it lands in z^hi H_+, which lies in W).
    CMatrix zb = CMatrix::Zero(b.rows(), b.cols());
    const int moved = d * (win.slots() - 1);
    if (moved > 0) zb.bottomRows(moved) = b.topRows(moved);
    const CMatrix resid = zb - b * (b.adjoint() * zb);
    return resid.norm();
}

double perp_residual(const GrassPoint& w) {
    const Window& win = w.window();
    const int d = win.d;
    const int lo = win.lo;
    const int hi = win.hi;
    // Common window [a, b) holding the finite parts of both zW and conj(W)^perp.
    const int a = std::min(lo, -hi) + 1;
    const int b = std::max(hi, -lo) + 1;
    const Window amb{a, b, d};
    const int size = amb.size();
    const CMatrix& basis = w.basis();
    const int dim = w.dim();

    CMatrix zv = CMatrix::Zero(size, dim);
    for (int k = lo; k < hi; ++k) zv.middleRows(amb.index(k + 1, 0), d) = basis.middleRows(win.index(k, 0), d);
    CMatrix p_zw = zv * zv.adjoint();
    for (int k = hi + 1; k < b; ++k)
        for (int i = 0; i < d; ++i) p_zw(amb.index(k, i), amb.index(k, i)) += 1.0;

    const CMatrix jmat = compact_conj_matrix(w.n());
    CMatrix vbar = CMatrix::Zero(size, dim);
    for (int k = lo; k < hi; ++k)
        vbar.middleRows(amb.index(-k, 0), d) = jmat * basis.middleRows(win.index(k, 0), d).conjugate();
    CMatrix p_wbar = vbar * vbar.adjoint();
    for (int k = a; k <= -hi; ++k)
        for (int i = 0; i < d; ++i) p_wbar(amb.index(k, i), amb.index(k, i)) += 1.0;

    const CMatrix target = CMatrix::Identity(size, size) - p_wbar;
    return (p_zw - target).norm();
}

double bracket_residual(const GrassPoint& w) {
    const Window& win = w.window();
    const int d = win.d;
    const int n = w.n();
    const auto eps = fiber_basis(Rep::Adjoint, n);
    const CMatrix& basis = w.basis();
    const int dim = w.dim();
    const int slots = win.slots();

    std::vector<std::vector<CMatrix>> mats(static_cast<size_t>(dim));
    for (int c = 0; c < dim; ++c) {
        const CVector col = basis.col(c);
        for (int s = 0; s < slots; ++s) mats[static_cast<size_t>(c)].push_back(to_algebra(eps, col, s * d));
    }
    const CMatrix proj = w.projector();
    double worst = 0.0;
    std::vector<CMatrix> prod(static_cast<size_t>(2 * slots - 1));
    for (int c1 = 0; c1 < dim; ++c1)
        for (int c2 = c1 + 1; c2 < dim; ++c2) {
            for (auto& m : prod) m = CMatrix::Zero(n, n);
            const auto& f = mats[static_cast<size_t>(c1)];
            const auto& g = mats[static_cast<size_t>(c2)];
            for (int s1 = 0; s1 < slots; ++s1)
                for (int s2 = 0; s2 < slots; ++s2)
                    prod[static_cast<size_t>(s1 + s2)] += f[static_cast<size_t>(s1)] * g[static_cast<size_t>(s2)] -
                                                          g[static_cast<size_t>(s2)] * f[static_cast<size_t>(s1)];
            // prod[q] sits at degree q + 2 lo.
            double below = 0.0;
            CVector inside = CVector::Zero(win.size());
            for (int q = 0; q < 2 * slots - 1; ++q) {
                const int deg = q + 2 * win.lo;
                if (deg >= win.hi) break;
                const CMatrix& m = prod[static_cast<size_t>(q)];
                if (deg < win.lo) {
                    below += m.squaredNorm();
                    continue;
                }
                for (int i = 0; i < d; ++i) inside(win.index(deg, i)) = (eps[static_cast<size_t>(i)].adjoint() * m).trace();
            }
            const double out = (inside - proj * inside).squaredNorm();
            worst = std::max(worst, std::sqrt(below + out));
        }
    return worst;
}

}  // namespace

Gr0kReport check_gr0k(const GrassPoint& w, Gr0kConditions which, double tol) {
    Gr0kReport rep;
    rep.containment.residual = containment_residual(w);
    rep.containment.passed = rep.containment.residual <= tol;
    if (which == Gr0kConditions::ContainmentOnly) return rep;
    if (w.rep() != Rep::Adjoint) {
        throw DomainError("check_gr0k: perpendicularity and bracket conditions need the adjoint rep");
    }
    ConditionResult perp{perp_residual(w), false};
    perp.passed = perp.residual <= tol;
    rep.perp = perp;
    ConditionResult br{bracket_residual(w), false};
    br.passed = br.residual <= tol;
    rep.bracket = br;
    return rep;
}

GrassPoint act_gr(double s, const CMatrix& k, const GrassPoint& w) {
    if (k.rows() != w.n() || k.cols() != w.n()) throw DimensionError("act_gr: k has wrong size");
    if (!is_unitary(k, 1e-9)) throw DomainError("act_gr: k is not unitary");
    const Window& win = w.window();
    const CMatrix r = rho(w.rep(), k);
    CMatrix out(w.basis().rows(), w.basis().cols());
    for (int deg = win.lo; deg < win.hi; ++deg) {
        const int row = win.index(deg, 0);
        out.middleRows(row, win.d) = unit(deg * s) * (r * w.basis().middleRows(row, win.d));
    }
    return GrassPoint::make(win, w.rep(), w.n(), std::move(out));
}

GrassPoint tau_hat(const GrassPoint& w) {
    return GrassPoint::make(w.window(), w.rep(), w.n(), w.basis().conjugate());
}

GrassPoint shift_z(const GrassPoint& w) {
    return GrassPoint::make(w.window().shifted(1), w.rep(), w.n(), w.basis());
}

GrassPoint random_grass_point(std::uint64_t seed, Rep rep, int n, const Window& window, int dim) {
    if (dim < 0 || dim > window.size()) throw DimensionError("random_grass_point: bad dimension");
    const CMatrix z = random_gaussian(seed, window.size(), dim);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(window.size(), dim);
    return GrassPoint::make(window, rep, n, std::move(q));
}

double loop_form(const TangentPoly& x, const TangentPoly& y) {
    if (x.n() != y.n()) throw DimensionError("loop_form: sizes differ");
    const int count = 2 * (x.m() + y.m()) + 3;
    cplx acc = 0.0;
    for (int j = 0; j < count; ++j) {
        const double th = kTwoPi * j / count;
        acc += inner(x.poly().eval(th), y.poly().eval_derivative(th));
    }
    return (acc / static_cast<double>(count)).real();
}

double loop_form_coefficient(const TangentPoly& x, const TangentPoly& y) {
    if (x.n() != y.n()) throw DimensionError("loop_form_coefficient: sizes differ");
    const int m = std::min(x.m(), y.m());
    cplx acc = 0.0;
    for (int k = -m; k <= m; ++k) acc += static_cast<double>(k) * inner(x.coeff(k), y.coeff(k));
    return (cplx(0.0, 1.0) * acc).real();
}

double hs_form_pullback(const TangentPoly& x, const TangentPoly& y, const Window& window) {
    if (x.n() != y.n()) throw DimensionError("hs_form_pullback: sizes differ");
    const int n = x.n();
    if (window.d != n) throw DimensionError("hs_form_pullback: window must use the fundamental fiber");
    const int m = std::max(x.m(), y.m());
    if (window.hi < m || window.lo > -m) throw WindowError("hs_form_pullback: window too small");

    // f_X(e_i z^j) = sum_{r < -j} (A_r e_i) z^{j + r}
    auto image = [&](const TangentPoly& t, int i, int j) {
        CVector v = CVector::Zero(window.size());
        for (int r = -t.m(); r < -j; ++r) v.segment(window.index(j + r, 0), n) = t.coeff(r).col(i);
        return v;
    };
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < window.hi; ++j) {
            const CVector fx = image(x, i, j);
            const CVector fy = image(y, i, j);
            acc += fx.dot(fy) - fy.dot(fx);  // dot conjugates its left operand
        }
    return (cplx(0.0, -1.0) * acc).real() * inner_scale(n);
}

long degree_sum(const GrassPoint& w) {
    const Window& win = w.window();
    const CMatrix p = w.projector();
    CMatrix off = p;
    long total = 0;
    for (int deg = win.lo; deg < win.hi; ++deg) {
        const int row = win.index(deg, 0);
        const cplx tr = p.block(row, row, win.d, win.d).trace();
        const double dim = std::round(tr.real());
        if (std::abs(tr - cplx(dim)) > 1e-8) throw DomainError("degree_sum: subspace is not rotation-fixed");
        total += static_cast<long>(deg) * static_cast<long>(dim);
        off.block(row, row, win.d, win.d).setZero();
    }
    if (off.norm() > 1e-9) throw DomainError("degree_sum: subspace is not rotation-fixed");
    return total;
}

long rotation_weight(const GrassPoint& w, const GrassPoint& reference) {
    if (w.dim() != reference.dim()) throw DomainError("rotation_weight: dimensions differ");
    return degree_sum(w) - degree_sum(reference);
}

}  // namespace loopconv
