#include "loopconv/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

#include "loopconv/io.hpp"
#include "loopconv/liecore.hpp"
#include "loopconv/loops.hpp"

namespace loopconv {

namespace {

constexpr std::uint64_t kStreamSample = 0x73616d70;
constexpr std::uint64_t kStreamDepth = 0x64657074;

// Accumulates one suite: residuals must stay at or below tolerance, or, for
// separation checks, strictly above it.
class Suite {
public:
    Suite(const ExperimentConfig& cfg, std::string id, double tol, bool lower_bound = false)
        : id_(std::move(id)), tol_(cfg.tol(id_, tol)), lower_(lower_bound),
          extreme_(lower_bound ? std::numeric_limits<double>::infinity() : 0.0), stream_(stream_id(id_)),
          root_(cfg.seed) {}

    std::uint64_t seed(std::uint64_t i) const { return split_seed(root_, stream_, i); }

    void check(double r) {
        ++cases_;
        if (lower_) {
            extreme_ = std::min(extreme_, r);
            ok_ = ok_ && r > tol_;
        } else {
            extreme_ = std::max(extreme_, r);
            ok_ = ok_ && r <= tol_;
        }
    }
    void fail(const std::string& why) {
        ++cases_;
        ok_ = false;
        if (note_.empty()) note_ = why;
    }

    SuiteResult result() const {
        SuiteResult r{id_, ok_ && cases_ > 0, extreme_, tol_, cases_, note_};
        if (lower_ && r.note.empty()) r.note = "separation: min residual must exceed tolerance";
        return r;
    }

private:
    std::string id_;
    double tol_;
    bool lower_;
    double extreme_;
    std::uint64_t stream_;
    std::uint64_t root_;
    int cases_ = 0;
    bool ok_ = true;
    std::string note_;
};

// Runs a suite body, turning unexpected exceptions into a failed case.
template <class F>
SuiteResult run_suite(Suite s, F&& body) {
    try {
        body(s);
    } catch (const std::exception& e) {
        s.fail(std::string("exception: ") + e.what());
    }
    return s.result();
}

Window fitting_window(Rep rep, int n, int degree) {
    return Window::make(-std::max(degree, 1), degree, fiber_dim(rep, n));
}

double max_imag(const TrigPoly& p) {
    double out = 0.0;
    for (const auto& a : p.coeffs()) out = std::max(out, a.imag().cwiseAbs().maxCoeff());
    return out;
}

CMatrix random_diagonal_su(std::uint64_t seed, int n) {
    const CMatrix x = random_su(seed, n);
    CMatrix d = CMatrix::Zero(n, n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        d(i, i) = std::exp(cplx(0.0, x(i, i).imag()));
        total += x(i, i).imag();
    }
    // Fold the remaining determinant phase into the last entry.
    d(n - 1, n - 1) *= std::exp(cplx(0.0, -total));
    return d;
}

std::vector<double> random_chamber_point(std::uint64_t seed, int n) {
    const CMatrix g = random_gaussian(seed, n, 1);
    std::vector<double> v(static_cast<size_t>(n));
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += (v[static_cast<size_t>(i)] = 3.0 * g(i, 0).real());
    mean /= n;
    for (auto& x : v) x -= mean;
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

CMatrix diag_i(const std::vector<double>& v) {
    CMatrix d = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = cplx(0.0, v[i]);
    return d;
}

double vec_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double out = 0.0;
    for (size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
    return out;
}

// --- liecore -------------------------------------------------------------

void liecore_suites(const ExperimentConfig& cfg, std::vector<SuiteResult>& out) {
    const int n = cfg.n;
    out.push_back(run_suite(Suite(cfg, "liecore.inner.conjugate_symmetry", 1e-14), [&](Suite& s) {
        for (int i = 0; i < 100; ++i) {
            const CMatrix x = random_gaussian(s.seed(2 * i), n, n);
            const CMatrix y = random_gaussian(s.seed(2 * i + 1), n, n);
            s.check(std::abs(inner(x, y) - std::conj(inner(y, x))));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.inner.real_on_skew", 1e-14), [&](Suite& s) {
        for (int i = 0; i < 100; ++i)
            s.check(std::abs(inner(random_su(s.seed(2 * i), n), random_su(s.seed(2 * i + 1), n)).imag()));
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.inner.ad_invariance", 1e-12), [&](Suite& s) {
        for (int i = 0; i < 100; ++i) {
            const CMatrix k = random_unitary(s.seed(3 * i), n, false);
            const CMatrix x = random_su(s.seed(3 * i + 1), n);
            const CMatrix y = random_su(s.seed(3 * i + 2), n);
            s.check(std::abs(inner(k * x * k.adjoint(), k * y * k.adjoint()) - inner(x, y)));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.dominant_project.round_trip", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 100; ++i) {
            const auto v = random_chamber_point(s.seed(2 * i), n);
            const CMatrix u = random_unitary(s.seed(2 * i + 1), n, false);
            const CMatrix p = u * diag_i(v) * u.adjoint();
            const DominantProjection dp = dominant_project(p);
            s.check(vec_diff(dp.coords.v, v));
            s.check((dp.conjugator * diag_i(dp.coords.v) * dp.conjugator.adjoint() - p).norm());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.dominance.partial_order", 0.0), [&](Suite& s) {
        const auto cw = dominant_coweights(3, 3);
        int bad = 0;
        for (const auto& a : cw) {
            if (!dominance_leq(a, a)) ++bad;
            for (const auto& b : cw) {
                const bool ab = dominance_leq(a, b);
                if (ab && dominance_leq(b, a) && !(a == b)) ++bad;
                if (!ab) continue;
                for (const auto& c : cw)
                    if (dominance_leq(b, c) && !dominance_leq(a, c)) ++bad;
            }
        }
        s.check(bad);
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.weyl_orbit.unique_dominant", 0.0), [&](Suite& s) {
        for (const auto& lam : dominant_coweights(n, 3)) {
            DeltaCoords v;
            for (int e : lam.entries()) v.v.push_back(e);
            int dominant = 0;
            for (const auto& w : weyl_orbit(v)) dominant += std::is_sorted(w.rbegin(), w.rend()) ? 1 : 0;
            s.check(std::abs(dominant - 1));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "liecore.random_unitary.special_unitary", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 100; ++i) {
            const CMatrix k = random_unitary(s.seed(i), n, i % 2 == 1);
            s.check((k.adjoint() * k - CMatrix::Identity(n, n)).norm());
            s.check(std::abs(k.determinant() - cplx(1.0)));
        }
    }));
}

// --- loops ---------------------------------------------------------------

void loops_suites(const ExperimentConfig& cfg, std::vector<SuiteResult>& out) {
    const int n = cfg.n;
    const int depth = std::min(cfg.depth, 3);
    const int norm = std::min(cfg.max_coweight_norm, 2);
    auto loop = [&](const Suite& s, int i, bool real = false) {
        return sample_loop(s.seed(static_cast<std::uint64_t>(i)), n, 1 + i % depth, norm, real);
    };
    out.push_back(run_suite(Suite(cfg, "loops.closure.based", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i), h = loop(s, i + 1000);
            const CMatrix k = random_unitary(s.seed(i + 2000), n, false);
            for (const LoopPoly& r : {multiply(g, h), inverse(g), act(0.3 * i, k, g), tau(g)})
                s.check(r.residuals().based);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.closure.unitary", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i), h = loop(s, i + 1000);
            const CMatrix k = random_unitary(s.seed(i + 2000), n, false);
            for (const LoopPoly& r : {multiply(g, h), inverse(g), act(0.3 * i, k, g), tau(g)})
                s.check(r.residuals().unitary);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.closure.determinant", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i), h = loop(s, i + 1000);
            for (const LoopPoly& r : {multiply(g, h), inverse(g), tau(g)}) s.check(r.residuals().det);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.multiply.pointwise", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i), h = loop(s, i + 1000);
            const LoopPoly gh = multiply(g, h);
            for (double th : {0.1, 1.7, 4.0}) s.check((gh.eval(th) - g.eval(th) * h.eval(th)).norm());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.inverse.identity", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i);
            s.check(coeff_distance(multiply(g, inverse(g)).poly(), LoopPoly::identity(n).poly()));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.act.round_trip", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i);
            const CMatrix k = random_unitary(s.seed(i + 2000), n, false);
            const double a = 0.37 * (i + 1);
            s.check(coeff_distance(act(-a, k.adjoint(), act(a, k, g)).poly(), g.poly()));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.act.tau_compatibility", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i);
            const CMatrix k = random_unitary(s.seed(i + 2000), n, false);
            const double a = 0.37 * (i + 1);
            s.check(coeff_distance(tau(act(a, k, g)).poly(), act(-a, k.conjugate(), tau(g)).poly()));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.tau.automorphism", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i), h = loop(s, i + 1000);
            s.check(coeff_distance(tau(multiply(g, h)).poly(), multiply(tau(g), tau(h)).poly()));
            s.check(coeff_distance(tau(tau(g)).poly(), g.poly()));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.tangent.dtau_constraint", 1e-12), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const TangentPoly x = tangent_tau(random_tangent(s.seed(i), n, 1 + i % 3));
            double r = x.poly().sum().norm();
            for (int k = 0; k <= x.m(); ++k) r = std::max(r, (x.coeff(-k) + x.coeff(k).adjoint()).norm());
            s.check(r);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.log_derivative.skew", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i);
            const TrigPoly x = log_derivative(g);
            for (int j = 0; j < 7; ++j) {
                const CMatrix v = x.eval(kTwoPi * j / 7.0);
                s.check((v + v.adjoint()).norm());
            }
            s.check(coeff_distance(x, log_derivative_convolution(g)));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "loops.sample.real_locus_fixed", 1e-14), [&](Suite& s) {
        for (int i = 0; i < 30; ++i) {
            const LoopPoly g = loop(s, i, true);
            s.check(max_imag(g.poly()));
            s.check(coeff_distance(tau(g).poly(), g.poly()));
        }
    }));
}

// --- moment --------------------------------------------------------------

void moment_suites(const ExperimentConfig& cfg, std::vector<SuiteResult>& out) {
    const int n = cfg.n;
    const int depth = std::min(cfg.depth, 3);
    const int norm = std::min(cfg.max_coweight_norm, 2);
    auto sample = [&](const Suite& s, int i) {
        return sample_loop_detailed(s.seed(static_cast<std::uint64_t>(i)), n, 1 + i % depth, norm, false);
    };
    out.push_back(run_suite(Suite(cfg, "moment.value.invariants", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const MomentValue mv = moment(sample(s, i).loop);
            s.check((mv.p + mv.p.adjoint()).norm());
            s.check(std::abs(mv.p.trace()));
            s.check(std::max(0.0, -mv.energy));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.energy.lower_bound", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 200; ++i) s.check(std::max(0.0, -energy_gap(moment(sample(s, i).loop))));
    }));
    out.push_back(run_suite(Suite(cfg, "moment.energy.equality_iff_constant", 0.0), [&](Suite& s) {
        for (int i = 0; i < 200; ++i) {
            const LoopPoly g = sample(s, i).loop;
            const TrigPoly x = log_derivative(g);
            double nonconst = 0.0;
            for (int k = 1; k <= x.m(); ++k) nonconst = std::max({nonconst, x.coeff(k).norm(), x.coeff(-k).norm()});
            const bool equal = std::abs(energy_gap(moment(g))) <= 1e-8;
            s.check(equal == (nonconst <= 1e-6) ? 0.0 : 1.0);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.rotation.covariance", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const LoopPoly g = sample(s, i).loop;
            const double a = 0.41 * (i + 1);
            const MomentValue m0 = moment(g), m1 = moment(act(a, CMatrix::Identity(n, n), g));
            const CMatrix gs = g.eval(a);
            s.check(std::abs(m1.energy - m0.energy) * 100.0);  // energy held to 1e-10
            s.check((m1.p - gs * m0.p * gs.adjoint()).norm());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.k_equivariance", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const LoopPoly g = sample(s, i).loop;
            const CMatrix k = random_unitary(s.seed(i + 5000), n, false);
            s.check((moment(act(0.0, k, g)).p - k * moment(g).p * k.adjoint()).norm());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.tau.compatibility", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const LoopPoly g = sample(s, i).loop;
            const MomentValue m0 = moment(g), m1 = moment(tau(g));
            s.check(std::abs(m1.energy - m0.energy) * 10.0);  // energy held to 1e-10
            s.check((m1.p - m0.p.transpose()).norm());
            s.check(vec_diff(delta_of(m1).v.v, delta_of(m0).v.v));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.coweight.additivity", 1e-10), [&](Suite& s) {
        const auto cw = all_coweights(n, 2);
        for (size_t i = 0; i < cw.size(); i += 3)
            for (size_t j = 0; j < cw.size(); j += 5) {
                std::vector<int> sum(static_cast<size_t>(n));
                for (int e = 0; e < n; ++e) sum[static_cast<size_t>(e)] = cw[i][e] + cw[j][e];
                const MomentValue mv = moment(multiply(LoopPoly::coweight(cw[i]), LoopPoly::coweight(cw[j])));
                const MomentValue ref = coweight_moment(Coweight(sum));
                s.check(std::abs(mv.energy - ref.energy));
                s.check((mv.p - ref.p).norm());
            }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.coweight.closed_form", 1e-12), [&](Suite& s) {
        for (const auto& lam : all_coweights(n, 3)) {
            const MomentValue mv = moment(LoopPoly::coweight(lam));
            const MomentValue ref = coweight_moment(lam);
            s.check(std::abs(mv.energy - ref.energy));
            s.check((mv.p - ref.p).norm());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.delta.invariance", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const LoopPoly g = sample(s, i).loop;
            const CMatrix k = random_unitary(s.seed(i + 5000), n, false);
            const DeltaPoint a = delta(g), b = delta(act(0.23 * i, k, g));
            s.check(std::abs(a.energy - b.energy));
            s.check(vec_diff(a.v.v, b.v.v));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "moment.torus.projection", 1e-9), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const TorusMoment t = moment_torus(sample(s, i).loop);
            s.check(std::abs(std::accumulate(t.t.begin(), t.t.end(), 0.0)));
        }
    }));
}

// --- grassmann -----------------------------------------------------------

LoopPoly su2_sample(std::uint64_t seed, int i) { return sample_loop(seed, 2, 1 + i % 2, 2, false); }

void grassmann_suites(const ExperimentConfig& cfg, std::vector<SuiteResult>& out) {
    const int na = 2;  // adjoint checks run on SU(2)
    const Window wa = fitting_window(Rep::Adjoint, na, 8);
    out.push_back(run_suite(Suite(cfg, "grassmann.gr0k.loop_images", 1e-8), [&](Suite& s) {
        for (int i = 0; i < 12; ++i) {
            const Gr0kReport r = check_gr0k(embed(su2_sample(s.seed(i), i), Rep::Adjoint, wa));
            s.check(r.containment.residual);
            s.check(r.perp->residual);
            s.check(r.bracket->residual);
        }
        const Gr0kReport id = check_gr0k(embed(LoopPoly::identity(na), Rep::Adjoint, wa));
        s.check(std::max({id.containment.residual, id.perp->residual, id.bracket->residual}));
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.gr0k.random_rejected", 1e-3, true), [&](Suite& s) {
        for (int i = 0; i < 12; ++i) {
            const GrassPoint w = random_grass_point(s.seed(i), Rep::Adjoint, na, wa, wa.d * wa.hi);
            s.check(check_gr0k(w, Gr0kConditions::ContainmentOnly).containment.residual);
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.orthonormality", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 12; ++i) {
            const GrassPoint w = embed(su2_sample(s.seed(i), i), Rep::Adjoint, wa);
            const CMatrix k = random_unitary(s.seed(i + 100), na, false);
            for (const GrassPoint& v : {w, act_gr(0.3 * i, k, w), tau_hat(w), shift_z(w)})
                s.check(v.orthonormality_drift());
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.embed.injective", 1e-6, true), [&](Suite& s) {
        std::vector<GrassPoint> pts;
        std::vector<LoopPoly> loops;
        for (int i = 0; i < 30; ++i) {
            loops.push_back(su2_sample(s.seed(i), i));
            pts.push_back(embed(loops.back(), Rep::Adjoint, wa));
        }
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b) {
                // Equal loops (up to rounding) are allowed to coincide.
                if (coeff_distance(loops[a].poly(), loops[b].poly()) <= 1e-10) continue;
                s.check(projector_distance(pts[a], pts[b]));
            }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.equivariance.action", 1e-8), [&](Suite& s) {
        for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
            const int n = rep == Rep::Fundamental ? cfg.n : na;
            for (int i = 0; i < 8; ++i) {
                const LoopPoly g = sample_loop(s.seed(i), n, 1 + i % 2, 2, false);
                const Window w = fitting_window(rep, n, rep_degree(rep, g));
                const CMatrix k = random_unitary(s.seed(i + 100), n, false);
                const double a = 0.29 * (i + 1);
                s.check(projector_distance(act_gr(a, k, embed(g, rep, w)), embed(act(a, k, g), rep, w)));
            }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.equivariance.tau_hat", 1e-9), [&](Suite& s) {
        for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
            const int n = rep == Rep::Fundamental ? cfg.n : na;
            for (int i = 0; i < 8; ++i) {
                const LoopPoly g = sample_loop(s.seed(i), n, 1 + i % 2, 2, false);
                const Window w = fitting_window(rep, n, rep_degree(rep, g));
                const GrassPoint e = embed(g, rep, w);
                s.check(projector_distance(tau_hat(e), embed(tau(g), rep, w)));
                s.check(projector_distance(tau_hat(tau_hat(e)), e));
            }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.shift_tau_commute", 1e-12), [&](Suite& s) {
        for (int i = 0; i < 8; ++i) {
            const GrassPoint w = embed(su2_sample(s.seed(i), i), Rep::Adjoint, wa);
            s.check(projector_distance(shift_z(tau_hat(w)), tau_hat(shift_z(w))));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.symplectic.embedding", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 100; ++i) {
            const int n = 2 + i % 2;
            const int mx = 1 + i % 3, my = 1 + (i / 3) % 3;
            const TangentPoly x = random_tangent(s.seed(2 * i), n, mx);
            const TangentPoly y = random_tangent(s.seed(2 * i + 1), n, my);
            const int m = std::max(mx, my);
            const double lf = loop_form(x, y);
            s.check(std::abs(lf - loop_form_coefficient(x, y)));
            s.check(std::abs(lf - hs_form_pullback(x, y, Window::make(-m, m, n))));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.loop_form.antisymmetry", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const TangentPoly x = random_tangent(s.seed(2 * i), cfg.n, 1 + i % 3);
            const TangentPoly y = random_tangent(s.seed(2 * i + 1), cfg.n, 1 + (i / 3) % 3);
            s.check(std::abs(loop_form(x, y) + loop_form(y, x)));
            s.check(std::abs(loop_form(x, x)));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.loop_form.tau_anti_symplectic", 1e-10), [&](Suite& s) {
        for (int i = 0; i < 50; ++i) {
            const TangentPoly x = random_tangent(s.seed(2 * i), cfg.n, 1 + i % 3);
            const TangentPoly y = random_tangent(s.seed(2 * i + 1), cfg.n, 1 + (i / 3) % 3);
            s.check(std::abs(loop_form(tangent_tau(x), tangent_tau(y)) + loop_form(x, y)));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.weight.complex_group_trivial", 0.0), [&](Suite& s) {
        for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
            const int n = rep == Rep::Fundamental ? cfg.n : na;
            const Window w = fitting_window(rep, n, rep == Rep::Adjoint ? 4 : 2);
            const GrassPoint ref = embed(LoopPoly::identity(n), rep, w);
            int i = 0;
            for (const auto& lam : all_coweights(n, 2)) {
                const GrassPoint e = embed(LoopPoly::coweight(lam), rep, w);
                const CMatrix k = random_diagonal_su(s.seed(static_cast<std::uint64_t>(i++)), n);
                s.check(std::abs(rotation_weight(act_gr(0.0, k, e), act_gr(0.0, k, ref)) - rotation_weight(e, ref)));
            }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "grassmann.weight.uniform_shift", 0.0), [&](Suite& s) {
        for (const auto& lam : all_coweights(na, 2)) {
            const GrassPoint e = embed(LoopPoly::coweight(lam), Rep::Adjoint, wa);
            s.check(std::abs(rotation_weight(shift_z(e), e) - e.dim()));
        }
    }));
}

// --- hullgeom ------------------------------------------------------------

std::vector<Point> random_cloud(std::uint64_t seed, int dim, int count) {
    const CMatrix g = random_gaussian(seed, count, dim);
    std::vector<Point> out;
    for (int i = 0; i < count; ++i) {
        Point p;
        for (int d = 0; d < dim; ++d) p.push_back(g(i, d).real() + 0.5 * g(i, d).imag());
        out.push_back(std::move(p));
    }
    return out;
}

void hull_suites(const ExperimentConfig& cfg, std::vector<SuiteResult>& out) {
    out.push_back(run_suite(Suite(cfg, "hullgeom.extremes.irredundant", 0.0), [&](Suite& s) {
        for (int i = 0; i < 10; ++i) {
            const int dim = 2 + i % 2;
            const HullModel h = build_hull(dim, random_cloud(s.seed(i), dim, 200));
            s.check(extremes_are_irredundant(h) ? 0.0 : 1.0);
            for (size_t a = 0; a < h.extremes.size(); ++a)
                for (size_t b = a + 1; b < h.extremes.size(); ++b) {
                    double d2 = 0.0;
                    for (int c = 0; c < dim; ++c) d2 += std::pow(h.extremes[a][c] - h.extremes[b][c], 2);
                    s.check(std::sqrt(d2) > 1e-12 ? 0.0 : 1.0);
                }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "hullgeom.contains.monotone", 0.0), [&](Suite& s) {
        for (int i = 0; i < 10; ++i) {
            const int dim = 2 + i % 2;
            const HullModel h = build_hull(dim, random_cloud(s.seed(2 * i), dim, 100));
            for (const Point& x : random_cloud(s.seed(2 * i + 1), dim, 30)) {
                Point y = x;
                for (double& c : y) c *= 2.0;
                bool prev = false;
                for (double t : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0}) {
                    const bool now = contains(h, y, t);
                    s.check(prev && !now ? 1.0 : 0.0);
                    prev = now;
                }
            }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "hullgeom.union.contains_parts", 1e-12), [&](Suite& s) {
        for (int i = 0; i < 10; ++i) {
            const int dim = 2 + i % 2;
            auto a = random_cloud(s.seed(2 * i), dim, 100);
            const auto b = random_cloud(s.seed(2 * i + 1), dim, 100);
            const HullModel ha = build_hull(dim, a);
            a.insert(a.end(), b.begin(), b.end());
            s.check(hausdorff_directed(ha, build_hull(dim, a)));
        }
    }));
    out.push_back(run_suite(Suite(cfg, "hullgeom.midpoint.closure", 0.0), [&](Suite& s) {
        for (int i = 0; i < 6; ++i) {
            const int dim = 2 + i % 2;
            const HullModel h = build_hull(dim, random_cloud(s.seed(i), dim, 60));
            for (size_t a = 0; a < h.extremes.size(); ++a)
                for (size_t b = a + 1; b < h.extremes.size(); ++b) {
                    Point mid(static_cast<size_t>(dim));
                    for (int c = 0; c < dim; ++c) mid[c] = 0.5 * (h.extremes[a][c] + h.extremes[b][c]);
                    s.check(contains(h, mid, 1e-12) ? 0.0 : 1.0);
                }
        }
    }));
    out.push_back(run_suite(Suite(cfg, "hullgeom.hausdorff.symmetric", 1e-12), [&](Suite& s) {
        for (int i = 0; i < 10; ++i) {
            const int dim = 2 + i % 2;
            const HullModel a = build_hull(dim, random_cloud(s.seed(2 * i), dim, 50));
            const HullModel b = build_hull(dim, random_cloud(s.seed(2 * i + 1), dim, 50));
            s.check(std::abs(hausdorff(a, b) - hausdorff(b, a)));
            s.check(hausdorff(a, a));
        }
    }));
}

}  // namespace

void ExperimentConfig::validate() const {
    if (samples < 1) throw DomainError("samples must be at least 1");
    if (!(e_cut > 0.0)) throw DomainError("e_cut must be positive");
    if (n < 2 || n > 4) throw DomainError("n must be between 2 and 4");
    if (depth < 1) throw DomainError("depth must be at least 1");
    if (max_coweight_norm < 1) throw DomainError("max_coweight_norm must be at least 1");
}

double ExperimentConfig::tol(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, std::max(count, 1));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < count; i += threads) body(i);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::uint64_t stream_id(const std::string& name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t sample_seed(const ExperimentConfig& cfg, std::uint64_t index) {
    return split_seed(cfg.seed, kStreamSample, index);
}

int sample_depth(const ExperimentConfig& cfg, std::uint64_t index) {
    return 1 + static_cast<int>(split_seed(cfg.seed, kStreamDepth, index) % static_cast<std::uint64_t>(cfg.depth));
}

std::vector<SampledPoint> sample_points(const ExperimentConfig& cfg, bool real_locus) {
    cfg.validate();
    std::vector<SampledPoint> out;
    out.reserve(static_cast<size_t>(cfg.samples));
    std::uint64_t next = 0;
    while (static_cast<int>(out.size()) < cfg.samples) {
        const int batch = std::max(64, 2 * (cfg.samples - static_cast<int>(out.size())));
        std::vector<SampledPoint> buf(static_cast<size_t>(batch));
        parallel_for(batch, cfg.threads, [&](int j) {
            const std::uint64_t idx = next + static_cast<std::uint64_t>(j);
            const int depth = sample_depth(cfg, idx);
            const LoopSample ls =
                sample_loop_detailed(sample_seed(cfg, idx), cfg.n, depth, cfg.max_coweight_norm, real_locus);
            SampledPoint& sp = buf[static_cast<size_t>(j)];
            sp.index = idx;
            sp.depth = depth;
            sp.homomorphism = ls.homomorphism();
            sp.moment = moment(ls.loop);
            sp.delta = delta_of(sp.moment);
            sp.torus = {sp.moment.energy, {}};
            for (int i = 0; i < cfg.n; ++i) sp.torus.t.push_back(sp.moment.p(i, i).imag());
        });
        for (auto& sp : buf) {
            if (static_cast<int>(out.size()) == cfg.samples) break;
            if (sp.moment.energy <= cfg.e_cut) out.push_back(std::move(sp));
        }
        next += static_cast<std::uint64_t>(batch);
    }
    return out;
}

Point hull_coords(const DeltaPoint& p) {
    Point out{p.energy};
    out.insert(out.end(), p.v.v.begin(), p.v.v.end() - 1);
    return out;
}

Point torus_hull_coords(const TorusMoment& t) {
    Point out{t.energy};
    out.insert(out.end(), t.t.begin(), t.t.end() - 1);
    return out;
}

std::vector<DeltaPoint> coweight_vertices(int n, int radius) {
    std::vector<DeltaPoint> out;
    for (const auto& lam : dominant_coweights(n, radius)) {
        const MomentValue mv = coweight_moment(lam);
        DeltaPoint p{mv.energy, {}};
        for (int e : lam.entries()) p.v.v.push_back(e);
        out.push_back(std::move(p));
    }
    return out;
}

DuistermaatResult duistermaat(const ExperimentConfig& cfg) {
    if (cfg.n != 2 && cfg.n != 3) throw DomainError("duistermaat: n must be 2 or 3");
    const auto full = sample_points(cfg, false);
    const auto real = sample_points(cfg, true);
    std::vector<Point> pf, pr, tf, tr;
    for (const auto& s : full) {
        pf.push_back(hull_coords(s.delta));
        tf.push_back(torus_hull_coords(s.torus));
    }
    for (const auto& s : real) {
        pr.push_back(hull_coords(s.delta));
        tr.push_back(torus_hull_coords(s.torus));
    }
    DuistermaatResult r;
    r.samples = cfg.samples;
    const int dim = cfg.n;
    r.full = build_hull(dim, pf);
    r.real = build_hull(dim, pr);
    r.hausdorff = hausdorff(r.full, r.real);
    r.torus_full = build_hull(dim, tf);
    r.torus_real = build_hull(dim, tr);
    r.torus_hausdorff = hausdorff(r.torus_full, r.torus_real);
    return r;
}

bool VerifyReport::all_passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

std::string VerifyReport::format() const {
    std::string out;
    int failed = 0;
    for (const auto& s : suites) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-44s cases=%-5d residual=%-12.4g tol=%.3g", s.passed ? "PASS" : "FAIL",
                      s.id.c_str(), s.cases, s.max_residual, s.tolerance);
        out += line;
        if (!s.note.empty()) out += "  (" + s.note + ")";
        out += '\n';
        failed += s.passed ? 0 : 1;
    }
    out += std::to_string(suites.size() - static_cast<size_t>(failed)) + "/" + std::to_string(suites.size()) +
           " suites passed\n";
    return out;
}

VerifyReport run_verify(const ExperimentConfig& cfg) {
    cfg.validate();
    VerifyReport r;
    liecore_suites(cfg, r.suites);
    loops_suites(cfg, r.suites);
    moment_suites(cfg, r.suites);
    grassmann_suites(cfg, r.suites);
    hull_suites(cfg, r.suites);
    return r;
}

VerifyReport run_grassmann_suites(const ExperimentConfig& cfg) {
    cfg.validate();
    VerifyReport r;
    grassmann_suites(cfg, r.suites);
    return r;
}

std::vector<WeightRow> weight_table(int n, int radius) {
    std::vector<WeightRow> out;
    for (Rep rep : {Rep::Fundamental, Rep::Adjoint}) {
        const int deg = rep == Rep::Fundamental ? radius : 2 * radius;
        const Window w = fitting_window(rep, n, deg);
        const GrassPoint ref = embed(LoopPoly::identity(n), rep, w);
        for (const auto& lam : dominant_coweights(n, radius)) {
            out.push_back({lam, rep, rotation_weight(embed(LoopPoly::coweight(lam), rep, w), ref),
                           coweight_moment(lam).energy});
        }
    }
    return out;
}

}  // namespace loopconv
