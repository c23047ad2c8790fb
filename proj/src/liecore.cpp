#include "loopconv/liecore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace loopconv {

Coweight::Coweight(std::vector<int> entries) : entries_(std::move(entries)) {
    if (std::accumulate(entries_.begin(), entries_.end(), 0) != 0) {
        throw DomainError("coweight entries must sum to zero");
    }
}

int Coweight::norm() const {
    int m = 0;
    for (int e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool Coweight::is_dominant() const {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

Coweight Coweight::dominant() const {
    auto e = entries_;
    std::sort(e.begin(), e.end(), std::greater<>());
    return Coweight(std::move(e));
}

CMatrix Coweight::algebra_element() const {
    const int n = size();
    CMatrix out = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = cplx(0.0, entries_[static_cast<size_t>(i)]);
    return out;
}

cplx inner(const CMatrix& x, const CMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols()) {
        throw DimensionError("inner: operands must be square of equal shape");
    }
    cplx acc = 0.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        for (Eigen::Index i = 0; i < x.rows(); ++i) acc += std::conj(x(i, j)) * y(i, j);
    return acc * inner_scale(static_cast<int>(x.rows()));
}

double algebra_norm(const CMatrix& x) {
    return std::sqrt(std::max(0.0, inner(x, x).real()));
}

DominantProjection dominant_project(const CMatrix& p) {
    if (p.rows() != p.cols()) throw DimensionError("dominant_project: matrix not square");
    if ((p + p.adjoint()).norm() > 1e-10) {
        throw DomainError("dominant_project: input is not skew-Hermitian");
    }
    if (std::abs(p.trace()) > 1e-10) {
        throw DomainError("dominant_project: input is not traceless");
    }
    const int n = static_cast<int>(p.rows());
    const CMatrix h = (cplx(0.0, -0.5) * (p - p.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success) throw DomainError("dominant_project: eigensolver failed");

    // Eigen returns ascending eigenvalues; a stable sort on the negated values
    // keeps tie order deterministic.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    const RVector& ev = es.eigenvalues();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ev(a) > ev(b); });

    DominantProjection out;
    out.coords.v.resize(static_cast<size_t>(n));
    out.conjugator.resize(n, n);
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<size_t>(c)];
        out.coords.v[static_cast<size_t>(c)] = ev(src);
        CVector col = es.eigenvectors().col(src);
        Eigen::Index imax = 0;
        col.cwiseAbs().maxCoeff(&imax);
        const cplx phase = col(imax) / std::abs(col(imax));
        out.conjugator.col(c) = col / phase;
    }
    return out;
}

std::vector<std::vector<double>> weyl_orbit(const DeltaCoords& v) {
    std::vector<double> cur = v.v;
    std::sort(cur.begin(), cur.end(), std::greater<>());
    std::vector<std::vector<double>> out;
    do {
        out.push_back(cur);
    } while (std::prev_permutation(cur.begin(), cur.end()));
    return out;
}

bool dominance_leq(const Coweight& eta, const Coweight& lambda) {
    if (eta.size() != lambda.size()) throw DimensionError("dominance_leq: length mismatch");
    if (!eta.is_dominant() || !lambda.is_dominant()) {
        throw DomainError("dominance_leq: inputs must be dominant");
    }
    long partial = 0;
    for (int i = 0; i < eta.size(); ++i) {
        partial += lambda[i] - eta[i];
        if (partial < 0) return false;
    }
    return true;
}

namespace {

void enumerate_coweights(int n, int radius, bool dominant_only, std::vector<Coweight>& out) {
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (pos == n - 1) {
            const int last = -sum;
            if (std::abs(last) > radius) return;
            if (dominant_only && n > 1 && last > cur[static_cast<size_t>(n - 2)]) return;
            cur[static_cast<size_t>(pos)] = last;
            out.emplace_back(cur);
            return;
        }
        const int upper = (dominant_only && pos > 0) ? cur[static_cast<size_t>(pos - 1)] : radius;
        for (int e = upper; e >= -radius; --e) {
            cur[static_cast<size_t>(pos)] = e;
            rec(pos + 1, sum + e);
        }
    };
    if (n == 1) {
        out.emplace_back(std::vector<int>{0});
        return;
    }
    rec(0, 0);
}

}  // namespace

std::vector<Coweight> dominant_coweights(int n, int radius) {
    std::vector<Coweight> out;
    enumerate_coweights(n, radius, true, out);
    return out;
}

std::vector<Coweight> all_coweights(int n, int radius) {
    std::vector<Coweight> out;
    enumerate_coweights(n, radius, false, out);
    return out;
}

CMatrix random_gaussian(std::uint64_t seed, int rows, int cols) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix z(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) {
            const double re = g(rng);
            const double im = g(rng);
            z(i, j) = cplx(re, im) * M_SQRT1_2;
        }
    return z;
}

CMatrix random_unitary(std::uint64_t seed, int n, bool real_form) {
    if (n < 1) throw DomainError("random_unitary: n must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix z(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const double re = g(rng);
            const double im = real_form ? 0.0 : g(rng);
            z(i, j) = cplx(re, im);
        }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const cplx d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a == 0.0) ? cplx(1.0) : d / a;
    }
    if (real_form) {
        // Stay exactly real: only a sign flip is needed to land in SO(n).
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) q(i, j) = cplx(q(i, j).real(), 0.0);
        if (q.real().determinant() < 0.0) q.col(0) *= -1.0;
        return q;
    }
    const cplx det = q.determinant();
    const cplx root = std::polar(1.0, -std::arg(det) / n);
    return q * root;
}

Coweight random_coweight(std::uint64_t seed, int n, int max_norm) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> u(-max_norm, max_norm);
    std::vector<int> e(static_cast<size_t>(n));
    for (;;) {
        int sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            e[static_cast<size_t>(i)] = u(rng);
            sum += e[static_cast<size_t>(i)];
        }
        if (std::abs(sum) <= max_norm) {
            e[static_cast<size_t>(n - 1)] = -sum;
            return Coweight(e);
        }
    }
}

CMatrix random_su(std::uint64_t seed, int n) {
    const CMatrix z = random_gaussian(seed, n, n);
    CMatrix x = 0.5 * (z - z.adjoint());
    x -= (x.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
    return x;
}

bool is_unitary(const CMatrix& k, double tol) {
    if (k.rows() != k.cols()) return false;
    return (k.adjoint() * k - CMatrix::Identity(k.rows(), k.cols())).norm() <= tol;
}

bool is_special_unitary(const CMatrix& k, double tol) {
    return is_unitary(k, tol) && std::abs(k.determinant() - cplx(1.0)) <= tol;
}

}  // namespace loopconv
