#include "loopconv/loops.hpp"

#include <algorithm>
#include <cmath>

#include "loopconv/kernels.hpp"

namespace loopconv {

namespace {

constexpr std::uint64_t kStreamCoweight = 0x636f77;  // "cow"
constexpr std::uint64_t kStreamComplexK = 0x6b63;
constexpr std::uint64_t kStreamRealK = 0x6b72;

cplx unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

void accumulate(CMatrix& out, cplx alpha, const CMatrix& a) {
    kernels::active().caxpy(static_cast<std::size_t>(a.size()), alpha.real(), alpha.imag(),
                            reinterpret_cast<const double*>(a.data()),
                            reinterpret_cast<double*>(out.data()));
}

}  // namespace

TrigPoly::TrigPoly(int n, int m)
    : n_(n), m_(m), coeffs_(static_cast<size_t>(2 * m + 1), CMatrix::Zero(n, n)) {
    if (n < 1 || m < 0) throw DimensionError("TrigPoly: need n >= 1 and m >= 0");
}

TrigPoly::TrigPoly(int n, int m, std::vector<CMatrix> coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
    if (n < 1 || m < 0) throw DimensionError("TrigPoly: need n >= 1 and m >= 0");
    if (coeffs_.size() != static_cast<size_t>(2 * m + 1)) {
        throw DimensionError("TrigPoly: expected 2m+1 coefficients");
    }
    for (const auto& c : coeffs_) {
        if (c.rows() != n || c.cols() != n) throw DimensionError("TrigPoly: coefficient shape");
        if (!c.allFinite()) throw DomainError("TrigPoly: non-finite coefficient");
    }
}

CMatrix TrigPoly::coeff_or_zero(int k) const {
    if (k < -m_ || k > m_) return CMatrix::Zero(n_, n_);
    return coeff(k);
}

CMatrix TrigPoly::eval(double theta) const {
    CMatrix out = CMatrix::Zero(n_, n_);
    for (int k = -m_; k <= m_; ++k) accumulate(out, unit(k * theta), coeff(k));
    return out;
}

CMatrix TrigPoly::eval_derivative(double theta) const {
    CMatrix out = CMatrix::Zero(n_, n_);
    for (int k = -m_; k <= m_; ++k) {
        if (k != 0) accumulate(out, cplx(0.0, k) * unit(k * theta), coeff(k));
    }
    return out;
}

std::vector<CMatrix> TrigPoly::sample(int count) const {
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) out.push_back(eval(kTwoPi * j / count));
    return out;
}

TrigPoly TrigPoly::from_samples(std::span<const CMatrix> samples, int m) {
    const int count = static_cast<int>(samples.size());
    if (count < 2 * m + 1) throw DimensionError("from_samples: need at least 2m+1 samples");
    const int n = static_cast<int>(samples.front().rows());
    TrigPoly out(n, m);
    for (int k = -m; k <= m; ++k) {
        CMatrix& a = out.coeff(k);
        for (int j = 0; j < count; ++j) {
            // e^{-ik theta_j}; reduce k*j mod N first so the angle stays small.
            const long r = ((static_cast<long>(k) * j) % count + count) % count;
            accumulate(a, unit(-kTwoPi * static_cast<double>(r) / count),
                       samples[static_cast<size_t>(j)]);
        }
        a /= static_cast<double>(count);
    }
    return out;
}

TrigPoly TrigPoly::padded(int m) const {
    if (m < m_) throw DimensionError("padded: cannot shrink degree");
    TrigPoly out(n_, m);
    for (int k = -m_; k <= m_; ++k) out.coeff(k) = coeff(k);
    return out;
}

TrigPoly TrigPoly::conj() const {
    TrigPoly out = *this;
    for (auto& c : out.coeffs_) c = c.conjugate().eval();
    return out;
}

CMatrix TrigPoly::sum() const {
    CMatrix s = CMatrix::Zero(n_, n_);
    for (const auto& c : coeffs_) s += c;
    return s;
}

double coeff_distance(const TrigPoly& a, const TrigPoly& b) {
    if (a.n() != b.n()) throw DimensionError("coeff_distance: size mismatch");
    const int m = std::max(a.m(), b.m());
    double acc = 0.0;
    for (int k = -m; k <= m; ++k) acc += (a.coeff_or_zero(k) - b.coeff_or_zero(k)).squaredNorm();
    return std::sqrt(acc);
}

LoopPoly LoopPoly::make(TrigPoly poly) {
    LoopPoly g(std::move(poly));
    const LoopResiduals r = g.residuals();
    if (r.based > 1e-10) throw DomainError("LoopPoly: loop is not based (gamma(1) != I)");
    if (r.unitary > 1e-9) throw DomainError("LoopPoly: loop is not unitary on the circle");
    if (r.det > 1e-8) throw DomainError("LoopPoly: loop does not have unit determinant");
    return g;
}

LoopPoly LoopPoly::unchecked(TrigPoly poly) { return LoopPoly(std::move(poly)); }

LoopPoly LoopPoly::identity(int n) {
    TrigPoly p(n, 0);
    p.coeff(0) = CMatrix::Identity(n, n);
    return LoopPoly(std::move(p));
}

LoopPoly LoopPoly::coweight(const Coweight& lambda) {
    return conjugated_coweight(CMatrix::Identity(lambda.size(), lambda.size()), lambda);
}

LoopPoly LoopPoly::conjugated_coweight(const CMatrix& k, const Coweight& lambda) {
    const int n = lambda.size();
    if (k.rows() != n || k.cols() != n) throw DimensionError("conjugated_coweight: shape");
    TrigPoly p(n, lambda.norm());
    for (int i = 0; i < n; ++i) p.coeff(lambda[i]) += k.col(i) * k.col(i).adjoint();
    return LoopPoly(std::move(p));
}

LoopResiduals LoopPoly::residuals() const {
    LoopResiduals r;
    const int n = poly_.n();
    const CMatrix id = CMatrix::Identity(n, n);
    r.based = (poly_.sum() - id).norm();
    for (const CMatrix& g : poly_.sample(4 * poly_.m() + 3)) {
        r.unitary = std::max(r.unitary, (g.adjoint() * g - id).norm());
        r.det = std::max(r.det, std::abs(g.determinant() - cplx(1.0)));
    }
    return r;
}

TangentPoly TangentPoly::make(TrigPoly poly) {
    const int m = poly.m();
    for (int k = 0; k <= m; ++k) {
        if ((poly.coeff(-k) + poly.coeff(k).adjoint()).norm() > 1e-10) {
            throw DomainError("TangentPoly: reality constraint A_{-k} = -A_k^* violated");
        }
    }
    if (poly.sum().norm() > 1e-10) throw DomainError("TangentPoly: not based (sum A_k != 0)");
    return TangentPoly(std::move(poly));
}

TangentPoly TangentPoly::from_positive(int n, const std::vector<CMatrix>& positive) {
    const int m = static_cast<int>(positive.size());
    TrigPoly p(n, m);
    CMatrix a0 = CMatrix::Zero(n, n);
    for (int k = 1; k <= m; ++k) {
        const CMatrix& a = positive[static_cast<size_t>(k - 1)];
        if (a.rows() != n || a.cols() != n) throw DimensionError("from_positive: shape");
        p.coeff(k) = a;
        p.coeff(-k) = -a.adjoint();
        a0 -= a - a.adjoint();
    }
    p.coeff(0) = a0;
    return TangentPoly(std::move(p));
}

TangentPoly random_tangent(std::uint64_t seed, int n, int m) {
    std::vector<CMatrix> pos;
    for (int k = 1; k <= m; ++k) {
        CMatrix a = random_gaussian(split_seed(seed, 0x74616e, static_cast<std::uint64_t>(k)), n, n);
        a -= (a.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
        pos.push_back(a);
    }
    return TangentPoly::from_positive(n, pos);
}

TangentPoly tangent_tau(const TangentPoly& x) { return TangentPoly::make(x.poly().conj()); }

CMatrix eval(const LoopPoly& g, double theta) { return g.eval(theta); }

LoopPoly multiply(const LoopPoly& a, const LoopPoly& b) {
    if (a.n() != b.n()) throw DimensionError("multiply: loop sizes differ");
    const int m = a.m() + b.m();
    TrigPoly p(a.n(), m);
    for (int i = -a.m(); i <= a.m(); ++i)
        for (int j = -b.m(); j <= b.m(); ++j) p.coeff(i + j).noalias() += a.coeff(i) * b.coeff(j);
    return LoopPoly::unchecked(std::move(p));
}

LoopPoly inverse(const LoopPoly& g) {
    if (g.residuals().unitary > 1e-9) throw DomainError("inverse: loop is not unitary");
    const int m = g.m();
    TrigPoly p(g.n(), m);
    for (int k = -m; k <= m; ++k) p.coeff(k) = g.coeff(-k).adjoint();
    return LoopPoly::unchecked(std::move(p));
}

TrigPoly log_derivative(const LoopPoly& g) {
    const int m = g.m();
    const int count = 4 * m + 3;
    std::vector<CMatrix> vals;
    vals.reserve(static_cast<size_t>(count));
    for (int j = 0; j < count; ++j) {
        const double th = kTwoPi * j / count;
        vals.push_back(g.poly().eval(th).adjoint() * g.poly().eval_derivative(th));
    }
    return TrigPoly::from_samples(vals, 2 * m);
}

TrigPoly log_derivative_convolution(const LoopPoly& g) {
    const int m = g.m();
    TrigPoly out(g.n(), 2 * m);
    for (int i = -m; i <= m; ++i) {
        const CMatrix inv_i = g.coeff(-i).adjoint();
        for (int j = -m; j <= m; ++j) {
            if (j != 0) out.coeff(i + j).noalias() += inv_i * (cplx(0.0, j) * g.coeff(j));
        }
    }
    return out;
}

LoopPoly act(double s, const CMatrix& k, const LoopPoly& g) {
    if (k.rows() != g.n() || k.cols() != g.n()) throw DimensionError("act: k has wrong size");
    if (!is_special_unitary(k, 1e-9)) throw DomainError("act: k is not in SU(n)");
    const CMatrix right = (g.eval(s).adjoint() * k.adjoint()).eval();
    TrigPoly p(g.n(), g.m());
    for (int j = -g.m(); j <= g.m(); ++j) p.coeff(j) = unit(j * s) * (k * g.coeff(j) * right);
    return LoopPoly::unchecked(std::move(p));
}

LoopPoly tau(const LoopPoly& g) { return LoopPoly::unchecked(g.poly().conj()); }

bool LoopSample::homomorphism() const {
    return std::count_if(coweights.begin(), coweights.end(),
                         [](const Coweight& c) { return !c.is_zero(); }) <= 1;
}

LoopSample sample_loop_detailed(std::uint64_t seed, int n, int depth, int max_coweight_norm,
                                bool real_locus) {
    if (depth < 1) throw DomainError("sample_loop: depth must be at least 1");
    LoopSample out{LoopPoly::identity(n), {}, {}};
    for (int j = 0; j < depth; ++j) {
        const auto idx = static_cast<std::uint64_t>(j);
        Coweight lam = random_coweight(split_seed(seed, kStreamCoweight, idx), n, max_coweight_norm);
        CMatrix k = random_unitary(split_seed(seed, real_locus ? kStreamRealK : kStreamComplexK, idx),
                                   n, real_locus);
        const LoopPoly factor = LoopPoly::conjugated_coweight(k, lam);
        out.loop = (j == 0) ? factor : multiply(out.loop, factor);
        out.coweights.push_back(std::move(lam));
        out.conjugators.push_back(std::move(k));
    }
    return out;
}

LoopPoly sample_loop(std::uint64_t seed, int n, int depth, int max_coweight_norm,
                     bool real_locus) {
    return sample_loop_detailed(seed, n, depth, max_coweight_norm, real_locus).loop;
}

}  // namespace loopconv
