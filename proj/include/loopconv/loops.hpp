#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loopconv/core.hpp"
#include "loopconv/liecore.hpp"

namespace loopconv {

/// Matrix-valued trigonometric polynomial sum_{k=-m}^{m} A_k e^{ik theta}
/// with n x n complex coefficients. No invariants beyond shape.
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(int n, int m);  // all coefficients zero
    /// coeffs[k + m] holds A_k; throws DimensionError on bad sizes.
    TrigPoly(int n, int m, std::vector<CMatrix> coeffs);

    int n() const { return n_; }
    int m() const { return m_; }
    const CMatrix& coeff(int k) const { return coeffs_[static_cast<size_t>(k + m_)]; }
    CMatrix& coeff(int k) { return coeffs_[static_cast<size_t>(k + m_)]; }
    /// A_k, or zero when |k| > m.
    CMatrix coeff_or_zero(int k) const;
    const std::vector<CMatrix>& coeffs() const { return coeffs_; }

    CMatrix eval(double theta) const;
    /// d/dtheta of eval.
    CMatrix eval_derivative(double theta) const;
    /// Values at theta_j = 2 pi j / count.
    std::vector<CMatrix> sample(int count) const;
    /// Exact discrete Fourier inversion of samples at theta_j = 2 pi j / N,
    /// keeping degrees |k| <= m. Requires N >= 2m + 1.
    static TrigPoly from_samples(std::span<const CMatrix> samples, int m);

    TrigPoly padded(int m) const;
    TrigPoly conj() const;
    /// Sum of coefficients; the value at theta = 0.
    CMatrix sum() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<CMatrix> coeffs_;
};

/// sqrt(sum_k ||A_k - B_k||_F^2), zero-padding the lower degree.
double coeff_distance(const TrigPoly& a, const TrigPoly& b);

struct LoopResiduals {
    double based = 0.0;    // ||sum_k A_k - I||_F
    double unitary = 0.0;  // max over samples ||g^* g - I||_F
    double det = 0.0;      // max over samples |det g - 1|
};

/// Based algebraic loop in SU(n): gamma(z) = sum_{k=-m}^{m} A_k z^k with
/// gamma(1) = I, unitary with unit determinant on |z| = 1.
class LoopPoly {
public:
    /// Validates the invariants (1e-10 based, 1e-9 unitary at 4m+3 points,
    /// 1e-8 determinant). Throws DomainError otherwise.
    static LoopPoly make(TrigPoly poly);
    /// Trusts the caller; used for results of group operations on valid loops.
    static LoopPoly unchecked(TrigPoly poly);

    static LoopPoly identity(int n);
    /// theta -> exp(theta * i diag(lambda)), Fourier support at the entries.
    static LoopPoly coweight(const Coweight& lambda);
    /// k * lambda(theta) * k^{-1}.
    static LoopPoly conjugated_coweight(const CMatrix& k, const Coweight& lambda);

    int n() const { return poly_.n(); }
    int m() const { return poly_.m(); }
    const TrigPoly& poly() const { return poly_; }
    const CMatrix& coeff(int k) const { return poly_.coeff(k); }
    CMatrix eval(double theta) const { return poly_.eval(theta); }

    LoopResiduals residuals() const;

private:
    explicit LoopPoly(TrigPoly p) : poly_(std::move(p)) {}
    TrigPoly poly_;
};

/// Tangent vector at the identity of the based loop group: pointwise
/// skew-Hermitian (A_{-k} = -A_k^*) and based (sum_k A_k = 0).
class TangentPoly {
public:
    /// Throws DomainError if either constraint fails by more than 1e-10.
    static TangentPoly make(TrigPoly poly);
    /// Builds from A_1..A_m (positive[k-1] = A_k); A_{-k} and A_0 are forced
    /// by the constraints.
    static TangentPoly from_positive(int n, const std::vector<CMatrix>& positive);

    int n() const { return poly_.n(); }
    int m() const { return poly_.m(); }
    const TrigPoly& poly() const { return poly_; }
    const CMatrix& coeff(int k) const { return poly_.coeff(k); }

private:
    explicit TangentPoly(TrigPoly p) : poly_(std::move(p)) {}
    TrigPoly poly_;
};

/// Random traceless tangent vector of degree m.
TangentPoly random_tangent(std::uint64_t seed, int n, int m);

/// Differential of tau at the identity: A_k -> conj(A_k).
TangentPoly tangent_tau(const TangentPoly& x);

CMatrix eval(const LoopPoly& g, double theta);

/// Pointwise product; degree bound m1 + m2 (Cauchy product of coefficients).
LoopPoly multiply(const LoopPoly& a, const LoopPoly& b);

/// Pointwise inverse; coefficients (A_{-k})^*. Throws DomainError if the loop
/// is not unitary on the circle within 1e-9.
LoopPoly inverse(const LoopPoly& g);

/// gamma^{-1} gamma' as a trig polynomial of degree 2m, recovered from 4m+3
/// samples by discrete Fourier inversion.
TrigPoly log_derivative(const LoopPoly& g);

/// Same quantity as an exact Cauchy product of coefficient sequences.
TrigPoly log_derivative_convolution(const LoopPoly& g);

/// [(s, k) . gamma](theta) = k gamma(theta + s) gamma(s)^{-1} k^{-1}.
/// Throws DomainError unless k is in SU(n) within 1e-9.
LoopPoly act(double s, const CMatrix& k, const LoopPoly& g);

/// (tau gamma)(z) = conj(gamma(conj z)); coefficientwise complex conjugation.
LoopPoly tau(const LoopPoly& g);

struct LoopSample {
    LoopPoly loop;
    std::vector<Coweight> coweights;
    std::vector<CMatrix> conjugators;
    /// At most one factor carries a nonzero coweight, so the loop is a
    /// conjugated homomorphism S^1 -> T.
    bool homomorphism() const;
};

/// prod_{j=1..depth} k_j lambda_j(theta) k_j^{-1} with Haar k_j (SO(n) when
/// real_locus) and uniform coweights of max |entry| <= max_coweight_norm.
/// Coweights depend only on (seed, j), so real and complex samples drawn with
/// the same seed share their coweights.
LoopSample sample_loop_detailed(std::uint64_t seed, int n, int depth, int max_coweight_norm,
                                bool real_locus);

LoopPoly sample_loop(std::uint64_t seed, int n, int depth, int max_coweight_norm,
                     bool real_locus);

}  // namespace loopconv
