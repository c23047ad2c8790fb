#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loopconv/core.hpp"

namespace loopconv {

/// Integer vector with zero sum: a cocharacter S^1 -> T of the diagonal
/// torus of SU(n). The associated Lie algebra element is i*diag(entries).
class Coweight {
public:
    Coweight() = default;
    /// Throws DomainError unless the entries sum to zero.
    explicit Coweight(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    /// max |entry|; the Fourier degree of the homomorphism loop.
    int norm() const;
    bool is_zero() const { return norm() == 0; }
    bool is_dominant() const;
    /// Entries sorted weakly decreasing.
    Coweight dominant() const;
    /// i*diag(entries).
    CMatrix algebra_element() const;

    friend bool operator==(const Coweight&, const Coweight&) = default;

private:
    std::vector<int> entries_;
};

/// Weakly decreasing, zero-sum real vector: a point of the positive chamber.
struct DeltaCoords {
    std::vector<double> v;
};

/// tr(X^* Y), scaled by inner_scale. Throws DimensionError on shape mismatch.
cplx inner(const CMatrix& x, const CMatrix& y);

/// Frobenius norm induced by inner().
double algebra_norm(const CMatrix& x);

struct DominantProjection {
    DeltaCoords coords;
    CMatrix conjugator;  // unitary u with u * i diag(v) * u^* = p
};

/// Eigen-decomposes -i*p and returns its spectrum sorted decreasingly.
/// Each eigenvector is phase-normalized so its largest-modulus entry is real
/// positive, which makes the conjugator of an already-dominant diagonal input
/// the identity. Throws DomainError if p is not skew-Hermitian and traceless
/// within 1e-10.
DominantProjection dominant_project(const CMatrix& p);

/// All distinct permutations of v, in lexicographically decreasing order.
std::vector<std::vector<double>> weyl_orbit(const DeltaCoords& v);

/// Dominance order on dominant coweights: eta <= lambda iff every partial sum
/// of (lambda - eta) is nonnegative. Throws DomainError on non-dominant input
/// and DimensionError on length mismatch.
bool dominance_leq(const Coweight& eta, const Coweight& lambda);

/// All dominant SU(n) coweights with max |entry| <= radius.
std::vector<Coweight> dominant_coweights(int n, int radius);

/// All SU(n) coweights with max |entry| <= radius.
std::vector<Coweight> all_coweights(int n, int radius);

/// Haar-random element of SU(n) (or SO(n) when real_form), deterministic in
/// seed. QR of a Gaussian matrix with the R-diagonal phases folded back.
CMatrix random_unitary(std::uint64_t seed, int n, bool real_form);

/// Uniform coweight with max |entry| <= max_norm (rejection on the last entry).
Coweight random_coweight(std::uint64_t seed, int n, int max_norm);

/// Standard complex Gaussian n x n matrix.
CMatrix random_gaussian(std::uint64_t seed, int rows, int cols);

/// Random traceless skew-Hermitian matrix, entries O(1).
CMatrix random_su(std::uint64_t seed, int n);

bool is_unitary(const CMatrix& k, double tol);
bool is_special_unitary(const CMatrix& k, double tol);

}  // namespace loopconv
