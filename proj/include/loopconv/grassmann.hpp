#pragma once

// Finite-window model of the algebraic Grassmannian.
//
// A subspace W of L^2(S^1, C^d) with z^hi H_+ <= W <= z^lo H_+ is stored as
// V = W intersected with span{e_i z^k : lo <= k < hi}; W = V + z^hi H_+ and V is
// isomorphic to W / z^hi H_+. Coordinates are ordered by (k ascending, i
// ascending), so the coordinate of e_i z^k is (k - lo) * d + i.
//
// Fiber bases are real and orthonormal for the trace form: the standard basis
// of C^n (fundamental) or {E_ab (a != b), H_1..H_{n-1}} for sl(n, C) (adjoint).
// Because they are real, the anti-holomorphic extension of entrywise
// conjugation acts on coordinates by plain complex conjugation.

#include <cstdint>
#include <optional>
#include <vector>

#include "loopconv/core.hpp"
#include "loopconv/loops.hpp"

namespace loopconv {

enum class Rep { Fundamental, Adjoint };

int fiber_dim(Rep rep, int n);

struct Window {
    int lo = -1;
    int hi = 0;
    int d = 1;

    /// Throws WindowError unless lo < 0 <= hi and d >= 1.
    static Window make(int lo, int hi, int d);
    int slots() const { return hi - lo; }
    int size() const { return d * (hi - lo); }
    int index(int degree, int i) const { return (degree - lo) * d + i; }
    Window shifted(int by) const { return {lo + by, hi + by, d}; }
    friend bool operator==(const Window&, const Window&) = default;
};

class GrassPoint {
public:
    /// Throws DimensionError on shape mismatch and DomainError if the columns
    /// are not orthonormal within 1e-10.
    static GrassPoint make(Window window, Rep rep, int n, CMatrix basis);

    const Window& window() const { return window_; }
    Rep rep() const { return rep_; }
    int n() const { return n_; }
    const CMatrix& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    CMatrix projector() const { return basis_ * basis_.adjoint(); }
    /// ||B^* B - I||_F.
    double orthonormality_drift() const;

private:
    GrassPoint(Window w, Rep rep, int n, CMatrix b)
        : window_(w), rep_(rep), n_(n), basis_(std::move(b)) {}
    Window window_;
    Rep rep_ = Rep::Fundamental;
    int n_ = 1;
    CMatrix basis_;
};

/// Orthonormal real basis of the fiber, as n x n matrices (fundamental:
/// the columns e_i stored as n x 1).
std::vector<CMatrix> fiber_basis(Rep rep, int n);

/// Matrix of the constant element g acting on fiber coordinates.
CMatrix rho(Rep rep, const CMatrix& g);

/// Laurent coefficients of rho(gamma(z)); degree m (fundamental) or 2m
/// (adjoint).
TrigPoly rho_loop(Rep rep, const LoopPoly& g);

/// Degree of rho_loop without building it.
int rep_degree(Rep rep, const LoopPoly& g);

/// phi(gamma) = gamma . H_+ restricted to the window. Requires
/// lo <= -M and hi >= M for the representation degree M; throws WindowError
/// otherwise. The basis spans a subspace of dimension d * hi.
GrassPoint embed(const LoopPoly& g, Rep rep, const Window& window);

/// ||P_a - P_b||_F; throws WindowError if the windows differ.
double projector_distance(const GrassPoint& a, const GrassPoint& b);

struct ConditionResult {
    double residual = 0.0;
    bool passed = false;
};

struct Gr0kReport {
    ConditionResult containment;            // zW <= W
    std::optional<ConditionResult> perp;    // zW = conj(W)^perp
    std::optional<ConditionResult> bracket; // closed under pointwise bracket
    bool all_passed() const;
};

enum class Gr0kConditions { ContainmentOnly, All };

/// Checks the three membership conditions with the given pass tolerance.
/// Requesting perp/bracket on a fundamental-representation point throws
/// DomainError.
Gr0kReport check_gr0k(const GrassPoint& w, Gr0kConditions which = Gr0kConditions::All,
                      double tol = 1e-8);

/// s . W = {f(e^{is} z)} followed by k . W = {rho(k) f}. Throws DomainError if
/// k is not unitary within 1e-9.
GrassPoint act_gr(double s, const CMatrix& k, const GrassPoint& w);

/// {sigma-hat(f(conj z))}: conjugate coordinates, degrees unchanged.
GrassPoint tau_hat(const GrassPoint& w);

/// z W, stored in the window shifted up by one degree.
GrassPoint shift_z(const GrassPoint& w);

/// Random orthonormal columns (generically not a loop image).
GrassPoint random_grass_point(std::uint64_t seed, Rep rep, int n, const Window& window, int dim);

/// (1/2pi) int <X, Y'> by equispaced quadrature (exact for these degrees).
double loop_form(const TangentPoly& x, const TangentPoly& y);

/// i sum_k k tr(A_k^* B_k), evaluated on coefficients.
double loop_form_coefficient(const TangentPoly& x, const TangentPoly& y);

/// -i sum_{i, 0<=j<hi} [<f_X e_i z^j, f_Y e_i z^j> - <f_Y e_i z^j, f_X e_i z^j>]
/// with f_X = pr_- o L_X, built as explicit window vectors in the fundamental
/// representation. Requires hi >= m and lo <= -m for both tangents.
double hs_form_pullback(const TangentPoly& x, const TangentPoly& y, const Window& window);

/// Sum of degrees of a homogeneous basis of W minus that of the reference.
/// Both must be invariant under loop rotation and have the same dimension;
/// throws DomainError otherwise.
long rotation_weight(const GrassPoint& w, const GrassPoint& reference);

/// Sum of degrees of a homogeneous basis of a rotation-fixed subspace.
long degree_sum(const GrassPoint& w);

}  // namespace loopconv
