#pragma once

#include <vector>

#include "loopconv/core.hpp"
#include "loopconv/liecore.hpp"
#include "loopconv/loops.hpp"

namespace loopconv {

/// Value of the S^1 x K moment map: energy = (1/4pi) int |g^{-1} g'|^2 and
/// p = (1/2pi) int g^{-1} g', a traceless skew-Hermitian matrix.
struct MomentValue {
    double energy = 0.0;
    CMatrix p;
};

/// Energy paired with the dominant spectrum of -i p.
struct DeltaPoint {
    double energy = 0.0;
    DeltaCoords v;
};

/// Equispaced quadrature with 8m+3 nodes; exact for the degree-4m integrand.
MomentValue moment(const LoopPoly& g);

struct TorusMoment {
    double energy = 0.0;
    std::vector<double> t;  // Im diag(p)
};

/// Orthogonal projection of p onto the diagonal torus.
TorusMoment moment_torus(const LoopPoly& g);

DeltaPoint delta(const LoopPoly& g);
DeltaPoint delta_of(const MomentValue& mv);

/// Closed form at a homomorphism: (|Lambda|^2 / 2, Lambda), Lambda = i diag(lambda).
MomentValue coweight_moment(const Coweight& lambda);

/// energy - |p|^2 / 2; nonnegative, zero exactly for homomorphisms.
double energy_gap(const MomentValue& mv);

}  // namespace loopconv
