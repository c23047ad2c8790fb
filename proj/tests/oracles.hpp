#pragma once

// Independent reference computations shared by unit tests and the acceptance run.

#include <cmath>
#include <optional>

#include "loopconv/grassmann.hpp"

namespace loopconv::oracle {

/// Rotation by s multiplies window degree j by e^{ijs}. On a rotation-fixed
/// subspace with orthonormal basis B, det(B^* R_s B) = e^{iks}; fit k from
/// the phase at a small angle and confirm it at a second one.
inline std::optional<long> phase_fit_degree(const GrassPoint& w) {
    const Window& win = w.window();
    const CMatrix& b = w.basis();
    auto det_at = [&](double s) {
        CMatrix rb = b;
        for (int deg = win.lo; deg < win.hi; ++deg)
            rb.middleRows(win.index(deg, 0), win.d) *= std::exp(cplx(0.0, deg * s));
        return (b.adjoint() * rb).determinant();
    };
    const double bound = static_cast<double>(std::max(std::abs(win.lo), std::abs(win.hi))) * b.cols();
    const double s1 = 1.0 / (4.0 * (bound + 1.0));
    const cplx d1 = det_at(s1);
    if (std::abs(std::abs(d1) - 1.0) > 1e-8) return std::nullopt;
    const double k = std::arg(d1) / s1;
    const long kr = std::lround(k);
    if (std::abs(k - static_cast<double>(kr)) > 1e-6) return std::nullopt;
    const double s2 = 0.7;
    if (std::abs(det_at(s2) - std::exp(cplx(0.0, static_cast<double>(kr) * s2))) > 1e-8) return std::nullopt;
    return kr;
}

inline std::optional<long> phase_fit_weight(const GrassPoint& w, const GrassPoint& ref) {
    const auto a = phase_fit_degree(w), b = phase_fit_degree(ref);
    if (!a || !b || w.dim() != ref.dim()) return std::nullopt;
    return *a - *b;
}

}  // namespace loopconv::oracle
