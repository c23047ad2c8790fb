#include "loopconv/moment.hpp"

#include "loopconv/kernels.hpp"

namespace loopconv {

MomentValue moment(const LoopPoly& g) {
    const int n = g.n();
    const int count = 8 * g.m() + 3;
    const auto& kt = kernels::active();
    MomentValue out;
    out.p = CMatrix::Zero(n, n);
    double sq = 0.0;
    for (int j = 0; j < count; ++j) {
        const double th = kTwoPi * j / count;
        const CMatrix x = g.poly().eval(th).adjoint() * g.poly().eval_derivative(th);
        sq += kt.norm2(static_cast<std::size_t>(x.size()), reinterpret_cast<const double*>(x.data()));
        out.p += x;
    }
    // (1/4pi) * (2pi/N) * sum = sum / (2N)
    out.energy = inner_scale(n) * sq / (2.0 * count);
    out.p /= static_cast<double>(count);
    return out;
}

TorusMoment moment_torus(const LoopPoly& g) {
    const MomentValue mv = moment(g);
    TorusMoment out{mv.energy, {}};
    for (int i = 0; i < g.n(); ++i) out.t.push_back(mv.p(i, i).imag());
    return out;
}

DeltaPoint delta_of(const MomentValue& mv) {
    return {mv.energy, dominant_project(mv.p).coords};
}

DeltaPoint delta(const LoopPoly& g) { return delta_of(moment(g)); }

MomentValue coweight_moment(const Coweight& lambda) {
    MomentValue out;
    out.p = lambda.algebra_element();
    out.energy = 0.5 * inner(out.p, out.p).real();
    return out;
}

double energy_gap(const MomentValue& mv) { return mv.energy - 0.5 * inner(mv.p, mv.p).real(); }

}  // namespace loopconv
