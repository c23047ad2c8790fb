#include "loopconv/kernels.hpp"

namespace loopconv::kernels {

namespace {

void caxpy_scalar(std::size_t count, double ar, double ai, const double* x, double* y) {
    for (std::size_t k = 0; k < count; ++k) {
        const double xr = x[2 * k];
        const double xi = x[2 * k + 1];
        const double re = ar * xr - ai * xi;
        const double im = ar * xi + ai * xr;
        y[2 * k] += re;
        y[2 * k + 1] += im;
    }
}

void halfplane_scalar(std::size_t edges, const double* nx, const double* ny, const double* c,
                      std::size_t points, const double* px, const double* py, double* out) {
    for (std::size_t p = 0; p < points; ++p) {
        double worst = -1e308;
        for (std::size_t e = 0; e < edges; ++e) {
            const double s = (nx[e] * px[p] + ny[e] * py[p]) - c[e];
            worst = s > worst ? s : worst;
        }
        out[p] = worst;
    }
}

double norm2_scalar(std::size_t count, const double* z) {
    // Four interleaved partial sums, matching the AVX2 lane layout.
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n = 2 * count;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        for (int l = 0; l < 4; ++l) acc[l] += z[k + l] * z[k + l];
    }
    for (int l = 0; k < n; ++k, ++l) acc[l] += z[k] * z[k];
    return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

}  // namespace

const Table& scalar_table() {
    static const Table t{Backend::Scalar, caxpy_scalar, halfplane_scalar, norm2_scalar};
    return t;
}

}  // namespace loopconv::kernels
