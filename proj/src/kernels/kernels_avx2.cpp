#include "loopconv/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace loopconv::kernels {

namespace {

void caxpy_avx2(std::size_t count, double ar, double ai, const double* x, double* y) {
    const __m256d vr = _mm256_set1_pd(ar);
    const __m256d vi = _mm256_set1_pd(ai);
    std::size_t k = 0;
    for (; k + 2 <= count; k += 2) {
        const __m256d xv = _mm256_loadu_pd(x + 2 * k);
        const __m256d xs = _mm256_permute_pd(xv, 0b0101);
        // (ar*xr - ai*xi, ar*xi + ai*xr)
        const __m256d prod = _mm256_addsub_pd(_mm256_mul_pd(vr, xv), _mm256_mul_pd(vi, xs));
        _mm256_storeu_pd(y + 2 * k, _mm256_add_pd(_mm256_loadu_pd(y + 2 * k), prod));
    }
    for (; k < count; ++k) {
        const double xr = x[2 * k];
        const double xi = x[2 * k + 1];
        const double re = ar * xr - ai * xi;
        const double im = ar * xi + ai * xr;
        y[2 * k] += re;
        y[2 * k + 1] += im;
    }
}

void halfplane_avx2(std::size_t edges, const double* nx, const double* ny, const double* c,
                    std::size_t points, const double* px, const double* py, double* out) {
    std::size_t p = 0;
    for (; p + 4 <= points; p += 4) {
        const __m256d x = _mm256_loadu_pd(px + p);
        const __m256d y = _mm256_loadu_pd(py + p);
        __m256d worst = _mm256_set1_pd(-1e308);
        for (std::size_t e = 0; e < edges; ++e) {
            const __m256d dot = _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(nx[e]), x),
                                              _mm256_mul_pd(_mm256_set1_pd(ny[e]), y));
            const __m256d s = _mm256_sub_pd(dot, _mm256_set1_pd(c[e]));
            worst = _mm256_max_pd(s, worst);
        }
        _mm256_storeu_pd(out + p, worst);
    }
    for (; p < points; ++p) {
        double worst = -1e308;
        for (std::size_t e = 0; e < edges; ++e) {
            const double s = (nx[e] * px[p] + ny[e] * py[p]) - c[e];
            worst = s > worst ? s : worst;
        }
        out[p] = worst;
    }
}

double norm2_avx2(std::size_t count, const double* z) {
    const std::size_t n = 2 * count;
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d v = _mm256_loadu_pd(z + k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (int l = 0; k < n; ++k, ++l) lanes[l] += z[k] * z[k];
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

const Table* avx2_table() {
    static const Table t{Backend::Avx2, caxpy_avx2, halfplane_avx2, norm2_avx2};
    return &t;
}

}  // namespace loopconv::kernels

#else

namespace loopconv::kernels {
const Table* avx2_table() { return nullptr; }
}  // namespace loopconv::kernels

#endif
