#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant chosen at runtime. Both variants evaluate every element with
// the same operation sequence (no FMA), so their results are bit-identical.

#include <cstddef>
#include <string_view>

namespace loopconv::kernels {

enum class Backend { Scalar, Avx2 };

/// y[k] += alpha * x[k] for k < count, complex values stored interleaved
/// (re, im, re, im, ...).
using CaxpyFn = void (*)(std::size_t count, double alpha_re, double alpha_im,
                         const double* x, double* y);

/// out[p] = max_e (nx[e]*px[p] + ny[e]*py[p] - c[e]) over `edges` half-planes.
/// A point is inside the polygon iff out[p] <= 0.
using HalfplaneFn = void (*)(std::size_t edges, const double* nx, const double* ny,
                             const double* c, std::size_t points, const double* px,
                             const double* py, double* out);

/// Sum of |z|^2 over interleaved complex values.
using Norm2Fn = double (*)(std::size_t count, const double* z);

struct Table {
    Backend backend;
    CaxpyFn caxpy;
    HalfplaneFn halfplane_violation;
    Norm2Fn norm2;
};

const Table& scalar_table();
/// nullptr when the binary was built without AVX2 support.
const Table* avx2_table();

/// Best backend supported by the running CPU unless overridden by force().
const Table& active();

/// Pin the dispatch (tests and benchmarks). Returns false if the requested
/// backend is unavailable on this CPU, leaving the dispatch unchanged.
bool force(Backend b);
void reset();

bool cpu_has_avx2();
std::string_view name(Backend b);

}  // namespace loopconv::kernels
