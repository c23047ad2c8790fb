#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace loopconv {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Shapes disagree (matrix sizes, loop sizes).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input lies outside the set an operation is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A degree window is too small for the data placed in it.
class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class InnerNormalization { Trace, Killing };

// Every Lie-algebra inner product in the library is tr(X^* Y) times
// inner_scale(n). Switching this to Killing rescales by 2n on su(n).
inline constexpr InnerNormalization kInnerNormalization = InnerNormalization::Trace;

constexpr double inner_scale(int n) {
    return kInnerNormalization == InnerNormalization::Trace ? 1.0 : 2.0 * n;
}

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Counter-based seed splitting (splitmix64 finalizer). Every random stream in
// the library is derived as split_seed(root, stream, index) so that results
// never depend on evaluation order.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream,
                                   std::uint64_t index = 0) {
    return splitmix64(splitmix64(splitmix64(root) ^ stream) ^ index);
}

}  // namespace loopconv
