#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "levygame/detail/normal_quantile_coeffs.hpp"

// Scalar element functions for the normal quantile and the portable log it
// uses. The AVX2 kernel in kernels_avx2.cpp mirrors these operation for
// operation (fma for fma, same Clenshaw order, same constant splits); any
// change here must be applied there as well to preserve bitwise equality.

namespace levygame::detail {

inline constexpr double kLn2Hi = 6.93147180369123816490e-01;  // 0x1.62e42feep-1
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;  // ln2 - kLn2Hi
inline constexpr double kSqrt2 = 1.41421356237309504880;

// log(x) for normal positive x < 1. Accuracy ~1 ulp over the inputs the
// quantile uses (x <= 0.5); implemented without libm so the SIMD variant can
// reproduce it exactly.
inline double portable_log(double x) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(x);
    int e = static_cast<int>(bits >> 52) - 1023;
    double m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull);
    if (m > kSqrt2) {
        m = m * 0.5;
        e += 1;
    }
    const double z = (m - 1.0) / (m + 1.0);
    const double z2 = z * z;
    // atanh series: ln(m) = 2z(1 + z^2/3 + z^4/5 + ... + z^16/17)
    double p = 1.0 / 17.0;
    p = std::fma(p, z2, 1.0 / 15.0);
    p = std::fma(p, z2, 1.0 / 13.0);
    p = std::fma(p, z2, 1.0 / 11.0);
    p = std::fma(p, z2, 1.0 / 9.0);
    p = std::fma(p, z2, 1.0 / 7.0);
    p = std::fma(p, z2, 1.0 / 5.0);
    p = std::fma(p, z2, 1.0 / 3.0);
    p = std::fma(p, z2, 1.0);
    const double lnm = 2.0 * z * p;
    const double ed = static_cast<double>(e);
    return std::fma(ed, kLn2Hi, std::fma(ed, kLn2Lo, lnm));
}

template <std::size_t N>
inline double clenshaw(const double (&c)[N], double t) {
    const double t2 = 2.0 * t;
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = N; k-- > 1;) {
        const double b = std::fma(t2, b1, c[k] - b2);
        b2 = b1;
        b1 = b;
    }
    return std::fma(t, b1, c[0] - b2);
}

inline constexpr double kNqCentralQMin = (1.0 - kNqCentralSMax) / 2.0;  // 0.075

inline double nq_central_map(double w) {
    // affine map of w = s^2 from [WLo, WHi] onto [-1, 1]
    const double scale = 2.0 / (kNqCentralWHi - kNqCentralWLo);
    const double bias = -(kNqCentralWHi + kNqCentralWLo) / (kNqCentralWHi - kNqCentralWLo);
    return std::fma(w, scale, bias);
}

inline double nq_tail_map(double r) {
    const double scale = 2.0 / (kNqTailRHi - kNqTailRLo);
    const double bias = -(kNqTailRHi + kNqTailRLo) / (kNqTailRHi - kNqTailRLo);
    return std::fma(r, scale, bias);
}

inline double normal_quantile_scalar(double u) {
    const double q = u <= 0.5 ? u : 1.0 - u;
    if (q >= kNqCentralQMin) {
        const double s = 2.0 * u - 1.0;
        const double w = s * s;
        return s * clenshaw(kNqCentralCoeffs, nq_central_map(w));
    }
    const double r = std::sqrt(-portable_log(q));
    const double g = clenshaw(kNqTailCoeffs, nq_tail_map(r));
    return u <= 0.5 ? -g : g;
}

}  // namespace levygame::detail
