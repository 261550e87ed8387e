// AVX2 kernel variants. Operation-for-operation mirrors of the scalar
// reference (see detail/normal_quantile_scalar.hpp); keep the two in sync or
// the bitwise-equivalence tests will fail.

#include "levygame/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

#include "levygame/detail/normal_quantile_scalar.hpp"

namespace levygame::kernels {

namespace {

using detail::kLn2Hi;
using detail::kLn2Lo;
using detail::kNqCentralCoeffs;
using detail::kNqCentralQMin;
using detail::kNqTailCoeffs;
using detail::kSqrt2;

inline __m256d portable_log_v(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    // biased exponent as double via the 2^52 magic-number trick (values are
    // small positive integers, so the conversion is exact)
    const __m256i expi = _mm256_srli_epi64(bits, 52);
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
    const __m256d expd =
        _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(expi, magic)),
                      _mm256_set1_pd(4503599627370496.0));
    __m256d e = _mm256_sub_pd(expd, _mm256_set1_pd(1023.0));
    const __m256i mant = _mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll)),
        _mm256_set1_epi64x(0x3FF0000000000000ll));
    __m256d m = _mm256_castsi256_pd(mant);
    const __m256d gt = _mm256_cmp_pd(m, _mm256_set1_pd(kSqrt2), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), gt);
    e = _mm256_add_pd(e, _mm256_and_pd(gt, _mm256_set1_pd(1.0)));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d z = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d z2 = _mm256_mul_pd(z, z);
    __m256d p = _mm256_set1_pd(1.0 / 17.0);
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 15.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 13.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 11.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 9.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 7.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 5.0));
    p = _mm256_fmadd_pd(p, z2, _mm256_set1_pd(1.0 / 3.0));
    p = _mm256_fmadd_pd(p, z2, one);
    const __m256d lnm = _mm256_mul_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), z), p);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Hi),
                           _mm256_fmadd_pd(e, _mm256_set1_pd(kLn2Lo), lnm));
}

template <std::size_t N>
inline __m256d clenshaw_v(const double (&c)[N], __m256d t) {
    const __m256d t2 = _mm256_mul_pd(_mm256_set1_pd(2.0), t);
    __m256d b1 = _mm256_setzero_pd();
    __m256d b2 = _mm256_setzero_pd();
    for (std::size_t k = N; k-- > 1;) {
        const __m256d b =
            _mm256_fmadd_pd(t2, b1, _mm256_sub_pd(_mm256_set1_pd(c[k]), b2));
        b2 = b1;
        b1 = b;
    }
    return _mm256_fmadd_pd(t, b1, _mm256_sub_pd(_mm256_set1_pd(c[0]), b2));
}

inline __m256d normal_quantile_v(__m256d u) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d low = _mm256_cmp_pd(u, half, _CMP_LE_OQ);
    const __m256d q = _mm256_blendv_pd(_mm256_sub_pd(one, u), u, low);

    // central branch
    const __m256d s = _mm256_sub_pd(_mm256_mul_pd(_mm256_set1_pd(2.0), u), one);
    const __m256d w = _mm256_mul_pd(s, s);
    const double cscale = 2.0 / (detail::kNqCentralWHi - detail::kNqCentralWLo);
    const double cbias = -(detail::kNqCentralWHi + detail::kNqCentralWLo) /
                         (detail::kNqCentralWHi - detail::kNqCentralWLo);
    const __m256d tc =
        _mm256_fmadd_pd(w, _mm256_set1_pd(cscale), _mm256_set1_pd(cbias));
    const __m256d xc = _mm256_mul_pd(s, clenshaw_v(kNqCentralCoeffs, tc));

    // tail branch
    const __m256d r = _mm256_sqrt_pd(
        _mm256_sub_pd(_mm256_setzero_pd(), portable_log_v(q)));
    const double tscale = 2.0 / (detail::kNqTailRHi - detail::kNqTailRLo);
    const double tbias = -(detail::kNqTailRHi + detail::kNqTailRLo) /
                         (detail::kNqTailRHi - detail::kNqTailRLo);
    const __m256d tt =
        _mm256_fmadd_pd(r, _mm256_set1_pd(tscale), _mm256_set1_pd(tbias));
    const __m256d g = clenshaw_v(kNqTailCoeffs, tt);
    const __m256d signbit = _mm256_set1_pd(-0.0);
    const __m256d xt = _mm256_blendv_pd(g, _mm256_xor_pd(g, signbit), low);

    const __m256d central =
        _mm256_cmp_pd(q, _mm256_set1_pd(kNqCentralQMin), _CMP_GE_OQ);
    return _mm256_blendv_pd(xt, xc, central);
}

void normal_quantile_n(const double* u, double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(x + i, normal_quantile_v(_mm256_loadu_pd(u + i)));
    }
    for (; i < n; ++i) x[i] = detail::normal_quantile_scalar(u[i]);
}

double sum_sq_diff(const double* v, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;
    __m256d vacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        const __m256d a = _mm256_loadu_pd(v + i);
        const __m256d b = _mm256_loadu_pd(v + i + 1);
        const __m256d d = _mm256_sub_pd(b, a);
        vacc = _mm256_fmadd_pd(d, d, vacc);
    }
    alignas(32) double acc[4];
    _mm256_store_pd(acc, vacc);
    for (int j = 0; i < m; ++i, ++j) {
        const double d = v[i + 1] - v[i];
        acc[j] = std::fma(d, d, acc[j]);
    }
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double max_abs(const double* v, std::size_t n) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFll));
    __m256d vbest = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vbest = _mm256_max_pd(vbest, _mm256_and_pd(absmask, _mm256_loadu_pd(v + i)));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vbest);
    double best = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops ops{&normal_quantile_n, &sum_sq_diff, &max_abs, "avx2"};
    return &ops;
}

}  // namespace levygame::kernels

#else

namespace levygame::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace levygame::kernels

#endif
