#include "levygame/kernels.hpp"

#include <cmath>

#include "levygame/detail/normal_quantile_scalar.hpp"

namespace levygame::kernels {

namespace {

void normal_quantile_n(const double* u, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = detail::normal_quantile_scalar(u[i]);
}

// Fixed 4-accumulator blocking; the AVX2 variant reduces its lanes in the
// same (a0+a2)+(a1+a3) order.
double sum_sq_diff(const double* v, std::size_t n) {
    if (n < 2) return 0.0;
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t m = n - 1;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        for (int j = 0; j < 4; ++j) {
            const double d = v[i + j + 1] - v[i + j];
            acc[j] = std::fma(d, d, acc[j]);
        }
    }
    for (int j = 0; i < m; ++i, ++j) {
        const double d = v[i + 1] - v[i];
        acc[j] = std::fma(d, d, acc[j]);
    }
    return (acc[0] + acc[2]) + (acc[1] + acc[3]);
}

double max_abs(const double* v, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(v[i]);
        if (a > best) best = a;
    }
    return best;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{&normal_quantile_n, &sum_sq_diff, &max_abs, "scalar"};
    return ops;
}

double normal_quantile(double u) { return detail::normal_quantile_scalar(u); }

}  // namespace levygame::kernels
