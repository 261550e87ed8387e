#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner-loop kernels: scalar reference implementations plus
// AVX2 variants selected at runtime. Both variants are written with the same
// operation order (explicit fma, fixed 4-lane blocking for reductions), so
// for identical inputs they produce bitwise-identical outputs; the test
// suite asserts exact equality.

namespace levygame::kernels {

enum class Isa { Scalar, Avx2 };

struct Ops {
    // x[i] = Phi^{-1}(u[i]); u[i] must lie in (0,1).
    void (*normal_quantile)(const double* u, double* x, std::size_t n);
    // sum of (v[i+1]-v[i])^2 over i = 0..n-2 (0 when n < 2).
    double (*sum_sq_diff)(const double* v, std::size_t n);
    // max |v[i]| (0 when n == 0).
    double (*max_abs)(const double* v, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when the CPU lacks AVX2+FMA

// Runtime-selected table. Honors force_isa(); otherwise picks the widest
// supported variant. LEVYGAME_FORCE_SCALAR=1 in the environment forces the
// scalar table.
const Ops& active();
Isa active_isa();
void force_isa(Isa isa);
void clear_forced_isa();

// Scalar conveniences.
double normal_quantile(double u);

}  // namespace levygame::kernels
