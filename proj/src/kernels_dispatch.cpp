#include "levygame/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace levygame::kernels {

namespace {

std::atomic<int> g_forced{-1};  // -1: auto, else static_cast<int>(Isa)

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa pick() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    if (const char* env = std::getenv("LEVYGAME_FORCE_SCALAR"); env && env[0] == '1')
        return Isa::Scalar;
    if (cpu_has_avx2() && avx2_ops() != nullptr) return Isa::Avx2;
    return Isa::Scalar;
}

}  // namespace

const Ops& active() {
    return active_isa() == Isa::Avx2 ? *avx2_ops() : scalar_ops();
}

Isa active_isa() {
    Isa isa = pick();
    if (isa == Isa::Avx2 && (!cpu_has_avx2() || avx2_ops() == nullptr)) isa = Isa::Scalar;
    return isa;
}

void force_isa(Isa isa) { g_forced.store(static_cast<int>(isa), std::memory_order_relaxed); }

void clear_forced_isa() { g_forced.store(-1, std::memory_order_relaxed); }

}  // namespace levygame::kernels
