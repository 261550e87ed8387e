#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "levygame/sampled_path.hpp"

namespace levygame {

// Counter-based RNG (Philox4x32-10 construction): random access by
// (seed, stream, block) with no sequencing, so parallel workers sample
// reproducibly. Gaussians come from the inverse normal CDF applied to
// 53-bit uniforms in the open interval (0,1).
namespace rng {

std::array<std::uint32_t, 4> philox_block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t block, std::uint32_t domain);

// Fills out[0..n) with standard normal draws for the given stream.
void fill_gaussians(std::uint64_t seed, std::uint64_t stream, std::uint32_t domain,
                    double* out, std::size_t n);

inline constexpr std::uint32_t kDomainPaths = 0;
inline constexpr std::uint32_t kDomainCylinder = 1;

}  // namespace rng

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

class BrownianSampler {
  public:
    BrownianSampler(std::uint64_t seed, TimeGrid grid) : seed_(seed), grid_(grid) {}

    std::uint64_t seed() const { return seed_; }
    const TimeGrid& grid() const { return grid_; }

    // Deterministic path for (seed, grid, pathIndex); values[0] = 0 and
    // increments are i.i.d. N(0, step()).
    SampledPath sample_path(std::uint64_t path_index) const;

    // Increment buffer without constructing a path (variance step()).
    void sample_increments(std::uint64_t path_index, std::vector<double>& out) const;

  private:
    std::uint64_t seed_;
    TimeGrid grid_;
};

struct SupProbability {
    double value = 0.0;
    double remainder_bound = 0.0;
    int terms = 0;
};

// P(sup_{[0,T]} |B| <= c) by the alternating reflection series, truncated at
// `terms` (per side) with the first omitted term reported as the remainder
// bound.
SupProbability prob_sup_abs_below(double c, double T, int terms = 32);

// Monte Carlo E[F(W(T/N), ..., W(T))] from exact Gaussian draws of the
// cylinder increments (no grid discretization).
MCEstimate mc_cylinder_expectation(const std::function<double(const std::vector<double>&)>& F,
                                   std::size_t ncoords, double T, std::size_t npaths,
                                   std::uint64_t seed);

}  // namespace levygame
