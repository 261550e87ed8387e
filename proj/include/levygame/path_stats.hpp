#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "levygame/sampled_path.hpp"

namespace levygame {

// Exact modulus of continuity of the piecewise-linear interpolant:
// sup { |omega(s) - omega(t)| : s, t in [0, T], |s - t| <= delta }.
// T and delta need not be grid-aligned.
double modulus_of_continuity(const SampledPath& path, double T, double delta);

// O(K) variant for grid-aligned inputs: T = stepsT grid steps, delta =
// windowSteps grid steps. Agrees exactly with modulus_of_continuity on
// aligned inputs (property-tested).
double modulus_grid_aligned(const SampledPath& path, std::size_t stepsT,
                            std::size_t windowSteps);

// Sum of squared increments over the 2^n dyadic subintervals of [0, T].
// T must be grid-aligned and 2^n must divide the steps in [0, T].
double dyadic_quadratic_variation(const SampledPath& path, double T, int n);

enum class HitMode { Abs, Signed };

// Smallest grid index k >= start with |omega(t_k)| >= level (Abs) or
// omega(t_k) >= level (Signed); nullopt when no such index exists.
std::optional<std::size_t> first_hitting_index(const SampledPath& path, std::size_t start,
                                               double level, HitMode mode);

// Largest single-step |increment| over grid steps in [0, stepsT].
double max_step_increment(const SampledPath& path, std::size_t stepsT);

// Memoizing per-path statistics cache.
struct PathStats {
    explicit PathStats(const SampledPath& path);

    const SampledPath& path() const { return *path_; }
    double modulus(double T, double delta);
    double dyadic_qv(double T, int n);
    const std::vector<double>& running_sup() const { return running_sup_; }

  private:
    const SampledPath* path_;
    std::map<std::pair<double, double>, double> modulus_;
    std::map<std::pair<double, int>, double> dyadic_qv_;
    std::vector<double> running_sup_;  // running sup of |omega| per grid index
};

}  // namespace levygame
