#pragma once

#include <cmath>

// Quantitative constants of the certificate strategies. The integer values
// are the published bounds; the sharp_* forms are what the constructions
// actually deliver and are used for internal "stronger than" checks.
namespace levygame::constants {

inline constexpr double kModulus = 157.0;
inline constexpr double kSuperModulus = 560.0;
inline constexpr double kQV = 46.0;
inline constexpr double kLevySuperModulus = 800.0;

inline double fourth_root_2() { return std::pow(2.0, 0.25); }

// 2^{5/2} (2^{1/4}-1)^{-1/2} (1-2^{-1/8})^{-1}  ~= 156.72
inline double sharp_modulus() {
    return std::pow(2.0, 2.5) / std::sqrt(fourth_root_2() - 1.0) /
           (1.0 - std::pow(2.0, -0.125));
}

// sharp_modulus * (1-2^{-1/4})^{-1/2} * 2^{1/2}  ~= 556.6
inline double sharp_super_modulus() {
    return sharp_modulus() / std::sqrt(1.0 - std::pow(2.0, -0.25)) * std::sqrt(2.0);
}

// 2 (2^{1/16}-1)^{-1}  ~= 45.2
inline double sharp_qv() { return 2.0 / (std::pow(2.0, 1.0 / 16.0) - 1.0); }

// sharp_modulus * 2^{1/2} * (1-2^{-1/4})^{-1/2} * 2^{1/2}  ~= 787.2
inline double sharp_levy_super_modulus() { return sharp_super_modulus() * std::sqrt(2.0); }

// beta_n / alpha = (2^{1/4}-1) 2^{-n/4}; sums to 1 over n >= 1
inline double beta_weight(int n) {
    return (fourth_root_2() - 1.0) * std::pow(2.0, -0.25 * n);
}

// alpha_T / alpha = (1-2^{-1/4}) T^{-1/4}; sums to 1 over T in {1,2,4,...}
inline double alpha_weight(double T) {
    return (1.0 - std::pow(2.0, -0.25)) * std::pow(T, -0.25);
}

// per-(T,n) share of alpha in the Lemma-5 combination; sums to 1
inline double qv_weight(double T, int n) {
    return 0.5 * (std::pow(2.0, 1.0 / 16.0) - 1.0) / T * std::pow(2.0, -n / 16.0);
}

// balance solution epsilon = (4 T^2 2^{-n} / beta^2)^{1/4}
inline double crossing_epsilon(double T, int n, double beta) {
    return std::pow(4.0 * T * T * std::pow(2.0, -n) / (beta * beta), 0.25);
}

}  // namespace levygame::constants
