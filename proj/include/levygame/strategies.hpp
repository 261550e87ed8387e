#pragma once

#include <memory>

#include "levygame/certificate.hpp"
#include "levygame/game.hpp"

namespace levygame {

struct StrategyWithCertificate {
    std::unique_ptr<ElementaryStrategy> strategy;
    Certificate certificate;
};

struct CompoundWithCertificate {
    CompoundStrategy strategy;
    Certificate certificate;
};

// Levy-game boundedness bet: initial capital alpha, stake alpha/T on the
// variance security from time 0, liquidated at T or at the quantized hit of
// |omega| = alpha^{-1/2} T^{1/2}. Guards sup_{[0,T]} |omega| <= threshold
// with lower probability 1 - alpha; pays 1 when the guard fails.
StrategyWithCertificate boundedness_strategy(double alpha, double T, const TimeGrid& grid);

double boundedness_threshold(double alpha, double T);

// Modified-game dyadic quadratic-variation budget: initial capital T, unit
// variance stake re-anchored at each of the 2^n dyadic times of [0, T].
// Capital at dyadic time j is T + sum_{i<=j} (d omega_i)^2 - j 2^{-n} T;
// guards QV <= 2T/beta with lower probability 1 - beta/2 and pays 2T/beta
// when the guard fails.
StrategyWithCertificate qv_budget_strategy(double T, int n, double beta, const TimeGrid& grid);

// Modified-game epsilon-crossing bet: inside each dyadic subinterval, a unit
// variance stake is anchored at the first grid index where the path has
// moved epsilon from the subinterval's start, released at the subinterval
// end; at most max_bets anchors overall. Initial capital max_bets 2^{-n} T.
StrategyWithCertificate epsilon_crossing_strategy(double T, int n, double eps,
                                                  std::size_t max_bets, const TimeGrid& grid);

// The Lemma-3 combination: per-level budget + crossing components with
// beta_n weights plus an idle remainder so S_0 = alpha exactly. Certificate
// event: m^T_delta <= 157 alpha^{-1/2} T^{3/8} delta^{1/8}, checked at the
// dyadic deltas 2^{-m} T, m = 0..n_max.
CompoundWithCertificate modulus_certificate_strategy(double alpha, double T, int n_max,
                                                     const TimeGrid& grid);

// The Lemma-5 combination over T in {1,2,4,...} and n = 1..n_max: guards
// QV_{T,n} <= 46 alpha^{-1} T^2 2^{n/16} for every implemented pair.
CompoundWithCertificate qv_bound_strategy(double alpha, double T_max, int n_max,
                                          const TimeGrid& grid);

// Lemma-7: boundedness component plus the Lemma-3 components transferred to
// the Levy game with forced liquidation at |omega| = alpha^{-1/2}T^{1/2}+1.
// Same modulus event, lower probability >= 1 - 2 alpha, bounded stakes.
CompoundWithCertificate levy_modulus_strategy(double alpha, double T, int n_max,
                                              const TimeGrid& grid);

// Lemma-8: alpha_T-weighted Lemma-7 over T in {1,2,4,...} within the grid
// horizon; event m^T_delta <= 800 alpha^{-1/2} (T/2)^{1/2} delta^{1/8} at the
// implemented dyadic T (which dominates the statement for all real T >= 1).
CompoundWithCertificate levy_super_modulus_strategy(double alpha, double T_max, int n_max,
                                                    const TimeGrid& grid);

// Detection outcome of the crossing construction on one path; used by the
// certificate checkers to compute quantization-adjusted payoffs.
struct CrossingOutcome {
    bool violating_subinterval = false;  // some |omega_i - omega_{i-1}| >= 2 eps
    bool bet_on_first_violation = false;
    double overshoot = 0.0;  // |omega(detect) - omega_{i-1}| - eps at that bet
    std::size_t bets_used = 0;
};

CrossingOutcome simulate_crossing(const SampledPath& path, double T, int n, double eps,
                                  std::size_t max_bets);

}  // namespace levygame
