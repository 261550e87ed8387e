#pragma once

#include <functional>
#include <string>

#include "levygame/sampled_path.hpp"

namespace levygame {

struct EventEval {
    bool holds = true;
    double fail_margin = 0.0;  // how far the guarded inequality is exceeded
};

// Result of checking one path against a certificate's promise.
struct PathCheck {
    bool event_holds = true;
    double fail_margin = 0.0;
    bool payoff_required = false;  // event failed and some component is obliged
    double required_payoff = 0.0;  // target adjusted for grid quantization on this path
    bool payoff_met = true;
    bool uncovered = false;  // event failed but no component is provably obliged
};

// The path-level promise extracted from a proof: the guarded event holds
// with probability at least lower_prob_bound; on any path where it fails
// (beyond grid_tol) the owning strategy's final capital reaches the payoff.
struct Certificate {
    std::string label;
    double alpha = 0.0;
    double T = 0.0;
    int n_max = 0;
    double lower_prob_bound = 1.0;
    double payoff_target = 1.0;
    double implemented_mass = 0.0;  // probability mass actually implemented
    double truncated_mass = 0.0;    // mass dropped by nMax/TMax truncation
    double grid_tol = 1e-9;
    std::function<EventEval(const SampledPath&)> event;
    std::function<PathCheck(const SampledPath&, double final_capital)> check;
};

}  // namespace levygame
