#include "levygame/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "levygame/constants.hpp"
#include "levygame/kernels.hpp"
#include "levygame/path_stats.hpp"

namespace levygame {

namespace {

double grid_sup_abs(const SampledPath& path, std::size_t idxT) {
    return kernels::active().max_abs(path.values().data(), idxT + 1);
}

double max_dyadic_increment(const SampledPath& path, double T, int n) {
    const std::size_t block = path.grid().dyadic_block(T, n);
    const std::size_t pieces = std::size_t{1} << n;
    double best = 0.0;
    for (std::size_t i = 0; i < pieces; ++i)
        best = std::max(best, std::fabs(path[(i + 1) * block] - path[i * block]));
    return best;
}

// ---------------------------------------------------------------------------
// Lemma 6: boundedness bet in the Levy game
// ---------------------------------------------------------------------------
class BoundednessStrategy final : public ElementaryStrategy {
  public:
    BoundednessStrategy(double alpha, double T, const TimeGrid& grid)
        : alpha_(alpha), T_(T), idxT_(grid.steps_in(T)),
          threshold_(boundedness_threshold(alpha, T)) {}

    GameKind game() const override { return GameKind::Levy; }
    double initial_capital() const override { return alpha_; }
    double stake_bound() const override { return alpha_ / T_; }
    std::string name() const override { return "lemma6-boundedness"; }

    void begin(const TimeGrid&) override {
        placed_ = false;
        stopped_ = false;
    }

    StakeDecision decide(const SampledPath& path, std::size_t k, double) override {
        if (stopped_) return StakeDecision::hold();
        if (!placed_) {
            placed_ = true;
            return StakeDecision::set(0.0, alpha_ / T_);
        }
        if (k >= idxT_ || std::fabs(path[k]) >= threshold_) {
            stopped_ = true;
            return StakeDecision::set(0.0, 0.0);
        }
        return StakeDecision::hold();
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<BoundednessStrategy>(*this);
    }

  private:
    double alpha_, T_;
    std::size_t idxT_;
    double threshold_;
    bool placed_ = false, stopped_ = false;
};

// ---------------------------------------------------------------------------
// QV budget bet in the modified game
// ---------------------------------------------------------------------------
class QvBudgetStrategy final : public ElementaryStrategy {
  public:
    QvBudgetStrategy(double T, int n, const TimeGrid& grid)
        : T_(T), block_(grid.dyadic_block(T, n)), idxT_(grid.steps_in(T)) {}

    GameKind game() const override { return GameKind::Modified; }
    double initial_capital() const override { return T_; }
    double stake_bound() const override { return 1.0; }
    std::string name() const override { return "qv-budget"; }
    void begin(const TimeGrid&) override { done_ = false; }

    StakeDecision decide(const SampledPath&, std::size_t k, double) override {
        if (done_) return StakeDecision::hold();
        if (k >= idxT_) {
            done_ = true;
            return StakeDecision::set(0.0, 0.0);
        }
        if (k % block_ == 0) return StakeDecision::set(0.0, 1.0);
        return StakeDecision::hold();
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<QvBudgetStrategy>(*this);
    }

  private:
    double T_;
    std::size_t block_, idxT_;
    bool done_ = false;
};

// ---------------------------------------------------------------------------
// epsilon-crossing bet in the modified game
// ---------------------------------------------------------------------------
class EpsilonCrossingStrategy final : public ElementaryStrategy {
  public:
    EpsilonCrossingStrategy(double T, int n, double eps, std::size_t max_bets,
                            const TimeGrid& grid)
        : T_(T), n_(n), eps_(eps), max_bets_(max_bets),
          block_(grid.dyadic_block(T, n)), idxT_(grid.steps_in(T)) {
        if (!(eps > 0.0)) throw std::domain_error("epsilon_crossing: eps must be > 0");
    }

    GameKind game() const override { return GameKind::Modified; }
    double initial_capital() const override {
        return static_cast<double>(max_bets_) * std::pow(2.0, -n_) * T_;
    }
    double stake_bound() const override { return 1.0; }
    std::string name() const override { return "epsilon-crossing"; }

    void begin(const TimeGrid&) override {
        bets_ = 0;
        in_bet_ = false;
        sub_start_ = 0.0;
        done_ = false;
    }

    StakeDecision decide(const SampledPath& path, std::size_t k, double) override {
        if (done_) return StakeDecision::hold();
        if (k >= idxT_) {
            done_ = true;
            in_bet_ = false;
            return StakeDecision::set(0.0, 0.0);
        }
        if (k % block_ == 0) {
            sub_start_ = path[k];
            if (in_bet_) {
                in_bet_ = false;
                return StakeDecision::set(0.0, 0.0);
            }
            return StakeDecision::hold();
        }
        if (!in_bet_ && bets_ < max_bets_ && std::fabs(path[k] - sub_start_) >= eps_) {
            in_bet_ = true;
            ++bets_;
            return StakeDecision::set(0.0, 1.0);
        }
        return StakeDecision::hold();
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<EpsilonCrossingStrategy>(*this);
    }

  private:
    double T_;
    int n_;
    double eps_;
    std::size_t max_bets_;
    std::size_t block_, idxT_;
    std::size_t bets_ = 0;
    bool in_bet_ = false;
    double sub_start_ = 0.0;
    bool done_ = false;
};

// Modulus event at the dyadic deltas 2^{-m} T, m = 0..n_max, against
// bound(delta) = C alpha^{-1/2} T^{tpow} delta^{1/8}; margin relative to the
// bound at the worst delta.
EventEval modulus_event(const SampledPath& path, double alpha, double T, int n_max, double C,
                        double tpow) {
    const std::size_t stepsT = path.grid().steps_in(T);
    EventEval ev;
    for (int m = 0; m <= n_max; ++m) {
        const std::size_t window = stepsT >> m;
        if (window == 0) break;
        const double delta = T * std::pow(2.0, -m);
        const double mod = modulus_grid_aligned(path, stepsT, window);
        const double bound =
            C * std::pow(alpha, -0.5) * std::pow(T, tpow) * std::pow(delta, 0.125);
        const double rel = (mod - bound) / bound;
        if (rel > ev.fail_margin) ev.fail_margin = rel;
    }
    ev.holds = ev.fail_margin <= 0.0;
    return ev;
}

struct LevelParams {
    double beta;
    double eps;
    std::size_t max_bets;
    double cross_scale;  // scaling that makes the crossing component's capital beta/2
};

LevelParams level_params(double alpha, double T, int n) {
    LevelParams p;
    p.beta = constants::beta_weight(n) * alpha;
    p.eps = constants::crossing_epsilon(T, n, p.beta);
    const double x = 2.0 * T / (p.beta * p.eps * p.eps);
    p.max_bets = static_cast<std::size_t>(std::floor(x * (1.0 + 1e-12)));
    if (p.max_bets == 0) p.max_bets = 1;
    const double raw_capital = static_cast<double>(p.max_bets) * std::pow(2.0, -n) * T;
    p.cross_scale = (p.beta / 2.0) / raw_capital;
    return p;
}

// Best payoff some Lemma-3 component at (alpha, T) is obliged to deliver on
// this path, or nullopt when no component is provably on the hook (bet cap
// exhausted before the first 2eps violation).
std::optional<double> lemma3_obliged_payoff(const SampledPath& path, double alpha, double T,
                                            int n_max, double grid_tol) {
    std::optional<double> best;
    for (int n = 1; n <= n_max; ++n) {
        const LevelParams p = level_params(alpha, T, n);
        const double qv = dyadic_quadratic_variation(path, T, n);
        if (qv > (2.0 * T / p.beta) * (1.0 + grid_tol)) {
            best = std::max(best.value_or(0.0), 1.0);
            continue;
        }
        const double max_incr = max_dyadic_increment(path, T, n);
        if (max_incr >= 2.0 * p.eps) {
            const CrossingOutcome out = simulate_crossing(path, T, n, p.eps, p.max_bets);
            if (out.bet_on_first_violation) {
                const double keep = std::max(0.0, p.eps - out.overshoot);
                const double payoff = p.cross_scale * keep * keep;
                if (payoff > 0.0) best = std::max(best.value_or(0.0), payoff);
            }
        }
    }
    return best;
}

Certificate make_modulus_certificate(
    std::string label, double alpha, double T, int n_max, double C, double tpow,
    double implemented_mass,
    std::function<std::optional<double>(const SampledPath&)> obliged) {
    Certificate cert;
    cert.label = std::move(label);
    cert.alpha = alpha;
    cert.T = T;
    cert.n_max = n_max;
    cert.payoff_target = 1.0;
    cert.implemented_mass = implemented_mass;
    cert.truncated_mass = std::max(0.0, alpha - implemented_mass);
    cert.lower_prob_bound = 1.0 - implemented_mass;
    cert.grid_tol = 1e-9;
    cert.event = [alpha, T, n_max, C, tpow](const SampledPath& path) {
        return modulus_event(path, alpha, T, n_max, C, tpow);
    };
    const double tol = cert.grid_tol;
    cert.check = [alpha, T, n_max, C, tpow, tol, obliged](const SampledPath& path,
                                                          double final_capital) {
        PathCheck pc;
        const EventEval ev = modulus_event(path, alpha, T, n_max, C, tpow);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (ev.fail_margin <= tol) return pc;
        const auto payoff = obliged(path);
        if (!payoff) {
            pc.uncovered = true;
            return pc;
        }
        pc.payoff_required = true;
        pc.required_payoff = *payoff;
        pc.payoff_met = final_capital >= *payoff * (1.0 - tol) - 1e-12;
        return pc;
    };
    return cert;
}

// The Lemma-7 component set at one (alpha, T): boundedness plus the Lemma-3
// components transferred to the Levy game and stopped at threshold + 1.
// Returns the probability mass implemented (alpha plus the per-level betas).
double append_levy_modulus_components(double alpha, double T, int n_max, const TimeGrid& grid,
                                      std::vector<CompoundStrategy::Component>& comps) {
    auto bounded = boundedness_strategy(alpha, T, grid);
    comps.push_back({std::move(bounded.strategy), alpha});
    const double stop_level = boundedness_threshold(alpha, T) + 1.0;
    double implemented = alpha;
    for (int n = 1; n <= n_max; ++n) {
        const LevelParams p = level_params(alpha, T, n);
        auto qv = qv_budget_strategy(T, n, p.beta, grid);
        comps.push_back(
            {levy_transfer(scale_strategy(std::move(qv.strategy), p.beta / (2.0 * T)),
                           stop_level),
             p.beta / 2.0});
        auto cross = epsilon_crossing_strategy(T, n, p.eps, p.max_bets, grid);
        comps.push_back(
            {levy_transfer(scale_strategy(std::move(cross.strategy), p.cross_scale),
                           stop_level),
             p.beta / 2.0});
        implemented += p.beta;
    }
    return implemented;
}

}  // namespace

double boundedness_threshold(double alpha, double T) { return std::sqrt(T / alpha); }

StrategyWithCertificate boundedness_strategy(double alpha, double T, const TimeGrid& grid) {
    if (!(alpha > 0.0) || alpha >= 1.0)
        throw std::domain_error("boundedness_strategy: alpha must lie in (0,1)");
    const std::size_t idxT = grid.steps_in(T);
    StrategyWithCertificate out;
    out.strategy = std::make_unique<BoundednessStrategy>(alpha, T, grid);
    Certificate cert;
    cert.label = "lemma6-boundedness";
    cert.alpha = alpha;
    cert.T = T;
    cert.lower_prob_bound = 1.0 - alpha;
    cert.payoff_target = 1.0;
    cert.implemented_mass = alpha;
    cert.grid_tol = 1e-9;
    const double threshold = boundedness_threshold(alpha, T);
    auto event_eval = [idxT, threshold](const SampledPath& path) {
        EventEval ev;
        const double sup = grid_sup_abs(path, idxT);
        ev.fail_margin = std::max(0.0, (sup - threshold) / threshold);
        ev.holds = sup <= threshold;
        return ev;
    };
    cert.event = event_eval;
    const double tol = cert.grid_tol;
    cert.check = [event_eval, tol](const SampledPath& path, double final_capital) {
        PathCheck pc;
        const EventEval ev = event_eval(path);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (!ev.holds) {
            // the hit is detected at a grid point with omega^2 >= T/alpha, so
            // the locked-in capital is at least 1 exactly
            pc.payoff_required = true;
            pc.required_payoff = 1.0;
            pc.payoff_met = final_capital >= 1.0 - tol;
        }
        return pc;
    };
    out.certificate = std::move(cert);
    return out;
}

StrategyWithCertificate qv_budget_strategy(double T, int n, double beta, const TimeGrid& grid) {
    if (!(beta > 0.0)) throw std::domain_error("qv_budget_strategy: beta must be > 0");
    StrategyWithCertificate out;
    out.strategy = std::make_unique<QvBudgetStrategy>(T, n, grid);
    Certificate cert;
    cert.label = "qv-budget";
    cert.T = T;
    cert.n_max = n;
    cert.lower_prob_bound = 1.0 - beta / 2.0;
    cert.payoff_target = 2.0 * T / beta;
    cert.implemented_mass = beta / 2.0;
    cert.grid_tol = 1e-9;
    const double budget = 2.0 * T / beta;
    auto event_eval = [T, n, budget](const SampledPath& path) {
        EventEval ev;
        const double qv = dyadic_quadratic_variation(path, T, n);
        ev.fail_margin = std::max(0.0, (qv - budget) / budget);
        ev.holds = qv <= budget;
        return ev;
    };
    cert.event = event_eval;
    const double tol = cert.grid_tol;
    cert.check = [event_eval, budget, tol](const SampledPath& path, double final_capital) {
        PathCheck pc;
        const EventEval ev = event_eval(path);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (ev.fail_margin <= tol) return pc;
        pc.payoff_required = true;
        pc.required_payoff = budget;
        pc.payoff_met = final_capital >= budget * (1.0 - tol);
        return pc;
    };
    out.certificate = std::move(cert);
    return out;
}

CrossingOutcome simulate_crossing(const SampledPath& path, double T, int n, double eps,
                                  std::size_t max_bets) {
    const std::size_t block = path.grid().dyadic_block(T, n);
    const std::size_t pieces = std::size_t{1} << n;
    CrossingOutcome out;
    std::size_t bets = 0;
    for (std::size_t i = 0; i < pieces; ++i) {
        const std::size_t s0 = i * block;
        const double start = path[s0];
        const bool violating = std::fabs(path[s0 + block] - start) >= 2.0 * eps;
        bool bet_here = false;
        double overshoot = 0.0;
        for (std::size_t r = 1; r < block; ++r) {
            if (bets < max_bets && std::fabs(path[s0 + r] - start) >= eps) {
                bet_here = true;
                ++bets;
                overshoot = std::fabs(path[s0 + r] - start) - eps;
                break;
            }
        }
        if (violating) {
            out.violating_subinterval = true;
            out.bet_on_first_violation = bet_here;
            out.overshoot = overshoot;
            out.bets_used = bets;
            return out;
        }
    }
    out.bets_used = bets;
    return out;
}

StrategyWithCertificate epsilon_crossing_strategy(double T, int n, double eps,
                                                  std::size_t max_bets, const TimeGrid& grid) {
    StrategyWithCertificate out;
    out.strategy = std::make_unique<EpsilonCrossingStrategy>(T, n, eps, max_bets, grid);
    Certificate cert;
    cert.label = "epsilon-crossing";
    cert.T = T;
    cert.n_max = n;
    cert.payoff_target = eps * eps;  // clean-detection win, drift already budgeted
    cert.grid_tol = 1e-9;
    cert.implemented_mass = 0.0;
    auto event_eval = [T, n, eps](const SampledPath& path) {
        EventEval ev;
        const double mi = max_dyadic_increment(path, T, n);
        ev.fail_margin = std::max(0.0, (mi - 2.0 * eps) / (2.0 * eps));
        ev.holds = mi < 2.0 * eps;
        return ev;
    };
    cert.event = event_eval;
    const double tol = cert.grid_tol;
    cert.check = [event_eval, T, n, eps, max_bets, tol](const SampledPath& path,
                                                        double final_capital) {
        PathCheck pc;
        const EventEval ev = event_eval(path);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (ev.holds) return pc;
        const CrossingOutcome oc = simulate_crossing(path, T, n, eps, max_bets);
        const double keep =
            oc.bet_on_first_violation ? std::max(0.0, eps - oc.overshoot) : 0.0;
        if (keep <= 0.0) {
            pc.uncovered = true;
            return pc;
        }
        pc.payoff_required = true;
        pc.required_payoff = keep * keep;
        pc.payoff_met = final_capital >= pc.required_payoff * (1.0 - tol) - 1e-12;
        return pc;
    };
    out.certificate = std::move(cert);
    return out;
}

CompoundWithCertificate modulus_certificate_strategy(double alpha, double T, int n_max,
                                                     const TimeGrid& grid) {
    if (!(alpha > 0.0)) throw std::domain_error("modulus_certificate_strategy: alpha <= 0");
    if (n_max < 1) throw std::domain_error("modulus_certificate_strategy: n_max must be >= 1");
    if (grid.dyadic_block(T, n_max) < 4)
        throw std::domain_error(
            "modulus_certificate_strategy: finest dyadic level needs >= 4 grid steps");

    std::vector<CompoundStrategy::Component> comps;
    double implemented = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const LevelParams p = level_params(alpha, T, n);
        auto qv = qv_budget_strategy(T, n, p.beta, grid);
        comps.push_back(
            {scale_strategy(std::move(qv.strategy), p.beta / (2.0 * T)), p.beta / 2.0});
        auto cross = epsilon_crossing_strategy(T, n, p.eps, p.max_bets, grid);
        comps.push_back(
            {scale_strategy(std::move(cross.strategy), p.cross_scale), p.beta / 2.0});
        implemented += p.beta;
    }
    const double sentinel = std::max(0.0, alpha - implemented);
    comps.push_back({idle_strategy(GameKind::Modified, sentinel), sentinel});

    CompoundWithCertificate out;
    out.strategy = combine("lemma3-modulus", std::move(comps));
    const double tol = 1e-9;
    out.certificate = make_modulus_certificate(
        "lemma3-modulus", alpha, T, n_max, constants::kModulus, 3.0 / 8.0, implemented,
        [alpha, T, n_max, tol](const SampledPath& path) {
            return lemma3_obliged_payoff(path, alpha, T, n_max, tol);
        });
    return out;
}

CompoundWithCertificate qv_bound_strategy(double alpha, double T_max, int n_max,
                                          const TimeGrid& grid) {
    if (!(alpha > 0.0)) throw std::domain_error("qv_bound_strategy: alpha <= 0");
    std::vector<CompoundStrategy::Component> comps;
    std::vector<std::pair<double, int>> pairs;
    double implemented = 0.0;
    for (double T = 1.0; T <= std::min(T_max, grid.horizon()) * (1.0 + 1e-12); T *= 2.0) {
        if (!grid.aligned(T)) continue;
        for (int n = 1; n <= n_max; ++n) {
            if (grid.steps_in(T) % (std::size_t{1} << n) != 0) break;
            const double halfbeta = constants::qv_weight(T, n) * alpha;
            const double beta = 2.0 * halfbeta;
            auto qv = qv_budget_strategy(T, n, beta, grid);
            comps.push_back({scale_strategy(std::move(qv.strategy), halfbeta / T), halfbeta});
            pairs.emplace_back(T, n);
            implemented += halfbeta;
        }
    }
    if (pairs.empty()) throw std::domain_error("qv_bound_strategy: no (T, n) fits the grid");
    const double sentinel = std::max(0.0, alpha - implemented);
    comps.push_back({idle_strategy(GameKind::Modified, sentinel), sentinel});

    CompoundWithCertificate out;
    out.strategy = combine("lemma5-qv-bound", std::move(comps));
    Certificate cert;
    cert.label = "lemma5-qv-bound";
    cert.alpha = alpha;
    cert.T = T_max;
    cert.n_max = n_max;
    cert.payoff_target = 1.0;
    cert.implemented_mass = implemented;
    cert.truncated_mass = std::max(0.0, alpha - implemented);
    cert.lower_prob_bound = 1.0 - implemented;
    cert.grid_tol = 1e-9;
    auto event_eval = [alpha, pairs](const SampledPath& path) {
        EventEval ev;
        for (const auto& [T, n] : pairs) {
            const double qv = dyadic_quadratic_variation(path, T, n);
            const double bound = constants::kQV / alpha * T * T * std::pow(2.0, n / 16.0);
            const double rel = (qv - bound) / bound;
            if (rel > ev.fail_margin) ev.fail_margin = rel;
        }
        ev.holds = ev.fail_margin <= 0.0;
        return ev;
    };
    cert.event = event_eval;
    const double tol = cert.grid_tol;
    cert.check = [event_eval, tol](const SampledPath& path, double final_capital) {
        PathCheck pc;
        const EventEval ev = event_eval(path);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (ev.fail_margin <= tol) return pc;
        // 46 exceeds the sharp payoff threshold 2(2^{1/16}-1)^{-1} ~ 45.2, so
        // the failing pair's scaled component pays a full unit
        pc.payoff_required = true;
        pc.required_payoff = 1.0;
        pc.payoff_met = final_capital >= 1.0 - tol;
        return pc;
    };
    out.certificate = std::move(cert);
    return out;
}

CompoundWithCertificate levy_modulus_strategy(double alpha, double T, int n_max,
                                              const TimeGrid& grid) {
    std::vector<CompoundStrategy::Component> comps;
    const double implemented = append_levy_modulus_components(alpha, T, n_max, grid, comps);
    const double sentinel = std::max(0.0, 2.0 * alpha - implemented);
    comps.push_back({idle_strategy(GameKind::Levy, sentinel), sentinel});

    CompoundWithCertificate out;
    out.strategy = combine("lemma7-levy-modulus", std::move(comps));
    const double tol = 1e-9;
    const double threshold = boundedness_threshold(alpha, T);
    out.certificate = make_modulus_certificate(
        "lemma7-levy-modulus", alpha, T, n_max, constants::kModulus, 3.0 / 8.0, implemented,
        [alpha, T, n_max, tol, threshold](const SampledPath& path) -> std::optional<double> {
            if (grid_sup_abs(path, path.grid().steps_in(T)) > threshold) return 1.0;
            return lemma3_obliged_payoff(path, alpha, T, n_max, tol);
        });
    return out;
}

CompoundWithCertificate levy_super_modulus_strategy(double alpha, double T_max, int n_max,
                                                    const TimeGrid& grid) {
    std::vector<CompoundStrategy::Component> comps;
    std::vector<double> horizons;
    double implemented = 0.0;
    for (double T = 1.0; T <= std::min(T_max, grid.horizon()) * (1.0 + 1e-12); T *= 2.0) {
        if (!grid.aligned(T)) continue;
        const double a = constants::alpha_weight(T) * alpha / 2.0;
        implemented += append_levy_modulus_components(a, T, n_max, grid, comps);
        horizons.push_back(T);
    }
    if (horizons.empty())
        throw std::domain_error("levy_super_modulus_strategy: horizon below T = 1");
    const double sentinel = std::max(0.0, alpha - implemented);
    comps.push_back({idle_strategy(GameKind::Levy, sentinel), sentinel});

    CompoundWithCertificate out;
    out.strategy = combine("lemma8-levy-super-modulus", std::move(comps));
    Certificate cert;
    cert.label = "lemma8-levy-super-modulus";
    cert.alpha = alpha;
    cert.T = T_max;
    cert.n_max = n_max;
    cert.payoff_target = 1.0;
    cert.implemented_mass = implemented;
    cert.truncated_mass = std::max(0.0, alpha - implemented);
    cert.lower_prob_bound = 1.0 - implemented;
    cert.grid_tol = 1e-9;
    // checked at the implemented dyadic T with the (T/2)^{1/2} refinement,
    // which dominates the statement for every real T >= 1
    auto event_eval = [alpha, n_max, horizons](const SampledPath& path) {
        EventEval ev;
        for (double T : horizons) {
            const EventEval sub = modulus_event(
                path, alpha, T, n_max, constants::kLevySuperModulus / std::sqrt(2.0), 0.5);
            if (sub.fail_margin > ev.fail_margin) ev.fail_margin = sub.fail_margin;
        }
        ev.holds = ev.fail_margin <= 0.0;
        return ev;
    };
    cert.event = event_eval;
    const double tol = cert.grid_tol;
    cert.check = [alpha, n_max, horizons, event_eval, tol](const SampledPath& path,
                                                           double final_capital) {
        PathCheck pc;
        const EventEval ev = event_eval(path);
        pc.event_holds = ev.holds;
        pc.fail_margin = ev.fail_margin;
        if (ev.fail_margin <= tol) return pc;
        std::optional<double> payoff;
        for (double T : horizons) {
            const double a = constants::alpha_weight(T) * alpha / 2.0;
            const double threshold = boundedness_threshold(a, T);
            if (grid_sup_abs(path, path.grid().steps_in(T)) > threshold) {
                payoff = std::max(payoff.value_or(0.0), 1.0);
                continue;
            }
            if (auto p = lemma3_obliged_payoff(path, a, T, n_max, tol))
                payoff = std::max(payoff.value_or(0.0), *p);
        }
        if (!payoff) {
            pc.uncovered = true;
            return pc;
        }
        pc.payoff_required = true;
        pc.required_payoff = *payoff;
        pc.payoff_met = final_capital >= *payoff * (1.0 - tol) - 1e-12;
        return pc;
    };
    out.certificate = std::move(cert);
    return out;
}

}  // namespace levygame
