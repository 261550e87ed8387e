#include "levygame/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace levygame {

double CapitalTrajectory::sup() const {
    return *std::max_element(values.begin(), values.end());
}

double CapitalTrajectory::min() const {
    return *std::min_element(values.begin(), values.end());
}

CapitalTrajectory evaluate_capital(const ElementaryStrategy& strategy, const SampledPath& path,
                                   const EvalOptions& opts) {
    auto strat = strategy.clone();
    const auto& grid = path.grid();
    strat->begin(grid);

    const double c0 = opts.initial_capital.value_or(strat->initial_capital());
    const double bound = strat->stake_bound();
    const GameKind game = strat->game();
    const std::size_t K = grid.steps();

    CapitalTrajectory out;
    out.values.assign(K + 1, c0);

    double M = 0.0, V = 0.0;
    std::size_t anchor = 0;
    double cap = c0;
    bool poisoned = false;

    for (std::size_t k = 0; k < K; ++k) {
        if (!poisoned) {
            const StakeDecision d = strat->decide(path, k, cap);
            if (d.rebalance) {
                M = d.M;
                V = d.V;
                anchor = k;
                if (std::fabs(M) > bound || std::fabs(V) > bound)
                    out.faults.push_back({EngineFault::Kind::StakeBound, k,
                                          std::max(std::fabs(M), std::fabs(V))});
            }
            const double dOmega = path[k + 1] - path[k];
            double gain = M * dOmega;
            if (game == GameKind::Levy) {
                const double legNew = path[k + 1] * path[k + 1] - grid.time(k + 1);
                const double legOld = path[k] * path[k] - grid.time(k);
                gain += V * (legNew - legOld);
            } else {
                const double a = path[anchor];
                const double ta = grid.time(anchor);
                const double dNew = path[k + 1] - a;
                const double dOld = path[k] - a;
                const double legNew = dNew * dNew - (grid.time(k + 1) - ta);
                const double legOld = dOld * dOld - (grid.time(k) - ta);
                gain += V * (legNew - legOld);
            }
            const double next = cap + gain;
            if (!std::isfinite(next)) {
                out.faults.push_back({EngineFault::Kind::NonFinite, k + 1, next});
                poisoned = true;  // freeze at the last finite value
            } else {
                cap = next;
            }
        }
        out.values[k + 1] = cap;
    }

    if (opts.floor) {
        for (std::size_t k = 0; k <= K; ++k) {
            if (out.values[k] < *opts.floor) {
                out.floor_hit = k;
                break;
            }
        }
    }
    return out;
}

void write_capital_csv(const TimeGrid& grid, const CapitalTrajectory& traj, std::ostream& os) {
    os << "t,capital\n";
    char buf[64];
    for (std::size_t k = 0; k < traj.values.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid.time(k), traj.values[k]);
        os << buf;
    }
}

namespace {

class LevyConversionStrategy final : public ElementaryStrategy {
  public:
    explicit LevyConversionStrategy(std::unique_ptr<ElementaryStrategy> inner)
        : inner_(std::move(inner)) {
        if (inner_->game() != GameKind::Modified)
            throw std::invalid_argument("convert_modified_to_levy: inner must play the modified game");
    }

    GameKind game() const override { return GameKind::Levy; }
    double initial_capital() const override { return inner_->initial_capital(); }
    double stake_bound() const override { return inner_->stake_bound(); }
    std::string name() const override { return inner_->name() + "/levy"; }
    void begin(const TimeGrid& grid) override { inner_->begin(grid); }

    StakeDecision decide(const SampledPath& path, std::size_t k, double capital) override {
        const StakeDecision d = inner_->decide(path, k, capital);
        if (!d.rebalance) return StakeDecision::hold();
        return StakeDecision::set(d.M - 2.0 * path[k] * d.V, d.V);
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<LevyConversionStrategy>(inner_->clone());
    }

  private:
    std::unique_ptr<ElementaryStrategy> inner_;
};

class LevyTransferStrategy final : public ElementaryStrategy {
  public:
    LevyTransferStrategy(std::unique_ptr<ElementaryStrategy> inner, double stop_level)
        : inner_(std::move(inner)), stop_level_(stop_level) {
        if (!(stop_level > 0.0))
            throw std::invalid_argument("levy_transfer: stop_level must be > 0");
        if (inner_->game() != GameKind::Modified)
            throw std::invalid_argument("levy_transfer: inner must play the modified game");
    }

    GameKind game() const override { return GameKind::Levy; }
    double initial_capital() const override { return inner_->initial_capital(); }
    double stake_bound() const override {
        return inner_->stake_bound() * (1.0 + 2.0 * stop_level_);
    }
    std::string name() const override { return inner_->name() + "/levy-stopped"; }

    void begin(const TimeGrid& grid) override {
        inner_->begin(grid);
        stopped_ = false;
    }

    StakeDecision decide(const SampledPath& path, std::size_t k, double capital) override {
        if (stopped_) return StakeDecision::hold();
        if (std::fabs(path[k]) >= stop_level_) {
            stopped_ = true;
            return StakeDecision::set(0.0, 0.0);
        }
        const StakeDecision d = inner_->decide(path, k, capital);
        if (!d.rebalance) return StakeDecision::hold();
        return StakeDecision::set(d.M - 2.0 * path[k] * d.V, d.V);
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<LevyTransferStrategy>(inner_->clone(), stop_level_);
    }

  private:
    std::unique_ptr<ElementaryStrategy> inner_;
    double stop_level_;
    bool stopped_ = false;
};

class ScaledStrategy final : public ElementaryStrategy {
  public:
    ScaledStrategy(std::unique_ptr<ElementaryStrategy> inner, double lambda)
        : inner_(std::move(inner)), lambda_(lambda) {
        if (!(lambda > 0.0)) throw std::invalid_argument("scale_strategy: lambda must be > 0");
    }

    GameKind game() const override { return inner_->game(); }
    double initial_capital() const override { return lambda_ * inner_->initial_capital(); }
    double stake_bound() const override { return lambda_ * inner_->stake_bound(); }
    std::string name() const override { return inner_->name() + "*"; }
    void begin(const TimeGrid& grid) override { inner_->begin(grid); }

    StakeDecision decide(const SampledPath& path, std::size_t k, double capital) override {
        const StakeDecision d = inner_->decide(path, k, capital / lambda_);
        if (!d.rebalance) return StakeDecision::hold();
        return StakeDecision::set(lambda_ * d.M, lambda_ * d.V);
    }

    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<ScaledStrategy>(inner_->clone(), lambda_);
    }

  private:
    std::unique_ptr<ElementaryStrategy> inner_;
    double lambda_;
};

class IdleStrategy final : public ElementaryStrategy {
  public:
    IdleStrategy(GameKind game, double c) : game_(game), c_(c) {}
    GameKind game() const override { return game_; }
    double initial_capital() const override { return c_; }
    double stake_bound() const override { return 0.0; }
    std::string name() const override { return "idle"; }
    void begin(const TimeGrid&) override {}
    StakeDecision decide(const SampledPath&, std::size_t, double) override {
        return StakeDecision::hold();
    }
    std::unique_ptr<ElementaryStrategy> clone() const override {
        return std::make_unique<IdleStrategy>(game_, c_);
    }

  private:
    GameKind game_;
    double c_;
};

}  // namespace

std::unique_ptr<ElementaryStrategy> convert_modified_to_levy(
    std::unique_ptr<ElementaryStrategy> inner) {
    return std::make_unique<LevyConversionStrategy>(std::move(inner));
}

std::unique_ptr<ElementaryStrategy> levy_transfer(std::unique_ptr<ElementaryStrategy> inner,
                                                  double stop_level) {
    return std::make_unique<LevyTransferStrategy>(std::move(inner), stop_level);
}

std::unique_ptr<ElementaryStrategy> scale_strategy(std::unique_ptr<ElementaryStrategy> inner,
                                                   double lambda) {
    return std::make_unique<ScaledStrategy>(std::move(inner), lambda);
}

std::unique_ptr<ElementaryStrategy> idle_strategy(GameKind game, double c) {
    return std::make_unique<IdleStrategy>(game, c);
}

CompoundStrategy::CompoundStrategy(std::string name, std::vector<Component> components)
    : name_(std::move(name)), components_(std::move(components)) {
    for (const auto& c : components_) {
        if (!(c.capital >= 0.0))
            throw std::invalid_argument("CompoundStrategy: component capital must be >= 0");
        if (!c.strategy) throw std::invalid_argument("CompoundStrategy: null component");
    }
}

CompoundStrategy::CompoundStrategy(const CompoundStrategy& o) : name_(o.name_) {
    components_.reserve(o.components_.size());
    for (const auto& c : o.components_) components_.push_back({c.strategy->clone(), c.capital});
}

CompoundStrategy& CompoundStrategy::operator=(const CompoundStrategy& o) {
    if (this != &o) *this = CompoundStrategy(o);
    return *this;
}

double CompoundStrategy::total_capital() const {
    double s = 0.0;
    for (const auto& c : components_) s += c.capital;
    return s;
}

double CompoundStrategy::pos_tol() const { return 1e-9 * std::max(1.0, total_capital()); }

CompoundStrategy combine(std::string name, std::vector<CompoundStrategy::Component> components) {
    return CompoundStrategy(std::move(name), std::move(components));
}

CompoundEval evaluate_compound(const CompoundStrategy& compound, const SampledPath& path) {
    const double pos_tol = compound.pos_tol();
    const std::size_t K = path.grid().steps();
    CompoundEval out;
    out.compound.values.assign(K + 1, 0.0);
    out.component_finals.reserve(compound.components().size());
    for (std::size_t ci = 0; ci < compound.components().size(); ++ci) {
        const auto& comp = compound.components()[ci];
        EvalOptions opts;
        opts.initial_capital = comp.capital;
        const CapitalTrajectory traj = evaluate_capital(*comp.strategy, path, opts);
        for (std::size_t k = 0; k <= K; ++k) {
            out.compound.values[k] += traj.values[k];
            if (traj.values[k] < -pos_tol) {
                if (out.violations.empty() || out.violations.back().component != ci)
                    out.violations.push_back({ci, k, traj.values[k]});
            }
        }
        for (const auto& f : traj.faults) out.compound.faults.push_back(f);
        out.component_finals.push_back(traj.final_capital());
    }
    return out;
}

UpperProbabilityReport upper_probability_estimate(const CompoundStrategy& compound,
                                                  const PathPredicate& event,
                                                  const std::vector<SampledPath>& corpus,
                                                  double grid_tol) {
    UpperProbabilityReport report;
    report.s0 = compound.total_capital();
    report.grid_tol = grid_tol;
    report.witness = true;
    report.per_path.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& path = corpus[i];
        CompoundEval ev = evaluate_compound(compound, path);
        UpperProbabilityRecord rec;
        rec.path_id = i;
        rec.event_holds = event(path);
        rec.final_capital = ev.compound.final_capital();
        rec.violations = std::move(ev.violations);
        const double floor = -compound.pos_tol();
        for (std::size_t k = 0; k < ev.compound.values.size(); ++k) {
            if (ev.compound.values[k] < floor) {
                rec.floor_hit = k;
                break;
            }
        }
        rec.covered = !rec.event_holds || rec.final_capital >= 1.0 - grid_tol;
        if (!rec.covered || !rec.violations.empty()) report.witness = false;
        report.per_path.push_back(std::move(rec));
    }
    return report;
}

}  // namespace levygame
