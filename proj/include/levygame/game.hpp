#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levygame/sampled_path.hpp"

namespace levygame {

enum class GameKind { Levy, Modified };

// One stake announcement. When rebalance is set the engine re-anchors the
// variance leg at the current index (modified game) and holds (M, V) constant
// until the next rebalance.
struct StakeDecision {
    bool rebalance = false;
    double M = 0.0;
    double V = 0.0;

    static StakeDecision hold() { return {}; }
    static StakeDecision set(double m, double v) { return {true, m, v}; }
};

// An elementary betting strategy: an online rule that, at every grid index k
// (observing only values[0..k] and its own running capital), either holds or
// rebalances. Strategies carry per-run state; clone one per path.
class ElementaryStrategy {
  public:
    virtual ~ElementaryStrategy() = default;
    virtual GameKind game() const = 0;
    virtual double initial_capital() const = 0;
    virtual double stake_bound() const = 0;
    virtual std::string name() const = 0;
    virtual void begin(const TimeGrid& grid) = 0;
    virtual StakeDecision decide(const SampledPath& path, std::size_t k, double capital) = 0;
    virtual std::unique_ptr<ElementaryStrategy> clone() const = 0;
};

struct EngineFault {
    enum class Kind { StakeBound, NonFinite };
    Kind kind;
    std::size_t index;
    double value;
};

struct CapitalTrajectory {
    std::vector<double> values;  // capital at each grid index, values[0] = c
    std::optional<std::size_t> floor_hit;
    std::vector<EngineFault> faults;

    double final_capital() const { return values.back(); }
    double sup() const;
    double min() const;
};

struct EvalOptions {
    std::optional<double> initial_capital;  // override the strategy's own c
    std::optional<double> floor;            // record first index capital < floor
};

// Eq-(1)-style capital accumulation for either game. The strategy prototype
// is cloned, so evaluation is pure with respect to its argument.
CapitalTrajectory evaluate_capital(const ElementaryStrategy& strategy, const SampledPath& path,
                                   const EvalOptions& opts = {});

void write_capital_csv(const TimeGrid& grid, const CapitalTrajectory& traj, std::ostream& os);

// Modified-game strategy replayed in the Levy game: at each anchor tau the
// stakes become M' = M - 2 omega(tau) V, V' = V, which reproduces the
// modified-game capital pointwise. The declared stake bound is inherited
// from the inner strategy; the engine flags (does not stop on) excursions
// beyond it — wrap with levy_transfer to keep stakes bounded.
std::unique_ptr<ElementaryStrategy> convert_modified_to_levy(
    std::unique_ptr<ElementaryStrategy> inner);

// Conversion plus forced liquidation at the quantized hitting time of
// |omega| >= stop_level; converted stakes stay within
// M_bound + 2 stop_level V_bound.
std::unique_ptr<ElementaryStrategy> levy_transfer(std::unique_ptr<ElementaryStrategy> inner,
                                                  double stop_level);

// Uniform scaling (capital and stakes by lambda > 0); positivity and payoff
// statements scale with it.
std::unique_ptr<ElementaryStrategy> scale_strategy(std::unique_ptr<ElementaryStrategy> inner,
                                                   double lambda);

// Never bets; capital stays at c. Used to carry truncated tail mass so a
// compound's S_0 is preserved exactly.
std::unique_ptr<ElementaryStrategy> idle_strategy(GameKind game, double c);

// A positive capital process: components with their assigned initial
// capitals c_n, each obliged to stay >= -posTol on every evaluated path.
class CompoundStrategy {
  public:
    struct Component {
        std::unique_ptr<ElementaryStrategy> strategy;
        double capital;
    };

    CompoundStrategy() = default;
    CompoundStrategy(std::string name, std::vector<Component> components);
    CompoundStrategy(const CompoundStrategy& o);
    CompoundStrategy& operator=(const CompoundStrategy& o);
    CompoundStrategy(CompoundStrategy&&) = default;
    CompoundStrategy& operator=(CompoundStrategy&&) = default;

    const std::string& name() const { return name_; }
    const std::vector<Component>& components() const { return components_; }
    double total_capital() const;
    double pos_tol() const;  // 1e-9 * max(1, S_0)

  private:
    std::string name_;
    std::vector<Component> components_;
};

CompoundStrategy combine(std::string name, std::vector<CompoundStrategy::Component> components);

struct PositivityViolation {
    std::size_t component;
    std::size_t index;
    double value;
};

struct CompoundEval {
    CapitalTrajectory compound;
    std::vector<double> component_finals;
    std::vector<PositivityViolation> violations;
};

CompoundEval evaluate_compound(const CompoundStrategy& compound, const SampledPath& path);

// Per-path record of the upper-probability check: whenever the event holds,
// the compound's final capital must reach >= 1 (up to the grid tolerance).
struct UpperProbabilityRecord {
    std::size_t path_id;
    bool event_holds;
    double final_capital;
    std::optional<std::size_t> floor_hit;
    std::vector<PositivityViolation> violations;
    bool covered;  // event_holds implies final >= 1 - grid_tol
};

struct UpperProbabilityReport {
    double s0;
    double grid_tol;
    bool witness;  // covered on every path, no positivity violations
    std::vector<UpperProbabilityRecord> per_path;
};

using PathPredicate = std::function<bool(const SampledPath&)>;

UpperProbabilityReport upper_probability_estimate(const CompoundStrategy& compound,
                                                  const PathPredicate& event,
                                                  const std::vector<SampledPath>& corpus,
                                                  double grid_tol = 1e-9);

}  // namespace levygame
