#pragma once

#include <cstddef>
#include <stdexcept>

namespace levygame {

// Uniform time grid on [0, horizon] with K steps; all path and strategy
// timing is expressed in grid indices.
class TimeGrid {
  public:
    TimeGrid(double horizon, std::size_t steps) : horizon_(horizon), steps_(steps) {
        if (!(horizon > 0.0)) throw std::domain_error("TimeGrid: horizon must be > 0");
        if (steps < 1) throw std::domain_error("TimeGrid: steps must be >= 1");
    }

    double horizon() const { return horizon_; }
    std::size_t steps() const { return steps_; }
    double step() const { return horizon_ / static_cast<double>(steps_); }
    double time(std::size_t k) const { return horizon_ * static_cast<double>(k) / static_cast<double>(steps_); }

    // Number of grid steps in [0, T]; throws unless T is grid-aligned.
    std::size_t steps_in(double T, double tol = 1e-9) const {
        if (!(T > 0.0) || T > horizon_ * (1.0 + tol))
            throw std::domain_error("TimeGrid: T outside (0, horizon]");
        const double k = T / step();
        const auto ki = static_cast<std::size_t>(k + 0.5);
        if (ki < 1 || std::abs(k - static_cast<double>(ki)) > tol * static_cast<double>(steps_))
            throw std::domain_error("TimeGrid: T is not grid-aligned");
        return ki;
    }

    bool aligned(double T, double tol = 1e-9) const {
        if (!(T > 0.0) || T > horizon_ * (1.0 + tol)) return false;
        const double k = T / step();
        const auto ki = static_cast<std::size_t>(k + 0.5);
        return ki >= 1 && std::abs(k - static_cast<double>(ki)) <= tol * static_cast<double>(steps_);
    }

    // Grid steps per dyadic subinterval when [0, T] is split into 2^n equal
    // pieces; throws when the grid cannot represent that resolution.
    std::size_t dyadic_block(double T, int n) const {
        if (n < 0) throw std::domain_error("TimeGrid: dyadic level must be >= 0");
        const std::size_t kT = steps_in(T);
        if (n >= 63) throw std::domain_error("TimeGrid: dyadic level too large");
        const std::size_t pieces = std::size_t{1} << n;
        if (kT % pieces != 0)
            throw std::domain_error("TimeGrid: 2^n does not divide the steps in [0, T]");
        return kT / pieces;
    }

    bool operator==(const TimeGrid& o) const {
        return horizon_ == o.horizon_ && steps_ == o.steps_;
    }

  private:
    double horizon_;
    std::size_t steps_;
};

}  // namespace levygame
