#pragma once

#include <iosfwd>
#include <vector>

#include "levygame/time_grid.hpp"

namespace levygame {

// A continuous path omega observed on a uniform grid, omega(0) = 0.
// Between grid points the path is the piecewise-linear interpolant; every
// supremum / hitting computation in this library is exact for that
// interpolant.
class SampledPath {
  public:
    SampledPath(TimeGrid grid, std::vector<double> values);

    const TimeGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }

    // Piecewise-linear interpolation at an arbitrary t in [0, horizon].
    double at(double t) const;

    void write_csv(std::ostream& os) const;
    static SampledPath read_csv(std::istream& is);

  private:
    TimeGrid grid_;
    std::vector<double> values_;
};

}  // namespace levygame
