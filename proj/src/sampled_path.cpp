#include "levygame/sampled_path.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace levygame {

SampledPath::SampledPath(TimeGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.steps() + 1)
        throw std::invalid_argument("SampledPath: values size must be steps()+1");
    if (values_[0] != 0.0)
        throw std::invalid_argument("SampledPath: omega(0) must be 0");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("SampledPath: non-finite value");
}

double SampledPath::at(double t) const {
    const double T = grid_.horizon();
    if (t <= 0.0) return 0.0;
    if (t >= T) return values_.back();
    const double x = t / grid_.step();
    auto k = static_cast<std::size_t>(x);
    if (k >= grid_.steps()) k = grid_.steps() - 1;
    const double frac = x - static_cast<double>(k);
    return values_[k] + frac * (values_[k + 1] - values_[k]);
}

void SampledPath::write_csv(std::ostream& os) const {
    os << "t,omega\n";
    char buf[64];
    for (std::size_t k = 0; k < values_.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid_.time(k), values_[k]);
        os << buf;
    }
}

SampledPath SampledPath::read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("t,omega", 0) != 0)
        throw std::runtime_error("SampledPath: missing t,omega header");
    std::vector<double> ts, vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error("SampledPath: bad CSV row");
        ts.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    if (ts.size() < 2) throw std::runtime_error("SampledPath: need at least two rows");
    return SampledPath(TimeGrid(ts.back(), ts.size() - 1), std::move(vs));
}

}  // namespace levygame
