#include "levygame/path_stats.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "levygame/kernels.hpp"

namespace levygame {

namespace {

// Breakpoints of the interpolant restricted to [0, T]: grid times <= T plus
// T itself (interpolated when off-grid).
struct Breakpoints {
    std::vector<double> t;
    std::vector<double> v;
};

Breakpoints breakpoints_upto(const SampledPath& path, double T) {
    const auto& grid = path.grid();
    Breakpoints b;
    const double step = grid.step();
    const auto kmax = static_cast<std::size_t>(
        std::min(static_cast<double>(grid.steps()), T / step * (1.0 + 1e-15)));
    b.t.reserve(kmax + 2);
    b.v.reserve(kmax + 2);
    for (std::size_t k = 0; k <= kmax; ++k) {
        const double tk = grid.time(k);
        if (tk > T) break;
        b.t.push_back(tk);
        b.v.push_back(path[k]);
    }
    if (b.t.empty() || b.t.back() < T) {
        b.t.push_back(T);
        b.v.push_back(path.at(T));
    }
    return b;
}

}  // namespace

double modulus_of_continuity(const SampledPath& path, double T, double delta) {
    if (!(T > 0.0)) throw std::domain_error("modulus_of_continuity: T must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("modulus_of_continuity: delta must be > 0");
    if (T > path.grid().horizon() * (1.0 + 1e-12))
        throw std::domain_error("modulus_of_continuity: T beyond the grid horizon");
    T = std::min(T, path.grid().horizon());

    const Breakpoints b = breakpoints_upto(path, T);
    const std::size_t n = b.t.size();

    if (delta >= T) {
        // |s-t| <= delta never binds; extremes of a PL path sit on breakpoints
        const auto [mn, mx] = std::minmax_element(b.v.begin(), b.v.end());
        return *mx - *mn;
    }

    double best = 0.0;
    // 1) breakpoint pairs within the window, via sliding min/max deques
    std::deque<std::size_t> qmin, qmax;
    std::size_t lo = 0;
    for (std::size_t j = 0; j < n; ++j) {
        while (!qmin.empty() && b.v[qmin.back()] >= b.v[j]) qmin.pop_back();
        qmin.push_back(j);
        while (!qmax.empty() && b.v[qmax.back()] <= b.v[j]) qmax.pop_back();
        qmax.push_back(j);
        while (b.t[j] - b.t[lo] > delta) {
            if (qmin.front() == lo) qmin.pop_front();
            if (qmax.front() == lo) qmax.pop_front();
            ++lo;
        }
        best = std::max(best, b.v[j] - b.v[qmin.front()]);
        best = std::max(best, b.v[qmax.front()] - b.v[j]);
    }
    // 2) boundary |s-t| = delta with one endpoint at a breakpoint
    for (std::size_t j = 0; j < n; ++j) {
        const double fwd = b.t[j] + delta;
        if (fwd <= T) best = std::max(best, std::fabs(path.at(fwd) - b.v[j]));
        const double bck = b.t[j] - delta;
        if (bck >= 0.0) best = std::max(best, std::fabs(b.v[j] - path.at(bck)));
    }
    return best;
}

double modulus_grid_aligned(const SampledPath& path, std::size_t stepsT,
                            std::size_t windowSteps) {
    if (stepsT > path.grid().steps())
        throw std::domain_error("modulus_grid_aligned: stepsT beyond the grid");
    if (windowSteps == 0) throw std::domain_error("modulus_grid_aligned: empty window");
    const auto& v = path.values();
    const std::size_t n = stepsT + 1;
    if (windowSteps >= stepsT) {
        const auto [mn, mx] = std::minmax_element(v.begin(), v.begin() + n);
        return *mx - *mn;
    }
    double best = 0.0;
    std::deque<std::size_t> qmin, qmax;
    for (std::size_t j = 0; j < n; ++j) {
        while (!qmin.empty() && v[qmin.back()] >= v[j]) qmin.pop_back();
        qmin.push_back(j);
        while (!qmax.empty() && v[qmax.back()] <= v[j]) qmax.pop_back();
        qmax.push_back(j);
        while (j - qmin.front() > windowSteps) qmin.pop_front();
        while (j - qmax.front() > windowSteps) qmax.pop_front();
        best = std::max(best, v[j] - v[qmin.front()]);
        best = std::max(best, v[qmax.front()] - v[j]);
    }
    return best;
}

double dyadic_quadratic_variation(const SampledPath& path, double T, int n) {
    if (n < 0) throw std::domain_error("dyadic_quadratic_variation: level must be >= 0");
    const std::size_t block = path.grid().dyadic_block(T, n);  // throws on misalignment
    const std::size_t pieces = std::size_t{1} << n;
    std::vector<double> endpoints(pieces + 1);
    for (std::size_t i = 0; i <= pieces; ++i) endpoints[i] = path[i * block];
    return kernels::active().sum_sq_diff(endpoints.data(), endpoints.size());
}

std::optional<std::size_t> first_hitting_index(const SampledPath& path, std::size_t start,
                                               double level, HitMode mode) {
    if (start >= path.size()) throw std::domain_error("first_hitting_index: start beyond grid");
    for (std::size_t k = start; k < path.size(); ++k) {
        const double v = path[k];
        if (mode == HitMode::Abs ? std::fabs(v) >= level : v >= level) return k;
    }
    return std::nullopt;
}

double max_step_increment(const SampledPath& path, std::size_t stepsT) {
    if (stepsT > path.grid().steps())
        throw std::domain_error("max_step_increment: stepsT beyond the grid");
    double best = 0.0;
    for (std::size_t k = 0; k < stepsT; ++k)
        best = std::max(best, std::fabs(path[k + 1] - path[k]));
    return best;
}

PathStats::PathStats(const SampledPath& path) : path_(&path) {
    running_sup_.resize(path.size());
    double sup = 0.0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        sup = std::max(sup, std::fabs(path[k]));
        running_sup_[k] = sup;
    }
}

double PathStats::modulus(double T, double delta) {
    const auto key = std::make_pair(T, delta);
    if (auto it = modulus_.find(key); it != modulus_.end()) return it->second;
    const double m = modulus_of_continuity(*path_, T, delta);
    modulus_.emplace(key, m);
    return m;
}

double PathStats::dyadic_qv(double T, int n) {
    const auto key = std::make_pair(T, n);
    if (auto it = dyadic_qv_.find(key); it != dyadic_qv_.end()) return it->second;
    const double q = dyadic_quadratic_variation(*path_, T, n);
    dyadic_qv_.emplace(key, q);
    return q;
}

}  // namespace levygame
