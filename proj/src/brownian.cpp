#include "levygame/brownian.hpp"

#include <cmath>
#include <stdexcept>

#include "levygame/kernels.hpp"

namespace levygame {

namespace rng {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::uint32_t c[4], std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const auto h0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto l0 = static_cast<std::uint32_t>(p0);
    const auto h1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto l1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t n0 = h1 ^ c[1] ^ k0;
    const std::uint32_t n1 = l1;
    const std::uint32_t n2 = h0 ^ c[3] ^ k1;
    const std::uint32_t n3 = l0;
    c[0] = n0;
    c[1] = n1;
    c[2] = n2;
    c[3] = n3;
}

inline double to_open_unit(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

}  // namespace

std::array<std::uint32_t, 4> philox_block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t block, std::uint32_t domain) {
    std::uint32_t c[4] = {static_cast<std::uint32_t>(block),
                          static_cast<std::uint32_t>(block >> 32) ^ domain,
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    for (int r = 0; r < 10; ++r) {
        round_once(c, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c[0], c[1], c[2], c[3]};
}

void fill_gaussians(std::uint64_t seed, std::uint64_t stream, std::uint32_t domain,
                    double* out, std::size_t n) {
    // two 53-bit uniforms per block, batched through the quantile kernel
    std::vector<double> u(n);
    const std::size_t blocks = (n + 1) / 2;
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto w = philox_block(seed, stream, b, domain);
        const std::uint64_t x0 = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
        const std::uint64_t x1 = (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
        u[2 * b] = to_open_unit(x0);
        if (2 * b + 1 < n) u[2 * b + 1] = to_open_unit(x1);
    }
    kernels::active().normal_quantile(u.data(), out, n);
}

}  // namespace rng

SampledPath BrownianSampler::sample_path(std::uint64_t path_index) const {
    std::vector<double> z(grid_.steps());
    rng::fill_gaussians(seed_, path_index, rng::kDomainPaths, z.data(), z.size());
    const double sd = std::sqrt(grid_.step());
    std::vector<double> values(grid_.steps() + 1);
    values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        acc += sd * z[k];
        values[k + 1] = acc;
    }
    return SampledPath(grid_, std::move(values));
}

void BrownianSampler::sample_increments(std::uint64_t path_index,
                                        std::vector<double>& out) const {
    out.resize(grid_.steps());
    rng::fill_gaussians(seed_, path_index, rng::kDomainPaths, out.data(), out.size());
    const double sd = std::sqrt(grid_.step());
    for (double& v : out) v *= sd;
}

SupProbability prob_sup_abs_below(double c, double T, int terms) {
    if (!(c > 0.0)) throw std::domain_error("prob_sup_abs_below: c must be > 0");
    if (!(T > 0.0)) throw std::domain_error("prob_sup_abs_below: T must be > 0");
    const double a = c / std::sqrt(T);
    const auto Phi = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    const auto band = [&](int k) {
        return Phi((2.0 * k + 1.0) * a) - Phi((2.0 * k - 1.0) * a);
    };
    double value = band(0);
    for (int k = 1; k <= terms; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        value += sgn * (band(k) + band(-k));
    }
    SupProbability out;
    out.value = std::min(1.0, std::max(0.0, value));
    out.remainder_bound = std::fabs(band(terms + 1)) + std::fabs(band(-(terms + 1)));
    out.terms = terms;
    return out;
}

MCEstimate mc_cylinder_expectation(const std::function<double(const std::vector<double>&)>& F,
                                   std::size_t ncoords, double T, std::size_t npaths,
                                   std::uint64_t seed) {
    const double sd = std::sqrt(T / static_cast<double>(ncoords));
    std::vector<double> z(ncoords), coords(ncoords);
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < npaths; ++i) {
        rng::fill_gaussians(seed, i, rng::kDomainCylinder, z.data(), ncoords);
        double acc = 0.0;
        for (std::size_t k = 0; k < ncoords; ++k) {
            acc += sd * z[k];
            coords[k] = acc;
        }
        const double f = F(coords);
        sum += f;
        sumsq += f * f;
    }
    MCEstimate est;
    est.n = npaths;
    est.mean = sum / static_cast<double>(npaths);
    const double var =
        std::max(0.0, sumsq / static_cast<double>(npaths) - est.mean * est.mean);
    est.std_error = std::sqrt(var / static_cast<double>(npaths));
    return est;
}

}  // namespace levygame
