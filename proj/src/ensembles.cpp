#include "rmt/ensembles.hpp"

#include <cmath>
#include <string>

#include "rmt/errors.hpp"

namespace rmt {

namespace {
// Storage ceiling for the exact sampler (two vectors of n doubles).
constexpr std::uint64_t kMaxExactN = std::uint64_t{1} << 28;
}  // namespace

std::uint64_t default_cutoff(std::uint64_t n) {
    const auto c = static_cast<std::uint64_t>(std::llround(10.0 * std::cbrt(static_cast<double>(n))));
    return std::max<std::uint64_t>(1, std::min(c, n));
}

EnsembleSpec EnsembleSpec::exact(std::uint64_t n, int beta) {
    EnsembleSpec s{n, beta, n, SamplingMode::exact};
    s.validate();
    return s;
}

EnsembleSpec EnsembleSpec::large_n(std::uint64_t n, int beta, std::uint64_t cutoff) {
    EnsembleSpec s{n, beta, cutoff == 0 ? default_cutoff(n) : cutoff, SamplingMode::large_n_approx};
    s.validate();
    return s;
}

void EnsembleSpec::validate() const {
    if (n == 0) throw ContractViolation("ensemble size n must be positive");
    if (beta != 1 && beta != 2 && beta != 4) throw ContractViolation("beta must be 1, 2 or 4");
    if (cutoff == 0 || cutoff > n) throw ContractViolation("cutoff must satisfy 1 <= cutoff <= n");
    if (mode == SamplingMode::large_n_approx && n < kLargeNThreshold)
        throw ContractViolation("large-n approximation requires n >= " + std::to_string(kLargeNThreshold));
    if (mode == SamplingMode::exact && n > kMaxExactN)
        throw ContractViolation("n too large for the exact sampler");
}

double chi_sample(double d, RngStream& rng) {
    if (!(d > 0.0)) throw DomainError("chi degrees of freedom must be positive");
    return std::sqrt(2.0 * rng.gamma(0.5 * d));
}

TridiagonalSymmetric sample_h_beta(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.mode != SamplingMode::exact) throw ContractViolation("sample_h_beta requires exact mode");
    const std::size_t n = spec.n;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> diag(n), offdiag(n - 1);
    for (std::size_t i = 0; i < n; ++i) diag[i] = rng.normal();
    for (std::size_t k = 1; k < n; ++k)
        offdiag[k - 1] = chi_sample(static_cast<double>((n - k) * spec.beta), rng) * inv_sqrt2;
    return TridiagonalSymmetric(std::move(diag), std::move(offdiag));
}

TridiagonalSymmetric sample_truncated_scaled(const EnsembleSpec& spec, RngStream& rng) {
    spec.validate();
    if (spec.mode != SamplingMode::large_n_approx)
        throw ContractViolation("sample_truncated_scaled requires large-n mode");
    const std::size_t m = spec.cutoff;
    const double n = static_cast<double>(spec.n);
    const double diag_scale = 1.0 / std::sqrt(n * spec.beta);
    std::vector<double> diag(m), offdiag(m - 1);
    for (std::size_t i = 0; i < m; ++i) diag[i] = rng.normal() * diag_scale;
    for (std::size_t k = 1; k < m; ++k)
        offdiag[k - 1] = 0.5 * std::sqrt((n - static_cast<double>(k)) / n);
    return TridiagonalSymmetric(std::move(diag), std::move(offdiag));
}

double scale_max(double lambda_max, std::uint64_t n) {
    return (lambda_max - 1.0) * 2.0 * std::pow(static_cast<double>(n), 2.0 / 3.0);
}

std::vector<double> simulate_largest(const EnsembleSpec& spec, std::uint64_t trials,
                                     std::uint64_t seed, Execution exec) {
    spec.validate();
    std::vector<double> out(trials);
    auto trial = [&](std::uint64_t i) {
        RngStream rng(seed, i);
        if (spec.mode == SamplingMode::large_n_approx) {
            out[i] = scale_max(max_eigenvalue(sample_truncated_scaled(spec, rng)), spec.n);
        } else {
            const double edge = std::sqrt(2.0 * spec.beta * static_cast<double>(spec.n));
            out[i] = scale_max(max_eigenvalue(sample_h_beta(spec, rng)) / edge, spec.n);
        }
    };
    if (exec == Execution::parallel) {
        const auto nt = static_cast<long long>(trials);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < nt; ++i) trial(static_cast<std::uint64_t>(i));
    } else {
        for (std::uint64_t i = 0; i < trials; ++i) trial(i);
    }
    return out;
}

}  // namespace rmt
