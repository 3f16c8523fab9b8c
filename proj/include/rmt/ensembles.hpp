#pragma once

#include <cstdint>
#include <vector>

#include "rmt/parallel.hpp"
#include "rmt/random.hpp"
#include "rmt/tridiag.hpp"

namespace rmt {

enum class SamplingMode {
    /// Full n x n beta-Hermite tridiagonal matrix with chi off-diagonals.
    exact,
    /// Upper-left cutoff x cutoff corner of the edge-scaled matrix with the
    /// off-diagonal replaced by its deterministic large-n limit.
    large_n_approx,
};

/// Smallest n for which the large-n approximation is accepted.
inline constexpr std::uint64_t kLargeNThreshold = 1'000'000;

/// Default truncation size round(10 n^(1/3)), never larger than n.
std::uint64_t default_cutoff(std::uint64_t n);

struct EnsembleSpec {
    std::uint64_t n = 0;
    int beta = 2;
    std::uint64_t cutoff = 0;
    SamplingMode mode = SamplingMode::exact;

    static EnsembleSpec exact(std::uint64_t n, int beta);
    /// cutoff = 0 selects default_cutoff(n).
    static EnsembleSpec large_n(std::uint64_t n, int beta, std::uint64_t cutoff = 0);

    /// Throws ContractViolation on an inconsistent spec.
    void validate() const;
};

/// Draw X >= 0 with X^2 ~ chi-squared(d): sqrt of a Gamma(d/2, scale 2) draw.
double chi_sample(double d, RngStream& rng);

/// beta-Hermite matrix: diagonal N(0,2)/sqrt(2), off-diagonal k (1-based)
/// chi_{(n-k) beta}/sqrt(2).
TridiagonalSymmetric sample_h_beta(const EnsembleSpec& spec, RngStream& rng);

/// Edge-scaled, truncated matrix for huge n. Off-diagonal k is
/// sqrt(n-k)/(2 sqrt(n)); the diagonal is N(0,1)/sqrt(n beta), which also
/// carries the variance of the dropped off-diagonal fluctuations. Its
/// largest eigenvalue is close to 1.
TridiagonalSymmetric sample_truncated_scaled(const EnsembleSpec& spec, RngStream& rng);

/// (lambda_max - 1) * 2 n^(2/3) for a matrix scaled so the spectral edge is 1.
double scale_max(double lambda_max, std::uint64_t n);

/// Scaled largest eigenvalue for `trials` independent draws; trial i uses
/// RngStream(seed, i). Exact mode rescales by the edge sqrt(2 beta n).
std::vector<double> simulate_largest(const EnsembleSpec& spec, std::uint64_t trials,
                                     std::uint64_t seed, Execution exec = Execution::parallel);

}  // namespace rmt
