#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmt/parallel.hpp"

namespace rmt {

struct SpacingBatch {
    std::vector<double> values;
    std::size_t n = 0;
    int beta = 2;
    std::size_t trials = 0;
};

/// Bulk window of 0-based eigenvalue indices [first, last] used for
/// spacings: first = ceil(n/4), last = floor(3n/4) - 1.
struct SpacingWindow {
    std::size_t first;
    std::size_t last;
    std::size_t spacings() const noexcept { return last - first; }
};
SpacingWindow spacing_window(std::size_t n);

/// Semicircle-unfolded consecutive spacings
///   (lambda_{k+1} - lambda_k) / (pi beta) * sqrt(2 beta n - lambda_k^2)
/// for k over the bulk window. Throws DomainError if lambda_k^2 >= 2 beta n
/// inside the window.
std::vector<double> normalized_spacings(std::span<const double> eigs, std::size_t n, int beta);

/// `trials` beta-Hermite draws (trial i on RngStream(seed, i)), all
/// eigenvalues of each, normalized spacings concatenated in trial order.
SpacingBatch simulate_spacing_batch(std::size_t n, std::size_t trials, int beta, std::uint64_t seed,
                                    Execution exec = Execution::parallel);

}  // namespace rmt
