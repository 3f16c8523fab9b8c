#include "rmt/spacings.hpp"

#include <cmath>
#include <numbers>

#include "rmt/ensembles.hpp"
#include "rmt/errors.hpp"
#include "rmt/tridiag.hpp"

namespace rmt {

SpacingWindow spacing_window(std::size_t n) {
    const std::size_t first = (n + 3) / 4;
    const std::size_t last_plus_one = (3 * n) / 4;
    if (last_plus_one < first + 2) throw ContractViolation("spectrum too short for a bulk window");
    return {first, last_plus_one - 1};
}

std::vector<double> normalized_spacings(std::span<const double> eigs, std::size_t n, int beta) {
    if (eigs.size() != n) throw ContractViolation("eigenvalue count must equal n");
    if (beta != 1 && beta != 2 && beta != 4) throw ContractViolation("beta must be 1, 2 or 4");
    const SpacingWindow w = spacing_window(n);
    const double edge2 = 2.0 * beta * static_cast<double>(n);
    const double inv = 1.0 / (std::numbers::pi * beta);
    std::vector<double> out;
    out.reserve(w.spacings());
    for (std::size_t k = w.first; k < w.last; ++k) {
        const double disc = edge2 - eigs[k] * eigs[k];
        if (!(disc > 0.0)) throw DomainError("eigenvalue outside the semicircle bulk");
        out.push_back((eigs[k + 1] - eigs[k]) * inv * std::sqrt(disc));
    }
    return out;
}

SpacingBatch simulate_spacing_batch(std::size_t n, std::size_t trials, int beta, std::uint64_t seed,
                                    Execution exec) {
    if (n < 8 || n % 2 != 0) throw ContractViolation("spacing simulation needs even n >= 8");
    const EnsembleSpec spec = EnsembleSpec::exact(n, beta);
    const std::size_t per = spacing_window(n).spacings();

    SpacingBatch batch{std::vector<double>(trials * per), n, beta, trials};
    auto trial = [&](std::size_t i) {
        RngStream rng(seed, i);
        const auto eig = all_eigenvalues(sample_h_beta(spec, rng), kDefaultEigenTol, Execution::serial);
        const auto d = normalized_spacings(eig, n, beta);
        std::copy(d.begin(), d.end(), batch.values.begin() + static_cast<std::ptrdiff_t>(i * per));
    };
    if (exec == Execution::parallel) {
        const auto nt = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < nt; ++i) trial(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < trials; ++i) trial(i);
    }
    return batch;
}

}  // namespace rmt
