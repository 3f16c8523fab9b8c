#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmt/parallel.hpp"
#include "rmt/tridiag.hpp"

namespace rmt {

/// n x n symmetric Toeplitz prolate matrix with first row
/// a_0 = 2w, a_k = sin(2 pi w k) / (pi k). Requires 0 <= w < 1/2.
DenseSymmetric prolate_matrix(std::size_t n, double w);

/// Tridiagonal matrix commuting with prolate_matrix(n, w):
/// diag ((n+1)/2 - k)^2 cos(2 pi w), off-diagonal k (n - k) / 2, k 1-based.
TridiagonalSymmetric commuting_tridiagonal(std::size_t n, double w);

/// Gap probability of the n-point discretized sine kernel:
/// prod_i (1 - lambda_i) over the eigenvalues of prolate_matrix(n, s / (2n)).
double gap_probability(double s, std::size_t n);

/// gap_probability over a grid of s values.
std::vector<double> gap_probability_curve(std::span<const double> s_grid, std::size_t n,
                                          Execution exec = Execution::parallel);

/// Repeated Richardson elimination across doubling sizes. Stage 0 is the
/// input; stage i has one column fewer, column j <- c[j+1] + (c[j+1] - c[j])
/// / (2^(order_start + i - 1) - 1).
struct RichardsonResult {
    /// stages[i][j] is column j (a curve over the grid) of stage i.
    std::vector<std::vector<std::vector<double>>> stages;
    const std::vector<double>& extrapolated() const { return stages.back().front(); }
};

RichardsonResult richardson_extrapolate(std::vector<std::vector<double>> columns, int order_start = 2);

struct ProlateResult {
    std::vector<double> s;
    std::vector<std::size_t> sizes;
    /// E_by_n[j] is the curve for sizes[j].
    std::vector<std::vector<double>> E_by_n;
    std::vector<double> E_extrapolated;
    RichardsonResult richardson;
};

/// Gap probabilities for each size (which must strictly double) and their
/// Richardson extrapolation.
ProlateResult prolate_extrapolation(std::span<const double> s_grid, std::span<const std::size_t> sizes,
                                    Execution exec = Execution::parallel);

/// Max-norm error of every Richardson stage column against a reference
/// curve: result[i][j] is stage i, column j.
std::vector<std::vector<double>> richardson_error_table(const RichardsonResult& r,
                                                        std::span<const double> reference);

}  // namespace rmt
