#include "rmt/prolate.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr double pi = std::numbers::pi;
// Eigenvalues near 1 enter through 1 - lambda; bisect to full precision.
constexpr double kProlateEigenTol = 2.0 * std::numeric_limits<double>::epsilon();

void check_w(double w) {
    if (!(w >= 0.0 && w < 0.5)) throw DomainError("prolate bandwidth w must lie in [0, 1/2)");
}

}  // namespace

DenseSymmetric prolate_matrix(std::size_t n, double w) {
    if (n == 0) throw ContractViolation("prolate matrix needs n >= 1");
    check_w(w);
    std::vector<double> a(n);
    a[0] = 2.0 * w;
    for (std::size_t k = 1; k < n; ++k) a[k] = std::sin(2.0 * pi * w * static_cast<double>(k)) / (pi * static_cast<double>(k));
    DenseSymmetric m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, a[j - i]);
    return m;
}

TridiagonalSymmetric commuting_tridiagonal(std::size_t n, double w) {
    if (n == 0) throw ContractViolation("commuting tridiagonal needs n >= 1");
    check_w(w);
    const double c = std::cos(2.0 * pi * w);
    const double half = 0.5 * static_cast<double>(n + 1);
    std::vector<double> diag(n), off(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const double d = half - static_cast<double>(k);
        diag[k - 1] = d * d * c;
    }
    for (std::size_t k = 1; k < n; ++k) off[k - 1] = 0.5 * static_cast<double>(k) * static_cast<double>(n - k);
    return TridiagonalSymmetric(std::move(diag), std::move(off));
}

double gap_probability(double s, std::size_t n) {
    if (n == 0) throw ContractViolation("gap probability needs n >= 1");
    if (!(s >= 0.0)) throw DomainError("gap probability needs s >= 0");
    const double w = s / (2.0 * static_cast<double>(n));
    if (!(w < 0.5)) throw DomainError("s / (2n) must stay below 1/2");
    if (s == 0.0) return 1.0;

    const auto eig = dense_symmetric_eigenvalues(prolate_matrix(n, w), kProlateEigenTol);
    bool all_positive = true;
    for (double l : eig) all_positive = all_positive && (1.0 - l) > 0.0;
    if (all_positive) {
        double log_sum = 0.0;
        for (double l : eig) log_sum += std::log1p(-l);
        return std::exp(log_sum);
    }
    double prod = 1.0;
    for (double l : eig) prod *= 1.0 - l;
    return prod;
}

std::vector<double> gap_probability_curve(std::span<const double> s_grid, std::size_t n, Execution exec) {
    std::vector<double> out(s_grid.size());
    if (exec == Execution::parallel) {
        const auto m = static_cast<long long>(s_grid.size());
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < m; ++i) out[i] = gap_probability(s_grid[i], n);
    } else {
        for (std::size_t i = 0; i < s_grid.size(); ++i) out[i] = gap_probability(s_grid[i], n);
    }
    return out;
}

RichardsonResult richardson_extrapolate(std::vector<std::vector<double>> columns, int order_start) {
    if (columns.size() < 2) throw ContractViolation("Richardson extrapolation needs at least two sizes");
    const std::size_t len = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != len) throw ContractViolation("Richardson columns must have equal length");

    RichardsonResult r;
    r.stages.push_back(std::move(columns));
    for (int stage = 1; r.stages.back().size() > 1; ++stage) {
        const auto& prev = r.stages.back();
        const double divisor = std::ldexp(1.0, order_start + stage - 1) - 1.0;
        std::vector<std::vector<double>> next(prev.size() - 1, std::vector<double>(len));
        for (std::size_t j = 0; j + 1 < prev.size(); ++j)
            for (std::size_t i = 0; i < len; ++i)
                next[j][i] = prev[j + 1][i] + (prev[j + 1][i] - prev[j][i]) / divisor;
        r.stages.push_back(std::move(next));
    }
    return r;
}

ProlateResult prolate_extrapolation(std::span<const double> s_grid, std::span<const std::size_t> sizes,
                                    Execution exec) {
    if (sizes.size() < 2) throw ContractViolation("need at least two sizes");
    for (std::size_t j = 1; j < sizes.size(); ++j)
        if (sizes[j] != 2 * sizes[j - 1]) throw ContractViolation("sizes must double");
    ProlateResult res;
    res.s.assign(s_grid.begin(), s_grid.end());
    res.sizes.assign(sizes.begin(), sizes.end());
    for (std::size_t n : sizes) res.E_by_n.push_back(gap_probability_curve(s_grid, n, exec));
    res.richardson = richardson_extrapolate(res.E_by_n);
    res.E_extrapolated = res.richardson.extrapolated();
    return res;
}

std::vector<std::vector<double>> richardson_error_table(const RichardsonResult& r,
                                                        std::span<const double> reference) {
    std::vector<std::vector<double>> table;
    for (const auto& stage : r.stages) {
        std::vector<double> row;
        for (const auto& col : stage) {
            if (col.size() != reference.size()) throw ContractViolation("reference length mismatch");
            double m = 0.0;
            for (std::size_t i = 0; i < col.size(); ++i) m = std::max(m, std::fabs(col[i] - reference[i]));
            row.push_back(m);
        }
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace rmt
