#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmt/parallel.hpp"

namespace rmt {

/// Real symmetric tridiagonal matrix stored as its diagonal and the single
/// (shared) off-diagonal.
class TridiagonalSymmetric {
public:
    TridiagonalSymmetric() = default;
    /// Throws ContractViolation unless offdiag.size() + 1 == diag.size() >= 1.
    TridiagonalSymmetric(std::vector<double> diag, std::vector<double> offdiag);

    std::size_t size() const noexcept { return diag_.size(); }
    std::span<const double> diag() const noexcept { return diag_; }
    std::span<const double> offdiag() const noexcept { return offdiag_; }

private:
    std::vector<double> diag_;
    std::vector<double> offdiag_;
};

/// Dense symmetric matrix, row-major. Writes through set() keep both
/// triangles equal.
class DenseSymmetric {
public:
    explicit DenseSymmetric(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) noexcept {
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }
    std::span<const double> data() const noexcept { return a_; }

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// Gershgorin enclosure of the spectrum. `scale` = max(|lower|, |upper|) is
/// the unit in which bisection tolerances are expressed.
struct SpectrumBounds {
    double lower;
    double upper;
    double scale;
};

inline constexpr double kDefaultEigenTol = 1e-12;

SpectrumBounds gershgorin_bounds(const TridiagonalSymmetric& t);

/// Number of eigenvalues strictly less than x (shifted LDL^T pivot signs).
std::size_t sturm_count(const TridiagonalSymmetric& t, double x);

/// Largest eigenvalue by bisection, accurate to tol * scale.
double max_eigenvalue(const TridiagonalSymmetric& t, double tol = kDefaultEigenTol);

/// k-th smallest eigenvalue (0-based) by bisection.
double kth_eigenvalue(const TridiagonalSymmetric& t, std::size_t k, double tol = kDefaultEigenTol);

/// All eigenvalues in ascending order, each isolated by its own bisection.
/// The parallel and serial paths return identical bits.
std::vector<double> all_eigenvalues(const TridiagonalSymmetric& t,
                                    double tol = kDefaultEigenTol,
                                    Execution exec = Execution::parallel);

/// Householder reduction to tridiagonal form (similarity transform).
TridiagonalSymmetric householder_tridiagonalize(const DenseSymmetric& a);

/// Eigenvalues of a dense symmetric matrix, ascending: Householder reduction
/// followed by all_eigenvalues.
std::vector<double> dense_symmetric_eigenvalues(const DenseSymmetric& a,
                                                double tol = kDefaultEigenTol);

}  // namespace rmt
