#include "rmt/tridiag.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Eigenvalue indices bisected together; the row recurrence runs across
// lanes so the pivot divisions are independent and vectorize.
constexpr std::size_t kLanes = 8;

struct Prepared {
    std::span<const double> diag;
    std::vector<double> offdiag_sq;
    SpectrumBounds bounds;
    double pivmin;
};

Prepared prepare(const TridiagonalSymmetric& t) {
    Prepared p{t.diag(), {}, gershgorin_bounds(t), 0.0};
    p.offdiag_sq.reserve(t.offdiag().size());
    for (double e : t.offdiag()) p.offdiag_sq.push_back(e * e);
    p.pivmin = kEps * p.bounds.scale;
    if (p.pivmin == 0.0) p.pivmin = std::numeric_limits<double>::min();
    return p;
}

inline double guard_pivot(double q, double pivmin) {
    return std::fabs(q) < pivmin ? -pivmin : q;
}

std::size_t count_below(const Prepared& p, double x) {
    const std::size_t n = p.diag.size();
    double q = guard_pivot(p.diag[0] - x, p.pivmin);
    std::size_t count = q < 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        q = guard_pivot(p.diag[i] - x - p.offdiag_sq[i - 1] / q, p.pivmin);
        count += q < 0.0;
    }
    return count;
}

// Bisects eigenvalues first .. first+count-1 simultaneously. Each lane keeps
// its own bracket and stops independently, so a lane's result does not
// depend on which other indices share the block.
void bisect_block(const Prepared& p, double tol, std::size_t first, std::size_t count, double* out) {
    const std::size_t n = p.diag.size();
    const double width_stop = tol * p.bounds.scale;
    const double margin = 2.0 * kEps * p.bounds.scale * static_cast<double>(n);

    std::array<double, kLanes> lo, hi, x, q;
    std::array<std::size_t, kLanes> target, below;
    std::array<bool, kLanes> active{};
    for (std::size_t l = 0; l < kLanes; ++l) {
        lo[l] = p.bounds.lower - margin;
        hi[l] = p.bounds.upper + margin;
        target[l] = first + std::min(l, count - 1);
        active[l] = l < count;
    }

    for (;;) {
        bool any = false;
        for (std::size_t l = 0; l < kLanes; ++l) {
            x[l] = 0.5 * (lo[l] + hi[l]);
            if (active[l] && (hi[l] - lo[l] <= width_stop || x[l] <= lo[l] || x[l] >= hi[l]))
                active[l] = false;
            any = any || active[l];
        }
        if (!any) break;

        for (std::size_t l = 0; l < kLanes; ++l) {
            q[l] = guard_pivot(p.diag[0] - x[l], p.pivmin);
            below[l] = q[l] < 0.0;
        }
        for (std::size_t i = 1; i < n; ++i) {
            const double d = p.diag[i];
            const double e2 = p.offdiag_sq[i - 1];
#pragma omp simd
            for (std::size_t l = 0; l < kLanes; ++l) {
                const double v = guard_pivot(d - x[l] - e2 / q[l], p.pivmin);
                q[l] = v;
                below[l] += v < 0.0;
            }
        }

        for (std::size_t l = 0; l < kLanes; ++l) {
            if (!active[l]) continue;
            if (below[l] > target[l])
                hi[l] = x[l];
            else
                lo[l] = x[l];
        }
    }
    for (std::size_t l = 0; l < count; ++l) out[l] = 0.5 * (lo[l] + hi[l]);
}

void require_tol(double tol) {
    if (!(tol > 0.0)) throw ContractViolation("eigenvalue tolerance must be positive");
}

}  // namespace

TridiagonalSymmetric::TridiagonalSymmetric(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty()) throw ContractViolation("tridiagonal matrix must have n >= 1");
    if (offdiag_.size() + 1 != diag_.size())
        throw ContractViolation("off-diagonal length must be diagonal length - 1");
}

SpectrumBounds gershgorin_bounds(const TridiagonalSymmetric& t) {
    const auto d = t.diag();
    const auto e = t.offdiag();
    const std::size_t n = d.size();
    double lower = std::numeric_limits<double>::infinity();
    double upper = -lower;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(e[i - 1]);
        if (i + 1 < n) r += std::fabs(e[i]);
        lower = std::min(lower, d[i] - r);
        upper = std::max(upper, d[i] + r);
    }
    return {lower, upper, std::max(std::fabs(lower), std::fabs(upper))};
}

std::size_t sturm_count(const TridiagonalSymmetric& t, double x) {
    return count_below(prepare(t), x);
}

double kth_eigenvalue(const TridiagonalSymmetric& t, std::size_t k, double tol) {
    require_tol(tol);
    if (k >= t.size()) throw ContractViolation("eigenvalue index out of range");
    const Prepared p = prepare(t);
    double value = 0.0;
    bisect_block(p, tol, k, 1, &value);
    return value;
}

double max_eigenvalue(const TridiagonalSymmetric& t, double tol) {
    return kth_eigenvalue(t, t.size() - 1, tol);
}

std::vector<double> all_eigenvalues(const TridiagonalSymmetric& t, double tol, Execution exec) {
    require_tol(tol);
    const Prepared p = prepare(t);
    const std::size_t n = t.size();
    std::vector<double> eig(n);
    const std::size_t blocks = (n + kLanes - 1) / kLanes;

    auto run = [&](std::size_t b) {
        const std::size_t first = b * kLanes;
        bisect_block(p, tol, first, std::min(kLanes, n - first), eig.data() + first);
    };

    if (exec == Execution::parallel) {
        const auto nb = static_cast<long long>(blocks);
#pragma omp parallel for schedule(dynamic, 4)
        for (long long b = 0; b < nb; ++b) run(static_cast<std::size_t>(b));
    } else {
        for (std::size_t b = 0; b < blocks; ++b) run(b);
    }
    // Bisection brackets are nested by index, but roundoff in midpoints of
    // (near-)degenerate eigenvalues can swap neighbours by an ulp.
    std::sort(eig.begin(), eig.end());
    return eig;
}

TridiagonalSymmetric householder_tridiagonalize(const DenseSymmetric& a) {
    const std::size_t n = a.size();
    if (n == 0) throw ContractViolation("matrix must have n >= 1");
    std::vector<double> m(a.data().begin(), a.data().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };

    std::vector<double> v(n), w(n);
    std::vector<double> offdiag(n > 0 ? n - 1 : 0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Reflect column k below the subdiagonal onto e_{k+1}.
        double norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm = std::hypot(norm, at(i, k));
        if (norm == 0.0) {
            offdiag[k] = 0.0;
            continue;
        }
        const double x0 = at(k + 1, k);
        const double alpha = x0 > 0.0 ? -norm : norm;
        for (std::size_t i = 0; i <= k; ++i) v[i] = 0.0;
        v[k + 1] = x0 - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = at(i, k);
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm = std::hypot(vnorm, v[i]);
        if (vnorm == 0.0) {
            offdiag[k] = x0;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

        // Trailing block update A <- A - v w^T - w v^T with w = 2p - 2(v.p)v, p = A v.
        double vp = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += at(i, j) * v[j];
            w[i] = s;
            vp += v[i] * s;
        }
        for (std::size_t i = k + 1; i < n; ++i) w[i] = 2.0 * w[i] - 2.0 * vp * v[i];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= v[i] * w[j] + w[i] * v[j];

        offdiag[k] = alpha;
        at(k + 1, k) = alpha;
        at(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) at(i, k) = at(k, i) = 0.0;
    }
    if (n >= 2) offdiag[n - 2] = at(n - 1, n - 2);

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
    return TridiagonalSymmetric(std::move(diag), std::move(offdiag));
}

std::vector<double> dense_symmetric_eigenvalues(const DenseSymmetric& a, double tol) {
    return all_eigenvalues(householder_tridiagonalize(a), tol, Execution::serial);
}

}  // namespace rmt
