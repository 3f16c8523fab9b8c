#include "rmt/grid.hpp"

#include <algorithm>
#include <cmath>

#include "rmt/errors.hpp"

namespace rmt {

std::vector<double> linspace(double a, double b, std::size_t count) {
    if (count < 2) throw ContractViolation("linspace needs at least two points");
    std::vector<double> out(count);
    const double step = (b - a) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = a + step * static_cast<double>(i);
    out.back() = b;
    return out;
}

std::vector<double> arange_inclusive(double lo, double step, double hi) {
    if (!(step > 0.0) || !(hi >= lo)) throw ContractViolation("range needs step > 0 and hi >= lo");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
    return out;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ContractViolation("trapezoid: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return sum;
}

std::vector<double> gradient(std::span<const double> y, std::span<const double> x) {
    const std::size_t n = y.size();
    if (n != x.size() || n < 2) throw ContractViolation("gradient: need matching lengths >= 2");
    std::vector<double> g(n);
    g[0] = (y[1] - y[0]) / (x[1] - x[0]);
    g[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (y[i + 1] - y[i - 1]) / (x[i + 1] - x[i - 1]);
    return g;
}

double interpolate_linear(std::span<const double> x, std::span<const double> y, double xq, double outside) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw ContractViolation("interpolate: need matching lengths >= 2");
    const bool ascending = x.back() > x.front();
    const double lo = ascending ? x.front() : x.back();
    const double hi = ascending ? x.back() : x.front();
    if (xq < lo || xq > hi) return outside;
    std::size_t j;
    if (ascending) {
        j = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), xq) - x.begin());
    } else {
        j = static_cast<std::size_t>(
            std::upper_bound(x.begin(), x.end(), xq, [](double v, double e) { return v > e; }) - x.begin());
    }
    j = std::clamp<std::size_t>(j, 1, n - 1);
    const double w = (xq - x[j - 1]) / (x[j] - x[j - 1]);
    return y[j - 1] + w * (y[j] - y[j - 1]);
}

}  // namespace rmt
