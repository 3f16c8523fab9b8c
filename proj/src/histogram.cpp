#include "rmt/histogram.hpp"

#include <cmath>
#include <cstdint>

#include "rmt/errors.hpp"
#include "rmt/grid.hpp"

namespace rmt {

std::vector<double> make_edges(double lo, double step, double hi) {
    auto e = arange_inclusive(lo, step, hi);
    if (e.size() < 2) throw ContractViolation("bin specification gives fewer than two edges");
    return e;
}

Histogram histogram_density(std::span<const double> samples, std::span<const double> edges) {
    if (edges.size() < 2) throw ContractViolation("histogram needs at least two edges");
    const std::size_t bins = edges.size() - 1;
    const double dx = edges[1] - edges[0];
    if (!(dx > 0.0)) throw ContractViolation("histogram edges must ascend");
    for (std::size_t i = 1; i <= bins; ++i) {
        const double d = edges[i] - edges[i - 1];
        if (std::fabs(d - dx) > 1e-9 * dx) throw ContractViolation("histogram edges must be equidistant");
    }

    std::vector<std::uint64_t> counts(bins, 0);
    const double lo = edges.front(), hi = edges.back();
    std::size_t total = 0;
    for (double x : samples) {
        if (!(x >= lo && x <= hi)) continue;
        auto b = static_cast<std::size_t>((x - lo) / dx);
        // Correct the arithmetic bin guess against the stored edges.
        if (b >= bins) b = bins - 1;
        while (b > 0 && x < edges[b]) --b;
        while (b + 1 < bins && x >= edges[b + 1]) ++b;
        ++counts[b];
        ++total;
    }
    if (total == 0) throw EmptyHistogramError("no samples inside the histogram range");

    Histogram h;
    h.edges.assign(edges.begin(), edges.end());
    h.in_range = total;
    h.midpoints.resize(bins);
    h.density.resize(bins);
    for (std::size_t i = 0; i < bins; ++i) {
        h.midpoints[i] = 0.5 * (edges[i] + edges[i + 1]);
        h.density[i] = static_cast<double>(counts[i]) / static_cast<double>(total) / dx;
    }
    return h;
}

}  // namespace rmt
