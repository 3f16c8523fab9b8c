#pragma once

#include <span>
#include <vector>

namespace rmt {

struct Histogram {
    std::vector<double> edges;
    std::vector<double> midpoints;
    std::vector<double> density;
    std::size_t in_range = 0;
    double bin_width() const { return edges[1] - edges[0]; }
};

/// Equidistant edges lo, lo+step, ..., hi.
std::vector<double> make_edges(double lo, double step, double hi);

/// Density histogram: counts per [e_i, e_{i+1}) with the last bin closed on
/// the right, normalized by the in-range count and the bin width. Samples
/// outside [e_0, e_last] are dropped.
/// Throws ContractViolation for fewer than two or non-equidistant edges and
/// EmptyHistogramError when no sample lands in range.
Histogram histogram_density(std::span<const double> samples, std::span<const double> edges);

}  // namespace rmt
