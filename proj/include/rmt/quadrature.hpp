#pragma once

#include <cstddef>
#include <functional>

namespace rmt {

struct QuadResult {
    double value;
    double error_estimate;
    std::size_t intervals;
};

/// Globally adaptive Gauss-Kronrod 7-15 quadrature of f over [a, b] to
/// absolute tolerance `tol`. Throws AccuracyError when `max_intervals`
/// subintervals do not reach the tolerance.
QuadResult adaptive_quad_detailed(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::size_t max_intervals = 2000);

inline double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol) {
    return adaptive_quad_detailed(f, a, b, tol).value;
}

}  // namespace rmt
