#pragma once

#include <span>
#include <vector>

namespace rmt {

/// `count` equispaced points from a to b inclusive (b may be below a).
std::vector<double> linspace(double a, double b, std::size_t count);

/// Points lo, lo+step, ... up to hi (inclusive within rounding), generated as
/// lo + i*step.
std::vector<double> arange_inclusive(double lo, double step, double hi);

/// Trapezoid rule on a (possibly nonuniform, possibly descending) grid.
double trapezoid(std::span<const double> x, std::span<const double> y);

/// Numerical derivative: centered differences inside, one-sided at the ends
/// (same convention as MATLAB's gradient).
std::vector<double> gradient(std::span<const double> y, std::span<const double> x);

/// Piecewise-linear interpolation of (x, y) at xq; x monotone (either
/// direction). Points outside the data range get `outside`.
double interpolate_linear(std::span<const double> x, std::span<const double> y, double xq,
                          double outside = 0.0);

}  // namespace rmt
