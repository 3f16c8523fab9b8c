#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rmt {

/// dy/dt = f(t, y); the callback writes f into `dydt`.
using OdeRhs = std::function<void(double t, std::span<const double> y, std::span<double> dydt)>;

struct OdeProblem {
    std::size_t dimension = 0;
    OdeRhs rhs;
    double t_start = 0.0;
    double t_end = 0.0;  // may be below t_start
    /// Output times, monotone from t_start toward t_end and inside the span.
    std::vector<double> output;
    double reltol = 1e-6;
    double abstol = 1e-9;
};

struct OdeTrajectory {
    std::vector<double> times;
    /// states[i] is the solution at times[i].
    std::vector<std::vector<double>> states;

    /// Column view: component `c` at every output time.
    std::vector<double> component(std::size_t c) const;
};

struct OdeStats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t rhs_calls = 0;
};

/// Dormand-Prince 5(4) with PI step control and 4th-order dense output.
/// Per-step local error is held to reltol*|y_i| + abstol in every component.
/// Throws IntegrationError if the step size underflows.
OdeTrajectory integrate(const OdeProblem& problem, std::span<const double> y0,
                        OdeStats* stats = nullptr);

}  // namespace rmt
