#pragma once

#include <cstddef>
#include <vector>

namespace rmt {

/// Hastings-McLeod Painleve II solution on a descending s-grid together
/// with the Tracy-Widom distributions and densities for beta = 1, 2, 4.
struct TracyWidomSolution {
    std::vector<double> s;   // descending, s0 .. sn
    std::vector<double> q;   // q(s) ~ Ai(s) as s -> inf
    std::vector<double> qp;  // q'(s)
    std::vector<double> I;   // int_s^inf (x - s) q(x)^2 dx
    std::vector<double> Ip;  // I'(s) = -int_s^inf q(x)^2 dx
    std::vector<double> J;   // int_s^inf q(x) dx

    std::vector<double> F1, F2, F4;
    std::vector<double> f1, f2, f4;
    std::vector<double> s4;  // s / 2^(2/3): abscissa for F4 and f4

    std::size_t size() const noexcept { return s.size(); }
};

struct Painleve2Options {
    double s0 = 5.0;
    double sn = -8.0;
    std::size_t grid_points = 1000;
    double reltol = 1e-13;
    double abstol = 1e-15;
    /// Upper limit replacing infinity in the initial-value integrals.
    double tail_cutoff = 20.0;
    double tail_quad_tol = 1e-18;
};

/// Integrates (q, q', I, I', J)' = (q', s q + 2 q^3, I', q^2, -q) from s0
/// down to sn, starting from the Airy boundary data. Only the state fields
/// are filled.
TracyWidomSolution solve_painleve2(const Painleve2Options& options = {});

/// Fills F1, F2, F4, f1, f2, f4 and s4 from the state. The densities use the
/// closed-form derivatives. The grid is cut where F1 or F4 drops to 1e-300;
/// throws TailTruncationError if fewer than two points remain.
TracyWidomSolution tracy_widom_curves(TracyWidomSolution state);

/// Boundary values (q, q', I, I', J) at s0.
std::vector<double> painleve2_initial_state(const Painleve2Options& options);

}  // namespace rmt
