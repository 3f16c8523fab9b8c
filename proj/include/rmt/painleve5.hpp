#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rmt {

/// Jimbo-Miwa-Okamoto sigma-form Painleve V solution for the sine kernel,
/// giving the gap probability E(s) and the consecutive-spacing density p(s)
/// of the beta = 2 bulk.
struct GaudinSolution {
    std::vector<double> t;       // ascending, t0 .. tn
    std::vector<double> sigma;   // sigma(t)
    std::vector<double> sigmap;  // sigma'(t)
    std::vector<double> I;       // int_0^t sigma(u)/u du
    std::vector<double> s;       // t / pi
    std::vector<double> E;       // exp(I)
    std::vector<double> p;       // spacing density, filled by spacing_density

    std::size_t size() const noexcept { return t.size(); }
};

struct Painleve5Options {
    double t0 = 1e-12;
    double tn = 16.0;
    std::size_t grid_points = 1000;
    double reltol = 1e-13;
    double abstol = 1e-14;
};

/// Boundary values (sigma, sigma', I) at t0 from the small-t expansion.
std::vector<double> painleve5_initial_state(double t0);

/// Integrates (sigma, sigma', I)' = (sigma', -(2/t) sqrt((sigma - t sigma')
/// (t sigma' - sigma + sigma'^2)), sigma/t) on linspace(t0, tn, grid_points).
/// Fills t, sigma, sigmap, I, s and E.
GaudinSolution solve_painleve5(const Painleve5Options& options = {});

/// Same system sampled on an explicit ascending grid whose first entry is the
/// starting time t0 > 0.
GaudinSolution solve_painleve5_on(std::span<const double> t_grid, double reltol = 1e-13,
                                  double abstol = 1e-14);

/// p(s) = (pi s sigma'(pi s) - sigma(pi s) + sigma(pi s)^2) E(s) / s^2.
/// At the first grid point the bracket cancels to roundoff, so p(s)/s^2 is
/// extrapolated quadratically from the next three points instead.
GaudinSolution spacing_density(GaudinSolution sol);

/// E(s) on an arbitrary ascending s-grid (s >= 0). Entries with pi s below
/// t0 are reported at t0.
std::vector<double> gap_probability_painleve5(std::span<const double> s_grid, double t0 = 1e-12,
                                              double reltol = 1e-13, double abstol = 1e-14);

}  // namespace rmt
