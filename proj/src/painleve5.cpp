#include "rmt/painleve5.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "rmt/errors.hpp"
#include "rmt/grid.hpp"
#include "rmt/ode.hpp"

namespace rmt {

namespace {
constexpr double pi = std::numbers::pi;
}

std::vector<double> painleve5_initial_state(double t0) {
    if (!(t0 > 0.0)) throw ContractViolation("Painleve V: t0 must be positive");
    const double r = t0 / pi;
    return {-r - r * r, -1.0 / pi - 2.0 * t0 / (pi * pi), -r - t0 * t0 / (2.0 * pi * pi)};
}

GaudinSolution solve_painleve5_on(std::span<const double> t_grid, double reltol, double abstol) {
    if (t_grid.size() < 2) throw ContractViolation("Painleve V: need at least two grid points");
    const double t0 = t_grid.front();
    if (!(t0 > 0.0)) throw ContractViolation("Painleve V: grid must start at t0 > 0");

    const double clamp_limit = 10.0 * abstol;
    OdeProblem problem;
    problem.dimension = 3;
    problem.rhs = [clamp_limit](double t, std::span<const double> y, std::span<double> dy) {
        const double sigma = y[0], sp = y[1];
        double radicand = (sigma - t * sp) * (t * sp - sigma + sp * sp);
        if (radicand < 0.0) {
            // A clearly negative radicand poisons the stage so the step is
            // rejected; if no step size avoids it the solver reports failure.
            radicand = -radicand > clamp_limit ? std::numeric_limits<double>::quiet_NaN() : 0.0;
        }
        dy[0] = sp;
        dy[1] = -2.0 / t * std::sqrt(radicand);
        dy[2] = sigma / t;
    };
    problem.t_start = t0;
    problem.t_end = t_grid.back();
    problem.output.assign(t_grid.begin(), t_grid.end());
    problem.reltol = reltol;
    problem.abstol = abstol;

    const auto y0 = painleve5_initial_state(t0);
    const OdeTrajectory traj = integrate(problem, y0);

    GaudinSolution sol;
    sol.t = traj.times;
    sol.sigma = traj.component(0);
    sol.sigmap = traj.component(1);
    sol.I = traj.component(2);
    sol.s.reserve(sol.t.size());
    sol.E.reserve(sol.t.size());
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        sol.s.push_back(sol.t[i] / pi);
        sol.E.push_back(std::exp(sol.I[i]));
    }
    return sol;
}

GaudinSolution solve_painleve5(const Painleve5Options& o) {
    if (!(o.tn > o.t0)) throw ContractViolation("Painleve V: need tn > t0");
    const auto grid = linspace(o.t0, o.tn, o.grid_points);
    return solve_painleve5_on(grid, o.reltol, o.abstol);
}

GaudinSolution spacing_density(GaudinSolution sol) {
    const std::size_t n = sol.t.size();
    if (n < 4) throw ContractViolation("spacing_density: need at least four grid points");
    sol.p.assign(n, 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        const double t = sol.t[i];
        const double s = sol.s[i];
        const double sig = sol.sigma[i];
        sol.p[i] = (t * sol.sigmap[i] - sig + sig * sig) * sol.E[i] / (s * s);
    }
    // p = O(s^2): extrapolate p/s^2 quadratically through points 1..3.
    const double x = sol.s[0];
    const double x1 = sol.s[1], x2 = sol.s[2], x3 = sol.s[3];
    const double r1 = sol.p[1] / (x1 * x1), r2 = sol.p[2] / (x2 * x2), r3 = sol.p[3] / (x3 * x3);
    const double r0 = r1 * (x - x2) * (x - x3) / ((x1 - x2) * (x1 - x3)) +
                      r2 * (x - x1) * (x - x3) / ((x2 - x1) * (x2 - x3)) +
                      r3 * (x - x1) * (x - x2) / ((x3 - x1) * (x3 - x2));
    sol.p[0] = r0 * x * x;
    return sol;
}

std::vector<double> gap_probability_painleve5(std::span<const double> s_grid, double t0, double reltol,
                                              double abstol) {
    if (s_grid.empty()) return {};
    std::vector<double> t;
    t.reserve(s_grid.size() + 1);
    t.push_back(t0);
    for (double s : s_grid) {
        if (s < 0.0) throw DomainError("gap probability needs s >= 0");
        const double ti = pi * s;
        if (ti > t.back()) t.push_back(ti);
        else if (ti < t.back() && ti > t0) throw ContractViolation("s-grid must be ascending");
    }
    if (t.size() == 1) t.push_back(2.0 * t0);
    const GaudinSolution sol = solve_painleve5_on(t, reltol, abstol);
    std::vector<double> out;
    out.reserve(s_grid.size());
    for (double s : s_grid) {
        const double ti = std::max(pi * s, t0);
        out.push_back(interpolate_linear(sol.t, sol.E, ti, sol.E.back()));
    }
    return out;
}

}  // namespace rmt
