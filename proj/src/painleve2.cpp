#include "rmt/painleve2.hpp"

#include <cmath>

#include "rmt/airy.hpp"
#include "rmt/errors.hpp"
#include "rmt/grid.hpp"
#include "rmt/ode.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

std::vector<double> painleve2_initial_state(const Painleve2Options& o) {
    const double s0 = o.s0;
    const double ai = airy_ai(s0);
    const double tail_I = adaptive_quad(
        [s0](double x) {
            const double a = airy_ai(x);
            return (x - s0) * a * a;
        },
        s0, o.tail_cutoff, o.tail_quad_tol);
    const double tail_Ip = -adaptive_quad(
        [](double x) {
            const double a = airy_ai(x);
            return a * a;
        },
        s0, o.tail_cutoff, o.tail_quad_tol);
    const double tail_J = adaptive_quad([](double x) { return airy_ai(x); }, s0, o.tail_cutoff, o.tail_quad_tol);
    // I'(s0) = -int_{s0}^inf Ai^2, so that f2 = -I' F2 stays nonnegative.
    return {ai, airy_ai_prime(s0), tail_I, tail_Ip, tail_J};
}

TracyWidomSolution solve_painleve2(const Painleve2Options& o) {
    if (!(o.s0 > o.sn)) throw ContractViolation("Painleve II: need s0 > sn");
    if (o.grid_points < 2) throw ContractViolation("Painleve II: need at least two grid points");

    OdeProblem problem;
    problem.dimension = 5;
    problem.rhs = [](double s, std::span<const double> y, std::span<double> dy) {
        dy[0] = y[1];
        dy[1] = s * y[0] + 2.0 * y[0] * y[0] * y[0];
        dy[2] = y[3];
        dy[3] = y[0] * y[0];
        dy[4] = -y[0];
    };
    problem.t_start = o.s0;
    problem.t_end = o.sn;
    problem.output = linspace(o.s0, o.sn, o.grid_points);
    problem.reltol = o.reltol;
    problem.abstol = o.abstol;

    const auto y0 = painleve2_initial_state(o);
    const OdeTrajectory traj = integrate(problem, y0);

    TracyWidomSolution sol;
    sol.s = traj.times;
    sol.q = traj.component(0);
    sol.qp = traj.component(1);
    sol.I = traj.component(2);
    sol.Ip = traj.component(3);
    sol.J = traj.component(4);
    return sol;
}

TracyWidomSolution tracy_widom_curves(TracyWidomSolution st) {
    const std::size_t n = st.s.size();
    if (n < 2 || st.q.size() != n || st.I.size() != n || st.Ip.size() != n || st.J.size() != n)
        throw ContractViolation("tracy_widom_curves: state vectors missing or mismatched");
    const double cbrt2 = std::cbrt(2.0);
    const double s4_scale = std::pow(2.0, 2.0 / 3.0);
    constexpr double kFloor = 1e-300;

    st.F1.clear(), st.F2.clear(), st.F4.clear();
    st.f1.clear(), st.f2.clear(), st.f4.clear();
    st.s4.clear();
    std::size_t kept = 0;
    for (; kept < n; ++kept) {
        const double q = st.q[kept];
        const double J = st.J[kept];
        const double F2 = std::exp(-st.I[kept]);
        const double F1 = std::sqrt(F2 * std::exp(-J));
        const double F4 = std::sqrt(F2) * 0.5 * (std::exp(0.5 * J) + std::exp(-0.5 * J));
        if (!(F1 > kFloor) || !(F4 > kFloor)) break;
        const double f2 = -st.Ip[kept] * F2;
        const double f1 = 0.5 / F1 * (f2 + q * F2) * std::exp(-J);
        const double f4 = 1.0 / (cbrt2 * 4.0 * F4) *
                          (f2 * (2.0 + std::exp(J) + std::exp(-J)) + F2 * q * (std::exp(-J) - std::exp(J)));
        st.F1.push_back(F1);
        st.F2.push_back(F2);
        st.F4.push_back(F4);
        st.f1.push_back(f1);
        st.f2.push_back(f2);
        st.f4.push_back(f4);
        st.s4.push_back(st.s[kept] / s4_scale);
    }
    if (kept < 2) throw TailTruncationError("Tracy-Widom curves vanish on the whole grid");
    for (auto* v : {&st.s, &st.q, &st.qp, &st.I, &st.Ip, &st.J}) v->resize(kept);
    return st;
}

}  // namespace rmt
