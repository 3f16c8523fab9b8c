#include "rmt/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
// 5th-order solution minus embedded 4th-order solution.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

// Continuous extension: y(t + th) = y + h * sum_j k_j * sum_p bi[j][p] th^(p+1).
constexpr double bi[7][4] = {
    {1.0, -183.0 / 64, 37.0 / 12, -145.0 / 128},
    {0.0, 0.0, 0.0, 0.0},
    {0.0, 1500.0 / 371, -1000.0 / 159, 1000.0 / 371},
    {0.0, -125.0 / 32, 125.0 / 12, -375.0 / 64},
    {0.0, 9477.0 / 3392, -729.0 / 106, 25515.0 / 6784},
    {0.0, -11.0 / 7, 11.0 / 3, -55.0 / 28},
    {0.0, 3.0 / 2, -4.0, 5.0 / 2},
};

constexpr double kSafety = 0.9;
constexpr double kMaxGrowth = 5.0;
constexpr double kMaxShrink = 0.2;
constexpr double kBeta = 0.04;  // PI controller history exponent
constexpr double kAlpha = 0.2 - 0.75 * kBeta;
constexpr std::size_t kMaxSteps = 50'000'000;

void validate(const OdeProblem& p, std::span<const double> y0) {
    if (p.dimension == 0 || y0.size() != p.dimension)
        throw ContractViolation("initial state length must equal the problem dimension");
    if (!p.rhs) throw ContractViolation("ODE right-hand side is empty");
    if (!(p.reltol > 0.0) || !(p.abstol > 0.0)) throw ContractViolation("tolerances must be positive");
    if (p.t_end == p.t_start) throw ContractViolation("integration span is empty");
    const double dir = p.t_end > p.t_start ? 1.0 : -1.0;
    double prev = p.t_start;
    for (double t : p.output) {
        if (dir * (t - prev) < 0.0 || dir * (p.t_end - t) < 0.0)
            throw ContractViolation("output grid must be monotone and inside the span");
        prev = t;
    }
}

double error_norm(std::span<const double> err, std::span<const double> y, std::span<const double> ynew,
                  double rtol, double atol) {
    double m = 0.0;
    for (std::size_t i = 0; i < err.size(); ++i) {
        const double sk = atol + rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
        const double r = std::fabs(err[i]) / sk;
        if (!std::isfinite(r) || !std::isfinite(ynew[i])) return std::numeric_limits<double>::infinity();
        m = std::max(m, r);
    }
    return m;
}

double max_scaled(std::span<const double> v, std::span<const double> y, double rtol, double atol) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        m = std::max(m, std::fabs(v[i]) / (atol + rtol * std::fabs(y[i])));
    return m;
}

}  // namespace

std::vector<double> OdeTrajectory::component(std::size_t c) const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const auto& s : states) out.push_back(s.at(c));
    return out;
}

OdeTrajectory integrate(const OdeProblem& p, std::span<const double> y0, OdeStats* stats) {
    validate(p, y0);
    const std::size_t dim = p.dimension;
    const double dir = p.t_end > p.t_start ? 1.0 : -1.0;
    const double rtol = p.reltol, atol = p.abstol;
    OdeStats local;
    OdeStats& st = stats ? *stats : local;
    st = {};

    std::vector<double> y(y0.begin(), y0.end()), ynew(dim), ytmp(dim), err(dim);
    std::vector<std::vector<double>> k(7, std::vector<double>(dim));
    auto f = [&](double t, std::span<const double> yy, std::vector<double>& out) {
        p.rhs(t, yy, out);
        ++st.rhs_calls;
    };

    OdeTrajectory traj;
    traj.times.reserve(p.output.size());
    traj.states.reserve(p.output.size());
    std::size_t next_out = 0;
    auto emit_exact = [&](double t_now) {
        while (next_out < p.output.size() && p.output[next_out] == t_now) {
            traj.times.push_back(p.output[next_out]);
            traj.states.push_back(y);
            ++next_out;
        }
    };

    double t = p.t_start;
    emit_exact(t);
    f(t, y, k[0]);

    // Initial step (Hairer & Wanner, II.4).
    double h;
    {
        const double d0 = max_scaled(y, y, rtol, atol);
        const double d1 = max_scaled(k[0], y, rtol, atol);
        double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
        h0 = std::min(h0, std::fabs(p.t_end - t));
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + dir * h0 * k[0][i];
        f(t + dir * h0, ytmp, k[1]);
        double d2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i)
            d2 = std::max(d2, std::fabs(k[1][i] - k[0][i]) / (atol + rtol * std::fabs(y[i])));
        d2 /= h0;
        const double dmax = std::max(d1, d2);
        const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
        h = std::min({100.0 * h0, h1, std::fabs(p.t_end - t)});
    }

    double err_prev = 1e-4;
    bool last_rejected = false;
    while (dir * (p.t_end - t) > 0.0) {
        if (st.accepted + st.rejected > kMaxSteps) throw IntegrationError("step budget exhausted", t);
        const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(t), 1e-300);
        if (h < h_min) throw IntegrationError("step size underflow", t);

        // The attempted step is shortened to land exactly on t_end.
        double h_try = h;
        bool clipped = false;
        if (h_try >= std::fabs(p.t_end - t)) {
            h_try = std::fabs(p.t_end - t);
            clipped = true;
        }
        const double hs = dir * h_try;
        const double t_new = clipped ? p.t_end : t + hs;

        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + hs * a21 * k[0][i];
        f(t + c2 * hs, ytmp, k[1]);
        for (std::size_t i = 0; i < dim; ++i) ytmp[i] = y[i] + hs * (a31 * k[0][i] + a32 * k[1][i]);
        f(t + c3 * hs, ytmp, k[2]);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + hs * (a41 * k[0][i] + a42 * k[1][i] + a43 * k[2][i]);
        f(t + c4 * hs, ytmp, k[3]);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + hs * (a51 * k[0][i] + a52 * k[1][i] + a53 * k[2][i] + a54 * k[3][i]);
        f(t + c5 * hs, ytmp, k[4]);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + hs * (a61 * k[0][i] + a62 * k[1][i] + a63 * k[2][i] + a64 * k[3][i] +
                                   a65 * k[4][i]);
        f(t_new, ytmp, k[5]);
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] + hs * (a71 * k[0][i] + a73 * k[2][i] + a74 * k[3][i] + a75 * k[4][i] +
                                   a76 * k[5][i]);
        f(t_new, ynew, k[6]);
        for (std::size_t i = 0; i < dim; ++i)
            err[i] = hs * (e1 * k[0][i] + e3 * k[2][i] + e4 * k[3][i] + e5 * k[4][i] + e6 * k[5][i] +
                           e7 * k[6][i]);

        const double e = error_norm(err, y, ynew, rtol, atol);
        if (!std::isfinite(e)) {
            ++st.rejected;
            h = h_try * kMaxShrink;
            last_rejected = true;
            continue;
        }
        if (e > 1.0) {
            ++st.rejected;
            const double fac = std::max(kMaxShrink, kSafety * std::pow(e, -kAlpha));
            h = h_try * std::min(1.0, fac);
            last_rejected = true;
            continue;
        }

        ++st.accepted;
        // Dense output for grid points inside (t, t_new].
        while (next_out < p.output.size() && dir * (p.output[next_out] - t_new) <= 0.0) {
            const double to = p.output[next_out];
            std::vector<double> yo(dim);
            if (to == t_new) {
                yo = ynew;
            } else {
                const double th = (to - t) / hs;
                double pw[4] = {th, th * th, th * th * th, th * th * th * th};
                for (std::size_t i = 0; i < dim; ++i) {
                    double acc = 0.0;
                    for (int j = 0; j < 7; ++j) {
                        const double w = bi[j][0] * pw[0] + bi[j][1] * pw[1] + bi[j][2] * pw[2] + bi[j][3] * pw[3];
                        acc += w * k[j][i];
                    }
                    yo[i] = y[i] + hs * acc;
                }
            }
            traj.times.push_back(to);
            traj.states.push_back(std::move(yo));
            ++next_out;
        }

        double fac = kSafety * std::pow(std::max(e, 1e-300), -kAlpha) * std::pow(err_prev, kBeta);
        fac = std::clamp(fac, kMaxShrink, kMaxGrowth);
        if (last_rejected) fac = std::min(fac, 1.0);
        err_prev = std::max(e, 1e-4);
        last_rejected = false;

        t = t_new;
        y.swap(ynew);
        std::swap(k[0], k[6]);  // FSAL
        h = h_try * fac;
    }
    return traj;
}

}  // namespace rmt
