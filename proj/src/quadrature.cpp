#include "rmt/quadrature.hpp"

#include <cmath>
#include <algorithm>
#include <vector>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
// Gauss weights for the 7-point rule at xgk[1], xgk[3], xgk[5], xgk[7].
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kron = wgk[7] * fc;
    double gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kron += wgk[j] * fsum;
        if (j % 2 == 1) gauss += wg[j / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::fabs(kron - gauss)};
}

}  // namespace

QuadResult adaptive_quad_detailed(const std::function<double(double)>& f, double a, double b,
                                  double tol, std::size_t max_intervals) {
    if (!(tol > 0.0)) throw ContractViolation("quadrature tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};

    std::vector<Segment> heap{gk15(f, a, b)};
    double total = heap.front().value;
    double error = heap.front().error;

    while (error > tol) {
        if (heap.size() >= max_intervals)
            throw AccuracyError("adaptive quadrature: subdivision limit reached, error estimate " +
                                std::to_string(error));
        std::pop_heap(heap.begin(), heap.end());
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        for (const Segment& half : {gk15(f, worst.a, mid), gk15(f, mid, worst.b)}) {
            heap.push_back(half);
            std::push_heap(heap.begin(), heap.end());
        }
        // Re-sum from scratch to keep cancellation error out of the running totals.
        total = 0.0;
        error = 0.0;
        for (const Segment& s : heap) {
            total += s.value;
            error += s.error;
        }
        if (!std::isfinite(total)) throw AccuracyError("adaptive quadrature: non-finite integrand");
    }
    return {total, error, heap.size()};
}

}  // namespace rmt
