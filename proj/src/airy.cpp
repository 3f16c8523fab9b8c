#include "rmt/airy.hpp"

#include <cmath>
#include <numbers>

#include "rmt/errors.hpp"

namespace rmt {

namespace {

using quad = __float128;

// Ai(0) and -Ai'(0) split into double-double pairs.
const quad kAi0 = quad(0.3550280538878172) + quad(2.05233632436212e-17);
const quad kMinusAip0 = quad(0.2588194037928068) + quad(-2.522243111610832e-17);

constexpr double kSeriesLimit = 8.0;
constexpr double kMinArgument = -2.0;
constexpr int kMaxTerms = 200;

quad qabs(quad v) { return v < 0 ? -v : v; }

}  // namespace

namespace detail {

AiryTriple airy_maclaurin(double xd) {
    if (std::fabs(xd) > 10.0) throw DomainError("Maclaurin Airy series limited to |x| <= 10");
    const quad x = xd;
    const quad x3 = x * x * x;
    // f = sum t_k, g = sum u_k with Ai = Ai(0) f + Ai'(0) g.
    quad t = 1, u = x;      // series terms
    quad tp = 0, up = 1;    // first-derivative terms
    quad f = t, g = u, fp = tp, gp = up;
    quad tpp = 0, upp = 0;  // second-derivative terms
    quad fpp = 0, gpp = 0;
    const quad tiny = quad(1e-36);
    for (int k = 1; k < kMaxTerms; ++k) {
        const quad k3 = 3 * k;
        t *= x3 / ((k3 - 1) * k3);
        u *= x3 / (k3 * (k3 + 1));
        tp = (k == 1) ? x * x / 2 : tp * x3 / ((k3 - 1) * (k3 - 3));
        up *= x3 / (k3 * (k3 - 2));
        tpp = (k == 1) ? x : tpp * x3 / ((k3 - 3) * (k3 - 4));
        upp = (k == 1) ? x * x : upp * x3 / ((k3 - 2) * (k3 - 3));
        fpp += tpp;
        gpp += upp;
        f += t;
        g += u;
        fp += tp;
        gp += up;
        if (k >= 40 && qabs(t) + qabs(u) + qabs(tp) + qabs(up) < tiny * (qabs(f) + qabs(g) + 1)) break;
    }
    const quad ai = kAi0 * f - kMinusAip0 * g;
    const quad aip = kAi0 * fp - kMinusAip0 * gp;
    const quad aipp = kAi0 * fpp - kMinusAip0 * gpp;
    return {static_cast<double>(ai), static_cast<double>(aip), static_cast<double>(aipp)};
}

AiryTriple airy_asymptotic(double x) {
    if (!(x > 0.0)) throw DomainError("asymptotic Airy expansion needs x > 0");
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    // Ai  ~ e^-zeta / (2 sqrt(pi) x^(1/4)) sum (-1)^k u_k zeta^-k
    // Ai' ~ -x^(1/4) e^-zeta / (2 sqrt(pi)) sum (-1)^k v_k zeta^-k
    double uk = 1.0, sum_u = 1.0, sum_v = 1.0;
    double last = 1.0;
    double zpow = 1.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
        zpow /= zeta;
        const double vk = -(6.0 * k + 1) / (6.0 * k - 1) * uk;
        const double term_u = uk * zpow;
        if (term_u >= last) break;  // asymptotic series: stop at the smallest term
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum_u += sign * term_u;
        sum_v += sign * vk * zpow;
        last = term_u;
        if (term_u < 1e-18) break;
    }
    const double pref = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
    const double x14 = std::sqrt(std::sqrt(x));
    const double ai = pref / x14 * sum_u;
    return {ai, -pref * x14 * sum_v, x * ai};
}

}  // namespace detail

double airy_ai(double x) {
    if (!(x >= kMinArgument)) throw DomainError("airy_ai supports x >= -2");
    return x <= kSeriesLimit ? detail::airy_maclaurin(x).ai : detail::airy_asymptotic(x).ai;
}

double airy_ai_prime(double x) {
    if (!(x >= kMinArgument)) throw DomainError("airy_ai_prime supports x >= -2");
    return x <= kSeriesLimit ? detail::airy_maclaurin(x).ai_prime : detail::airy_asymptotic(x).ai_prime;
}

}  // namespace rmt
