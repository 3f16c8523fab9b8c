#pragma once

namespace rmt {

/// Airy function Ai on [-2, +inf). Maclaurin series in quad precision for
/// x <= 8, exponentially scaled asymptotic expansion beyond. Throws
/// DomainError for x < -2.
double airy_ai(double x);
double airy_ai_prime(double x);

namespace detail {

struct AiryTriple {
    double ai;
    double ai_prime;
    double ai_second;  // term-by-term second derivative of the series
};

/// Direct Maclaurin evaluation (no range switch), for |x| <= 10.
AiryTriple airy_maclaurin(double x);

/// Asymptotic expansion for large positive x.
AiryTriple airy_asymptotic(double x);

}  // namespace detail
}  // namespace rmt
