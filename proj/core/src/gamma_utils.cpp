#include "prabhakar/gamma_utils.hpp"

#include <cmath>
#include <limits>

namespace prabhakar {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}
} // namespace

double sin_pi(double x)
{
    // Reduce to |r| <= 1/2 so sin(pi*r) is evaluated where it is well
    // conditioned.  x - round(x) is exact in floating point.
    double r = x - std::nearbyint(x);
    double s = std::sin(kPi * r);
    // nearbyint rounds half to even, so the parity of the removed integer is
    // recovered from the rounded value itself.
    double n = std::nearbyint(x);
    if (std::fmod(std::fabs(n), 2.0) == 1.0)
        s = -s;
    return s;
}

SignedLogGamma signed_log_gamma(double x)
{
    if (x > 0.0)
        return {std::lgamma(x), 1};

    if (is_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), 0};

    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)) for nonintegral x<=0.
    double s = sin_pi(x);
    double log_abs = std::log(kPi) - std::log(std::fabs(s)) - std::lgamma(1.0 - x);
    return {log_abs, s > 0.0 ? 1 : -1};
}

double reciprocal_gamma(double x)
{
    SignedLogGamma g = signed_log_gamma(x);
    if (g.sign == 0)
        return 0.0;
    return g.sign * std::exp(-g.log_abs);
}

double log_gamma_ratio(double a, double b)
{
    SignedLogGamma ga = signed_log_gamma(a);
    SignedLogGamma gb = signed_log_gamma(b);

    if (gb.sign == 0) {
        // Denominator at a pole: Gamma(b) = +/-inf, the ratio vanishes.
        return 0.0;
    }
    if (ga.sign == 0) {
        // Numerator at a pole: the ratio is unbounded; surface the infinity
        // and let series code map the adjacent term to zero.
        return std::numeric_limits<double>::infinity();
    }
    return ga.sign * gb.sign * std::exp(ga.log_abs - gb.log_abs);
}

} // namespace prabhakar
