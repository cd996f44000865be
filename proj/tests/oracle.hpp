#ifndef PRABHAKAR_TESTS_ORACLE_HPP
#define PRABHAKAR_TESTS_ORACLE_HPP

// Reference evaluators for the tests.  Everything here is deliberately
// independent of the library internals: plain long double term-by-term
// summation with per-term log-gamma calls (no shared recurrences), and a
// generic adaptive Simpson integrator.  Slow and simple on purpose.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

namespace oracle {

// 1/Gamma(x) in long double over the whole real line; zero at the poles.
inline long double rgamma_ld(long double x)
{
    if (x > 0.5L) return std::exp(-std::lgamma(x));
    const long double r = std::fmod(x, 2.0L);
    const long double s = std::sin(static_cast<long double>(M_PIl) * r);
    if (s == 0.0L) return 0.0L;
    return s / static_cast<long double>(M_PIl) *
           std::exp(std::lgamma(1.0L - x));
}

// Three-parameter Mittag-Leffler sum: sum_k (g)_k z^k / (Gamma(a k + b) k!),
// evaluated term by term in long double.  The rising factorial, power and
// factorial are tracked in log magnitude with an explicit sign so that large
// intermediate terms cannot overflow before cancellation.
inline long double ml3_ld(long double a, long double b, long double g,
                          long double z, int max_terms = 4000)
{
    if (!(a > 0.0L)) throw std::invalid_argument("oracle: a must be > 0");
    if (z == 0.0L) return rgamma_ld(b);

    long double sum = 0.0L;
    long double log_mag = 0.0L;  // log |(g)_k z^k / k!|
    int sign = 1;
    const long double log_abs_z = std::log(std::fabs(z));
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        if (k > 0) {
            const long double rise = g + (k - 1);
            if (rise == 0.0L) break;  // polynomial truncation
            log_mag += std::log(std::fabs(rise)) + log_abs_z -
                       std::log(static_cast<long double>(k));
            if (rise < 0.0L) sign = -sign;
            if (z < 0.0L) sign = -sign;
        }
        const long double rg = rgamma_ld(a * k + b);
        const long double term = sign * rg * std::exp(log_mag);
        sum += term;
        const long double scale =
            std::max(std::fabs(sum), static_cast<long double>(1e-300));
        if (std::fabs(term) <= 1e-22L * scale) {
            if (++small_streak >= 4) return sum;
        } else {
            small_streak = 0;
        }
    }
    return sum;
}

inline double ml3(double a, double b, double g, double z)
{
    return static_cast<double>(
        ml3_ld(static_cast<long double>(a), static_cast<long double>(b),
               static_cast<long double>(g), static_cast<long double>(z)));
}

// Adaptive Simpson on [lo, hi] with absolute/relative tolerance mixing.
namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double lo,
                           double hi, double flo, double fmid, double fhi,
                           double whole, double tol, int depth)
{
    const double mid = 0.5 * (lo + hi);
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double flm = f(lmid);
    const double frm = f(rmid);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, lo, mid, flo, flm, fmid, left, 0.5 * tol,
                        depth - 1) +
           simpson_step(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol,
                        depth - 1);
}
}  // namespace detail

inline double integrate(const std::function<double(double)>& f, double lo,
                        double hi, double tol = 1e-12, int depth = 48)
{
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fmid = f(mid);
    const double fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return detail::simpson_step(f, lo, hi, flo, fmid, fhi, whole, tol,
                                depth);
}

// Reference transform: int_0^inf e^{-x} f(u x) dx by adaptive Simpson over
// [0, X] with X chosen from the decay of e^{-x}; fine for bounded f and the
// mildly growing integrands used in tests.
inline double sumudu(const std::function<double(double)>& f, double u,
                     double x_max = 60.0, double tol = 1e-12)
{
    return integrate([&](double x) { return std::exp(-x) * f(u * x); }, 0.0,
                     x_max, tol);
}

// Uniform draw helper for property tests: standard mt19937_64 bits through
// the 53-bit mantissa map, deterministic across platforms.
template <class Engine>
double uniform(Engine& eng, double a, double b)
{
    return a + (b - a) * ((eng() >> 11) * 0x1.0p-53);
}

}  // namespace oracle

#endif
