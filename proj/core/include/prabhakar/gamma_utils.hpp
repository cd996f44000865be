#ifndef PRABHAKAR_GAMMA_UTILS_HPP
#define PRABHAKAR_GAMMA_UTILS_HPP

namespace prabhakar {

/// log|Gamma(x)| together with the sign of Gamma(x).
/// sign == 0 marks a pole (x a non-positive integer); log_abs is +inf there.
struct SignedLogGamma {
    double log_abs;
    int sign;
};

/// Works for any real x.  For x <= 0 the reflection formula
/// Gamma(x) Gamma(1-x) = pi / sin(pi x) is used, so the sign alternates
/// between consecutive poles as expected.
SignedLogGamma signed_log_gamma(double x);

/// 1/Gamma(x); exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// Gamma(a)/Gamma(b), evaluated through log-gamma differences so that large
/// arguments (|a|, |b| up to a few hundred) do not overflow.  A pole of
/// Gamma(b) yields 0, a pole of Gamma(a) yields +/-inf; callers in series
/// recurrences interpret those as "term is zero" on the appropriate side.
double log_gamma_ratio(double a, double b);

/// sin(pi x) with the argument reduced before scaling by pi, which keeps the
/// sign pattern of the reflection formula exact for half-integers and large x.
double sin_pi(double x);

} // namespace prabhakar

#endif
