#ifndef PRABHAKAR_KERNELS_HPP
#define PRABHAKAR_KERNELS_HPP

#include "prabhakar/mittag_leffler.hpp"

namespace prabhakar {

/// Parameters of the Prabhakar kernel
///
///   e^gamma_(rho,mu,omega)(t) = t^(mu-1) E^gamma_(rho,mu)(omega t^rho)
///
/// rho > 0 and mu > 0 keep the kernel locally integrable at t = 0; omega and
/// gamma are free.  gamma = 0 collapses to the Riemann-Liouville kernel
/// t^(mu-1)/Gamma(mu).
struct PrabhakarParams {
    double rho;
    double mu;
    double omega;
    double gamma_upper;
};

/// Kernel value at t > 0.
double kernel_eval(const PrabhakarParams& p, double t,
                   const SeriesControl& ctl = {});

/// Exact Sumudu image of the kernel: u^(mu-1) (1 - omega u^rho)^(-gamma).
/// Requires u > 0 and 1 - omega u^rho > 0 (the real branch).
double sumudu_symbol(const PrabhakarParams& p, double u);

/// Kernel with its Mittag-Leffler coefficient table frozen, for quadrature
/// loops that hit the same parameter set at thousands of nodes.
class PreparedKernel {
public:
    explicit PreparedKernel(const PrabhakarParams& p,
                            const SeriesControl& ctl = {});

    double operator()(double t) const;

    /// E^gamma_(rho,mu)(omega t^rho) alone, without the t^(mu-1) factor.
    double ml_factor(double t) const;

    const PrabhakarParams& params() const { return p_; }

private:
    PrabhakarParams p_;
    PreparedMl3 ml_;
};

} // namespace prabhakar

#endif
