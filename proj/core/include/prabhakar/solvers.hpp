#ifndef PRABHAKAR_SOLVERS_HPP
#define PRABHAKAR_SOLVERS_HPP

#include <functional>
#include <optional>

#include "prabhakar/operators.hpp"

namespace prabhakar {

/// Linear fractional Cauchy problem on x > 0:
///
///   D^(gamma,mu,nu)_(rho,omega) y = lambda (E^delta_(rho,mu,omega) y) + f ,
///   weighted initial value K  (the nu-interpolated limit of y at 0+) ,
///
/// with D the Hilfer-type derivative and E the Prabhakar integral of the
/// same order mu.  The closed-form solution is a resolvent series: the K
/// part is a sum of Mittag-Leffler terms of order mu(2n+1) + nu(1-mu), the
/// f part a sum of Prabhakar integrals of f with upper parameters
/// gamma + n(delta + gamma).
struct OdeProblem {
    HilferOrder order;
    double rho;
    double omega;
    double gamma_upper; // upper parameter of the derivative
    double delta;       // upper parameter of the right-hand-side integral
    double lambda;
    double initial_weight = 0.0; // K
    std::optional<SampledFunction> forcing;
};

double solve_ode(const OdeProblem& pb, double x, const SeriesControl& ctl = {},
                 const QuadratureConfig& q = {});

/// Probability generating function of the fractionally subordinated counting
/// process:
///
///   G(v,t) = sum_n (-lambda (1-v))^n t^(n mu) E^(n gamma)_(rho, n mu + 1)
///              (-omega t^rho) ,
///
/// solving the regularized fractional state equation
/// D^(gamma,mu)_(rho,-omega) G = -lambda (1-v) G with G(v,0) = 1.  Note the
/// frequency enters negated: omega > 0 is the decaying regime.
/// G(1,t) = 1 holds exactly, term by term.  gamma = 0 or omega = 0 collapse
/// the time factors to classical Mittag-Leffler functions (the fractional
/// Poisson process); mu = 1, gamma = 0 gives the Poisson PGF
/// exp(-lambda t (1-v)).
struct PgfProblem {
    double mu;
    double rho;
    double omega;
    double gamma_upper;
    double lambda;
};

double solve_pgf(const PgfProblem& pb, double v, double t,
                 const SeriesControl& ctl = {});

/// Cauchy problem for the fractional diffusion equation
///
///   D u(x,t) = diffusivity * d^2u/dx^2 ,   u(x,0+) datum g
///
/// where D is the Hilfer-type derivative (flavor hilfer, weighted datum) or
/// its regularized form (flavor regularized, plain datum).  The solution is
/// assembled in Fourier space: for each frequency p the time factor is an
/// entire series in -diffusivity p^2 whose coefficients are Mittag-Leffler
/// functions, and the inverse transform is taken on `grid`.
struct DiffusionProblem {
    HilferOrder order; // order.nu is ignored by the regularized flavor
    double rho;
    double omega;
    double gamma_upper;
    double diffusivity;
    std::function<double(double)> datum;
    /// Analytic Fourier image of the datum, when known; skips the numerical
    /// forward transform.
    std::optional<std::function<double(double)>> datum_hat;
    FrequencyGrid grid;
};

class DiffusionSolver {
public:
    enum class Flavor { hilfer, regularized };

    DiffusionSolver(DiffusionProblem pb, Flavor flavor,
                    const SeriesControl& ctl = {});

    /// u(x, t) for t > 0.
    double operator()(double x, double t) const;

    /// The time factor multiplying ghat(p) at frequency p (diagnostic and
    /// test hook).
    double time_factor(double p, double t) const;

    const SpectralFunction& spectrum() const { return ghat_; }

private:
    std::vector<double> series_coefficients(double t) const;

    DiffusionProblem pb_;
    Flavor flavor_;
    SeriesControl ctl_;
    SpectralFunction ghat_;
};

double solve_diffusion_hp(const DiffusionProblem& pb, double x, double t,
                          const SeriesControl& ctl = {});
double solve_diffusion_reg(const DiffusionProblem& pb, double x, double t,
                           const SeriesControl& ctl = {});

} // namespace prabhakar

#endif
