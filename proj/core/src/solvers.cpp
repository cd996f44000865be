#include "prabhakar/solvers.hpp"

#include <cfloat>
#include <cmath>

#include "prabhakar/errors.hpp"

namespace prabhakar {
namespace {

constexpr int kResolventCap = 200;

// Accumulator for the resolvent series in n.  Convergence needs a streak of
// relatively small terms; the divergence monitor only arms once terms both
// grow and dwarf the partial sum, so transient humps of entire series pass
// through untouched.
struct ResolventSeries {
    double sum = 0.0;
    int terms = 0;
    int small_streak = 0;
    int grow_streak = 0;
    double prev_abs = 0.0;
    int needed;
    double rel_tol;

    explicit ResolventSeries(const SeriesControl& ctl)
        : needed(ctl.consecutive_small), rel_tol(ctl.rel_tol)
    {
    }

    bool add(double term)
    {
        sum += term;
        ++terms;
        if (!std::isfinite(sum))
            throw envelope_error("resolvent series overflowed");
        const double a = std::fabs(term);
        const double scale = std::max(std::fabs(sum), 1.0);
        if (a >= prev_abs && a > 1e10 * scale) {
            if (++grow_streak >= 3)
                throw divergence_error(
                    "resolvent series keeps growing; the parameters are "
                    "outside the summable regime",
                    sum, terms);
        } else {
            grow_streak = 0;
        }
        prev_abs = a;
        if (a <= rel_tol * std::max(std::fabs(sum), DBL_MIN))
            ++small_streak;
        else
            small_streak = 0;
        return small_streak >= needed;
    }
};

void check_series_control(const SeriesControl& ctl)
{
    if (!(ctl.rel_tol > 0.0) || ctl.consecutive_small < 2)
        throw validation_error(
            "series control: rel_tol must be positive and "
            "consecutive_small at least 2");
}

} // namespace

double solve_ode(const OdeProblem& pb, double x, const SeriesControl& ctl,
                 const QuadratureConfig& q)
{
    if (!(pb.order.mu > 0.0) || !(pb.order.mu < 1.0))
        throw validation_error("order mu must lie in (0, 1)");
    if (!(pb.order.nu >= 0.0) || !(pb.order.nu <= 1.0))
        throw validation_error("type nu must lie in [0, 1]");
    if (!(pb.rho > 0.0))
        throw validation_error("rho must be positive");
    if (!(pb.gamma_upper >= 0.0) || !(pb.delta >= 0.0) ||
        !(pb.initial_weight >= 0.0))
        throw validation_error(
            "gamma, delta and the weighted initial value must be "
            "non-negative");
    if (!std::isfinite(x) || !(x > 0.0))
        throw validation_error("evaluation point x must be positive");
    if (pb.forcing && x > pb.forcing->domain_end() * (1.0 + 1e-12))
        throw validation_error("x exceeds the forcing grid domain");
    check_series_control(ctl);

    const double mu = pb.order.mu;
    const double nu = pb.order.nu;
    const double step = pb.delta + pb.gamma_upper; // upper-parameter shift per n
    double y = 0.0;

    if (pb.initial_weight != 0.0) {
        ResolventSeries series(ctl);
        for (int n = 0; n < kResolventCap; ++n) {
            const double beta = nu * (1.0 - mu) + mu * (2.0 * n + 1.0);
            const double upper =
                pb.gamma_upper * (1.0 - nu) + n * step;
            const double ml = ml3({pb.rho, beta, upper},
                                  pb.omega * std::pow(x, pb.rho), ctl);
            const double term =
                std::pow(pb.lambda, n) * std::pow(x, beta - 1.0) * ml;
            if (series.add(term))
                break;
            if (n + 1 == kResolventCap)
                throw convergence_error(
                    "homogeneous resolvent series did not settle",
                    std::fabs(term), series.terms);
        }
        y += pb.initial_weight * series.sum;
    }

    if (pb.forcing) {
        ResolventSeries series(ctl);
        for (int n = 0; n < kResolventCap; ++n) {
            const PrabhakarParams kernel{pb.rho, mu * (2.0 * n + 1.0),
                                         pb.omega,
                                         pb.gamma_upper + n * step};
            const double term = std::pow(pb.lambda, n) *
                                prabhakar_integral(kernel, *pb.forcing, x, q);
            if (series.add(term))
                break;
            if (n + 1 == kResolventCap)
                throw convergence_error(
                    "forcing resolvent series did not settle",
                    std::fabs(term), series.terms);
        }
        y += series.sum;
    }
    return y;
}

double solve_pgf(const PgfProblem& pb, double v, double t,
                 const SeriesControl& ctl)
{
    if (!(pb.mu > 0.0) || !(pb.mu <= 1.0))
        throw validation_error("order mu must lie in (0, 1]");
    if (!(pb.rho > 0.0))
        throw validation_error("rho must be positive");
    if (!(pb.lambda >= 0.0))
        throw validation_error("rate lambda must be non-negative");
    if (!std::isfinite(t) || !(t >= 0.0))
        throw validation_error("time t must be non-negative");
    if (!std::isfinite(v) || v < -1.0 || v > 1.0)
        throw validation_error("argument v must lie in [-1, 1]");
    check_series_control(ctl);

    const double z = -pb.omega * std::pow(t, pb.rho); // t = 0 gives z = 0
    const double c = -pb.lambda * (1.0 - v);

    ResolventSeries series(ctl);
    double weight = 1.0; // (-lambda (1-v))^n t^(n mu)
    for (int n = 0; n < kResolventCap; ++n) {
        const double ml =
            ml3({pb.rho, n * pb.mu + 1.0, n * pb.gamma_upper}, z, ctl);
        if (series.add(weight * ml))
            return series.sum;
        weight *= c * std::pow(t, pb.mu);
        if (weight == 0.0) {
            // exact termination: v = 1 or t = 0 kills every later term
            return series.sum;
        }
    }
    throw convergence_error("generating-function series did not settle",
                            series.prev_abs, series.terms);
}

DiffusionSolver::DiffusionSolver(DiffusionProblem pb, Flavor flavor,
                                 const SeriesControl& ctl)
    : pb_(std::move(pb)), flavor_(flavor), ctl_(ctl)
{
    if (!(pb_.order.mu > 0.0) || !(pb_.order.mu <= 1.0))
        throw validation_error("order mu must lie in (0, 1]");
    if (!(pb_.order.nu >= 0.0) || !(pb_.order.nu <= 1.0))
        throw validation_error("type nu must lie in [0, 1]");
    if (!(pb_.rho > 0.0))
        throw validation_error("rho must be positive");
    if (!(pb_.diffusivity >= 0.0))
        throw validation_error("diffusivity must be non-negative");
    check_series_control(ctl_);

    if (pb_.datum_hat) {
        ghat_.grid = pb_.grid;
        const auto p = pb_.grid.p_nodes();
        ghat_.values.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            ghat_.values[i] = (*pb_.datum_hat)(p[i]);
    } else {
        if (!pb_.datum)
            throw validation_error("diffusion problem carries no datum");
        ghat_ = fourier_forward(pb_.datum, pb_.grid);
    }
}

// Coefficients T_n(t) of the entire series sum_n (-diffusivity p^2)^n T_n(t)
// that multiplies ghat(p).  They do not depend on p, so one table serves the
// whole frequency grid.  The stop rule certifies the series at the largest
// frequency on the grid; every smaller |p| converges faster.
std::vector<double> DiffusionSolver::series_coefficients(double t) const
{
    const double mu = pb_.order.mu;
    const double nu = flavor_ == Flavor::hilfer ? pb_.order.nu : 1.0;
    const double z = pb_.omega * std::pow(t, pb_.rho);
    const double coef_max =
        pb_.diffusivity * pb_.grid.p_max * pb_.grid.p_max;

    std::vector<double> T;
    T.reserve(32);
    double bound_weight = 1.0; // coef_max^n t^(n mu)
    double bound_max = 0.0;
    int streak = 0;
    for (int n = 0; n < kResolventCap; ++n) {
        double beta, upper, factor;
        if (flavor_ == Flavor::hilfer) {
            beta = mu * (n + 1.0) + nu * (1.0 - mu);
            upper = pb_.gamma_upper * (n + 1.0 - nu);
            factor = std::pow(t, beta - 1.0 - n * mu); // t^(n mu) in bound
        } else {
            beta = n * mu + 1.0;
            upper = n * pb_.gamma_upper;
            factor = 1.0;
        }
        const double ml = ml3({pb_.rho, beta, upper}, z, ctl_);
        T.push_back(factor * ml);

        const double bound = bound_weight * std::fabs(T.back());
        if (!std::isfinite(bound))
            throw envelope_error("diffusion time series overflowed");
        bound_max = std::max(bound_max, bound);
        if (bound <= ctl_.rel_tol * std::max(bound_max, DBL_MIN))
            ++streak;
        else
            streak = 0;
        if (streak >= ctl_.consecutive_small)
            return T;
        bound_weight *= coef_max * std::pow(t, mu);
    }
    throw convergence_error("diffusion time series did not settle",
                            bound_max, static_cast<int>(T.size()));
}

double DiffusionSolver::time_factor(double p, double t) const
{
    if (!std::isfinite(t) || !(t > 0.0))
        throw validation_error("time t must be positive");
    const auto T = series_coefficients(t);
    const double mu = pb_.order.mu;
    const double coef = -pb_.diffusivity * p * p * std::pow(t, mu);
    double w = 1.0;
    double acc = 0.0;
    double peak = 0.0;
    for (double Tn : T) {
        const double term = w * Tn;
        acc += term;
        peak = std::max(peak, std::fabs(term));
        w *= coef;
    }
    // Alternating-sum round-off grows with the largest intermediate term;
    // once that dwarfs the surviving value the digits left are noise.
    if (peak > 1e12 * std::max(std::fabs(acc), DBL_MIN))
        throw envelope_error(
            "spectral time factor cancels beyond double precision at this "
            "frequency; reduce diffusivity, time, or the frequency extent");
    return acc;
}

double DiffusionSolver::operator()(double x, double t) const
{
    if (!std::isfinite(t) || !(t > 0.0))
        throw validation_error("time t must be positive");
    if (!std::isfinite(x))
        throw validation_error("position x must be finite");

    const auto T = series_coefficients(t);
    const double mu = pb_.order.mu;
    const auto p = pb_.grid.p_nodes();

    SpectralFunction uhat;
    uhat.grid = pb_.grid;
    uhat.values.resize(p.size());
    double noise = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double coef =
            -pb_.diffusivity * p[i] * p[i] * std::pow(t, mu);
        double w = 1.0;
        double acc = 0.0;
        double peak = 0.0;
        for (double Tn : T) {
            const double term = w * Tn;
            acc += term;
            peak = std::max(peak, std::fabs(term));
            w *= coef;
        }
        uhat.values[i] = ghat_.values[i] * acc;
        const double amp = std::abs(ghat_.values[i]);
        noise += amp * peak;
        mass += amp * std::fabs(acc);
    }
    // The alternating per-frequency sums leave round-off proportional to
    // their largest intermediate terms; weighted by the spectral amplitude
    // this must stay far below the surviving spectral mass or the inversion
    // integrand is dominated by noise.
    if (noise > 1e6 * std::max(mass, DBL_MIN))
        throw envelope_error(
            "spectral series cancels beyond double precision; reduce "
            "diffusivity, time, or the frequency extent of the grid");

    double imag = 0.0;
    const double value = fourier_inverse(uhat, x, &imag);
    if (std::fabs(imag) > 1e-3 * (std::fabs(value) + 1.0))
        throw envelope_error(
            "inverse transform carries a large imaginary residue; the "
            "spectral data lost its conjugate symmetry");
    return value;
}

double solve_diffusion_hp(const DiffusionProblem& pb, double x, double t,
                          const SeriesControl& ctl)
{
    return DiffusionSolver(pb, DiffusionSolver::Flavor::hilfer, ctl)(x, t);
}

double solve_diffusion_reg(const DiffusionProblem& pb, double x, double t,
                           const SeriesControl& ctl)
{
    return DiffusionSolver(pb, DiffusionSolver::Flavor::regularized, ctl)(x, t);
}

} // namespace prabhakar
