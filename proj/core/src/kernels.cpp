#include "prabhakar/kernels.hpp"

#include <cmath>
#include <string>

#include "prabhakar/errors.hpp"

namespace prabhakar {

namespace {
void check_params(const PrabhakarParams& p)
{
    if (!(p.rho > 0.0) || !std::isfinite(p.rho))
        throw validation_error("kernel: rho must be positive");
    if (!(p.mu > 0.0) || !std::isfinite(p.mu))
        throw validation_error("kernel: mu must be positive");
    if (!std::isfinite(p.omega) || !std::isfinite(p.gamma_upper))
        throw validation_error("kernel: omega and gamma must be finite");
}
} // namespace

double kernel_eval(const PrabhakarParams& p, double t, const SeriesControl& ctl)
{
    check_params(p);
    if (!(t > 0.0))
        throw validation_error("kernel_eval: t must be positive");
    MLParams ml{p.rho, p.mu, p.gamma_upper};
    return std::pow(t, p.mu - 1.0) * ml3(ml, p.omega * std::pow(t, p.rho), ctl);
}

double sumudu_symbol(const PrabhakarParams& p, double u)
{
    check_params(p);
    if (!(u > 0.0))
        throw validation_error("sumudu_symbol: u must be positive");
    double branch = 1.0 - p.omega * std::pow(u, p.rho);
    if (!(branch > 0.0))
        throw envelope_error(
            "sumudu_symbol: outside the real branch, 1 - omega u^rho = " +
            std::to_string(branch));
    return std::pow(u, p.mu - 1.0) * std::pow(branch, -p.gamma_upper);
}

PreparedKernel::PreparedKernel(const PrabhakarParams& p,
                               const SeriesControl& ctl)
    : p_(p), ml_(MLParams{p.rho, p.mu, p.gamma_upper}, ctl)
{
    check_params(p);
}

double PreparedKernel::operator()(double t) const
{
    return std::pow(t, p_.mu - 1.0) * ml_factor(t);
}

double PreparedKernel::ml_factor(double t) const
{
    return ml_.eval(p_.omega * std::pow(t, p_.rho));
}

} // namespace prabhakar
