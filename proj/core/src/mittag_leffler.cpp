#include "prabhakar/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "prabhakar/errors.hpp"
#include "prabhakar/gamma_utils.hpp"

namespace prabhakar {

namespace {

void check_params(const MLParams& p, const SeriesControl& ctl)
{
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha))
        throw validation_error("ml3: alpha must be positive and finite");
    if (!std::isfinite(p.beta) || !std::isfinite(p.gamma_upper))
        throw validation_error("ml3: beta and gamma must be finite");
    if (!(ctl.rel_tol > 0.0))
        throw validation_error("ml3: rel_tol must be positive");
    if (ctl.max_terms < 1)
        throw validation_error("ml3: max_terms must be at least 1");
    if (ctl.consecutive_small < 2)
        throw validation_error(
            "ml3: consecutive_small must be >= 2 (isolated zero terms occur "
            "at 1/Gamma poles)");
}

bool accept_term(double term, double sum, double rel_tol, int* streak,
                 int needed)
{
    double scale = std::max(std::fabs(sum),
                            std::numeric_limits<double>::min());
    if (std::fabs(term) <= rel_tol * scale)
        ++*streak;
    else
        *streak = 0;
    return *streak >= needed;
}

} // namespace

Ml3Result ml3_detailed(const MLParams& p, double z, const SeriesControl& ctl)
{
    check_params(p, ctl);
    if (!std::isfinite(z))
        throw validation_error("ml3: z must be finite");

    // Exact reductions.
    if (p.gamma_upper == 0.0 || z == 0.0) {
        double v = reciprocal_gamma(p.beta);
        return {v, 1, std::fabs(v), false};
    }
    if (p.alpha == 1.0 && p.beta == 1.0 && p.gamma_upper == 1.0) {
        double v = std::exp(z);
        return {v, 1, std::fabs(v), false};
    }

    // Signed log magnitude of c_k = (gamma)_k z^k / k!; c_0 = 1.
    double log_c = 0.0;
    int sign_c = 1;

    double sum = 0.0;
    double max_abs = 0.0;
    int streak = 0;
    double last_abs = 0.0;
    int k = 0;

    for (; k < ctl.max_terms; ++k) {
        SignedLogGamma g = signed_log_gamma(p.alpha * k + p.beta);
        double term = 0.0;
        if (g.sign != 0 && sign_c != 0)
            term = sign_c * g.sign * std::exp(log_c - g.log_abs);

        sum += term;
        last_abs = std::fabs(term);
        max_abs = std::max(max_abs, last_abs);

        if (!std::isfinite(sum))
            throw envelope_error("ml3: series overflowed double range");

        // A 1/Gamma pole zeroes the term by convention; that says nothing
        // about convergence, so it neither feeds nor resets the streak.
        if (g.sign != 0 &&
            accept_term(term, sum, ctl.rel_tol, &streak, ctl.consecutive_small)) {
            ++k;
            break;
        }

        double rising = p.gamma_upper + k;
        if (rising == 0.0 || sign_c == 0) {
            // (gamma)_j vanishes for all j > k: the series is a polynomial
            // and the sum above is already exact.
            ++k;
            streak = ctl.consecutive_small;
            break;
        }
        log_c += std::log(std::fabs(rising) * std::fabs(z)) - std::log1p(k);
        if ((rising < 0.0) != (z < 0.0))
            sign_c = -sign_c;
    }

    if (streak < ctl.consecutive_small)
        throw convergence_error(
            "ml3: no convergence within " + std::to_string(ctl.max_terms) +
                " terms (last |term| = " + std::to_string(last_abs) + ")",
            last_abs, k);

    bool cancel = max_abs > 1e8 * std::max(std::fabs(sum),
                                           std::numeric_limits<double>::min());
    return {sum, k, max_abs, cancel};
}

double ml3(const MLParams& p, double z, const SeriesControl& ctl)
{
    return ml3_detailed(p, z, ctl).value;
}

PreparedMl3::PreparedMl3(const MLParams& p, const SeriesControl& ctl)
    : p_(p), ctl_(ctl), exhausted_table_(false)
{
    check_params(p, ctl);

    coeff_.reserve(64);
    double log_c = 0.0; // log of (gamma)_k / k!
    int sign_c = 1;
    int tail_zero = 0;

    for (int k = 0; k < ctl_.max_terms; ++k) {
        double c = 0.0;
        if (sign_c != 0) {
            SignedLogGamma g = signed_log_gamma(p_.alpha * k + p_.beta);
            if (g.sign != 0)
                c = sign_c * g.sign * std::exp(log_c - g.log_abs);
        }
        coeff_.push_back(c);

        double rising = p_.gamma_upper + k;
        if (rising == 0.0 || sign_c == 0) {
            sign_c = 0;
            break; // polynomial: every later coefficient is zero
        }
        log_c += std::log(std::fabs(rising)) - std::log1p(k);
        if (rising < 0.0)
            sign_c = -sign_c;

        // Past all Gamma poles the coefficients decay superexponentially;
        // once they underflow they stay at zero and the table can stop.
        if (p_.alpha * k + p_.beta > 1.0 && c == 0.0) {
            if (++tail_zero >= 4)
                break;
        } else {
            tail_zero = 0;
        }
    }
    if (static_cast<int>(coeff_.size()) >= ctl_.max_terms && sign_c != 0)
        exhausted_table_ = true;
}

double PreparedMl3::eval(double z) const
{
    if (p_.gamma_upper == 0.0 || z == 0.0)
        return coeff_[0];
    if (p_.alpha == 1.0 && p_.beta == 1.0 && p_.gamma_upper == 1.0)
        return std::exp(z);

    double sum = 0.0;
    double zk = 1.0;
    int streak = 0;
    bool overflow = false;
    for (double c : coeff_) {
        double term = c * zk;
        sum += term;
        // Zero coefficients (poles or underflowed tail) carry no convergence
        // evidence; certification then comes from table completeness below.
        if (c != 0.0 &&
            accept_term(term, sum, ctl_.rel_tol, &streak,
                        ctl_.consecutive_small))
            return sum;
        zk *= z;
        if (!std::isfinite(zk)) {
            overflow = true;
            break;
        }
    }
    if (!exhausted_table_ && !overflow && std::isfinite(sum))
        return sum; // table ended because all later terms are exactly zero
    return ml3(p_, z, ctl_); // cannot certify convergence from the table
}

} // namespace prabhakar
