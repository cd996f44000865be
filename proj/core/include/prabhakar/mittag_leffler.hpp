#ifndef PRABHAKAR_MITTAG_LEFFLER_HPP
#define PRABHAKAR_MITTAG_LEFFLER_HPP

#include <vector>

namespace prabhakar {

/// Parameters of the three-parameter Mittag-Leffler function
///
///   E^gamma_(alpha,beta)(z) = sum_k (gamma)_k z^k / (Gamma(alpha k + beta) k!)
///
/// with (gamma)_k the rising factorial.  alpha must be positive; beta and
/// gamma may be any reals (beta <= 0 and gamma <= 0 are meaningful: terms
/// whose Gamma argument hits a non-positive integer contribute exactly zero,
/// and a non-positive integer gamma truncates the series to a polynomial).
struct MLParams {
    double alpha;
    double beta;
    double gamma_upper;
};

/// Truncation policy shared by every series in the library.
///
/// consecutive_small must be at least 2: a single tiny term can be an
/// accident of sign cancellation or of a 1/Gamma pole, not of convergence.
struct SeriesControl {
    double rel_tol = 1e-14;
    int max_terms = 2000;
    int consecutive_small = 3;
};

struct Ml3Result {
    double value;
    int terms;              // terms actually inspected
    double max_abs_term;    // largest intermediate term magnitude
    bool cancellation;      // max_abs_term > 1e8 * |value|
};

/// Evaluate E^gamma_(alpha,beta)(z) by direct summation.  The running
/// coefficient (gamma)_k z^k / k! is carried as a signed log magnitude so the
/// recurrence survives 1/Gamma poles (the affected terms are exactly zero)
/// and stays in range for arguments far beyond double overflow territory.
///
/// Known exact reductions are dispatched before the series: gamma = 0 and
/// z = 0 give 1/Gamma(beta), and (1,1,1) gives exp(z).
///
/// Throws validation_error for bad parameters and convergence_error when the
/// term budget is exhausted.
Ml3Result ml3_detailed(const MLParams& p, double z, const SeriesControl& ctl = {});

double ml3(const MLParams& p, double z, const SeriesControl& ctl = {});

/// Coefficient table c_k = (gamma)_k / (Gamma(alpha k + beta) k!) frozen once,
/// so repeated evaluations (quadrature nodes, tabulation sweeps) cost one
/// short polynomial sum each instead of per-term gamma calls.  eval matches
/// ml3 to rounding on the shared envelope; if the stored table cannot certify
/// convergence for some z it falls back to the full routine.
class PreparedMl3 {
public:
    explicit PreparedMl3(const MLParams& p, const SeriesControl& ctl = {});

    double eval(double z) const;
    const MLParams& params() const { return p_; }

private:
    MLParams p_;
    SeriesControl ctl_;
    std::vector<double> coeff_;
    bool exhausted_table_;  // table ends because max_terms hit, not decay
};

} // namespace prabhakar

#endif
