#ifndef PRABHAKAR_TRANSFORMS_HPP
#define PRABHAKAR_TRANSFORMS_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "prabhakar/kernels.hpp"

namespace prabhakar {

/// Fractional orders of the Hilfer-type derivative: mu in (0,1) is the
/// differentiation order, nu in [0,1] interpolates between the
/// Riemann-Liouville flavor (nu = 0) and the Caputo flavor (nu = 1).
struct HilferOrder {
    double mu;
    double nu;
};

/// The (rho, omega, gamma) triple shared by every stage of an operator
/// family; individual stages supply their own order mu.
struct PrabhakarBase {
    double rho;
    double omega;
    double gamma_upper;
};

inline PrabhakarParams with_order(const PrabhakarBase& b, double mu)
{
    return {b.rho, mu, b.omega, b.gamma_upper};
}

/// Controls for the numerical Sumudu transform
///
///   S[f](u) = int_0^inf e^{-x} f(u x) dx ,
///
/// evaluated as an n_nodes-point trapezoid sum on the double-exponential map
/// x = exp(s - e^-s), which converges geometrically for any integrable power
/// head f ~ t^sing_order (fractional sub-powers included).  sing_order sets
/// how deep into the head the rule samples: the omitted mass scales like
/// x^(sing_order+1), so accuracy degrades as sing_order -> -1.  t_cap marks
/// functions only known on [0, cap]: nodes beyond it are dropped, and the
/// dropped exponential mass must stay under decay_tol or the transform
/// refuses (envelope error).  The last-node contribution is monitored the
/// same way to catch non-decaying integrands.
struct SumuduOptions {
    int n_nodes = 64;
    double sing_order = 0.0;
    std::optional<double> t_cap;
    double decay_tol = 1e-9;
};

double sumudu_numeric(const std::function<double(double)>& f, double u,
                      const SumuduOptions& opts = {});

/// Both sides of the Sumudu convolution identity S[f*g](u) = u F(u) G(u),
/// with the convolution itself done by composite Gauss quadrature.  rel_err
/// uses the |rhs| floor 1e-30 shared by the verification suites.
struct ConvolutionCheck {
    double lhs;
    double rhs;
    double abs_err;
    double rel_err;
};

ConvolutionCheck verify_convolution(const std::function<double(double)>& f,
                                    const std::function<double(double)>& g,
                                    double u, const SumuduOptions& opts = {});

/// Sumudu image of the Hilfer-Prabhakar derivative of f, given
/// F(u) = S[f](u) and the weighted initial value K:
///
///   u^-mu (1 - omega u^rho)^gamma F(u)
///     - u^(nu(1-mu)-1) (1 - omega u^rho)^(gamma nu) K .
double sumudu_hp_symbol(const HilferOrder& h, const PrabhakarBase& b,
                        double F_u, double K, double u);

/// Sumudu image of the regularized derivative:
///   u^-mu (1 - omega u^rho)^gamma (F(u) - f(0+)).
double sumudu_hpreg_symbol(double mu, const PrabhakarBase& b, double F_u,
                           double f0, double u);

/// Uniform symmetric frequency grid for the Fourier pair
///   ghat(p) = int e^{-ipx} g(x) dx ,
///   g(x)    = (1/2pi) int e^{ipx} ghat(p) dp ,
/// both truncated to [-x_max, x_max] / [-p_max, p_max] and integrated by the
/// trapezoid rule (spectrally accurate for smooth decaying data).  n_p must
/// be even so p = 0 is a node.
struct FrequencyGrid {
    double p_max = 10.0;
    int n_p = 512;
    double x_max = 12.0;
    int n_x = 2048;

    std::vector<double> p_nodes() const;
};

struct SpectralFunction {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values; // ghat at grid.p_nodes()
};

SpectralFunction fourier_forward(const std::function<double(double)>& g,
                                 const FrequencyGrid& grid = {});

/// Inverse transform at one point.  Returns the real part; the imaginary
/// residue (nonzero only through rounding/asymmetry) is written to
/// imag_residue when provided.
double fourier_inverse(const SpectralFunction& ghat, double x,
                       double* imag_residue = nullptr);

} // namespace prabhakar

#endif
