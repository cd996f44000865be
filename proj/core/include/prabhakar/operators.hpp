#ifndef PRABHAKAR_OPERATORS_HPP
#define PRABHAKAR_OPERATORS_HPP

#include <optional>
#include <vector>

#include "prabhakar/grid.hpp"
#include "prabhakar/kernels.hpp"
#include "prabhakar/transforms.hpp"

namespace prabhakar {

/// Gauss orders used by the product-integration scheme: Legendre on regular
/// cells, Jacobi on cells touching a power singularity (the kernel end at
/// y = t always; the origin too when the operand carries a t^sigma head).
struct QuadratureConfig {
    int nodes_per_cell = 4;
    int jacobi_nodes = 8;
};

/// Prabhakar integral (convolution with the kernel) at t in (0, T]:
///
///   (E f)(t) = int_0^t (t-y)^(mu-1) E^gamma_(rho,mu)(omega (t-y)^rho) f(y) dy
///
/// evaluated cell by cell on f's grid.  On the cell adjacent to y = t the
/// factor (t-y)^(mu-1) becomes a Gauss-Jacobi weight and only the smooth
/// Mittag-Leffler factor is sampled; gamma = 0 reduces the whole kernel to
/// the Riemann-Liouville one.
double prabhakar_integral(const PrabhakarParams& p, const SampledFunction& f,
                          double t, const QuadratureConfig& q = {});

/// The integral at every grid point of f (index 0 holds the t -> 0+ limit,
/// which is 0 whenever the combined order mu + sigma is positive).
std::vector<double> prabhakar_integral_table(const PrabhakarParams& p,
                                             const SampledFunction& f,
                                             const QuadratureConfig& q = {});

/// Fourth-order first derivative from 5-point stencils on an arbitrary grid
/// (one-sided near the ends).  Weights by the Fornberg recursion.
std::vector<double> derivative_table(const std::vector<double>& t,
                                     const std::vector<double>& v);
double derivative_at(const std::vector<double>& t,
                     const std::vector<double>& v, double x);

/// Hilfer-Prabhakar derivative of order (mu, nu):
///
///   D f = E^(-gamma nu)_(rho, nu(1-mu), omega)
///           d/dt  E^(-gamma(1-nu))_(rho, (1-nu)(1-mu), omega) f ,
///
/// with the convention that a stage of order 0 (which always comes with
/// upper parameter 0 here) is the identity.  The pipeline tabulates the
/// inner integral on f's grid, differentiates it with 4th-order stencils,
/// and applies the outer integral to that derivative table.
///
/// A nonzero initial value rides through the pipeline as the exact image of
/// the constant: f is split as f(0+) + (f - f(0+)), the numerical stages see
/// the zero-initial-value part, and f(0+) t^-mu E^-gamma_(rho,1-mu)(omega
/// t^rho) is added in closed form.  (Finite differences of the t^m inner
/// image of a constant have O(1) relative error near 0 at any resolution,
/// so the split is what keeps small-t behavior honest.)
class HilferPrabhakarDerivative {
public:
    HilferPrabhakarDerivative(const HilferOrder& h, const PrabhakarBase& b,
                              SampledFunction f,
                              const QuadratureConfig& q = {});

    /// D f at t in [min_t, T].
    double operator()(double t) const;

    /// Smallest admissible t (the first positive grid point: below it the
    /// tabulated stages have no support).
    double min_t() const { return grid_[1]; }

private:
    HilferOrder h_;
    PrabhakarBase b_;
    QuadratureConfig q_;
    std::vector<double> grid_;
    double f0_ = 0.0;
    bool outer_identity_;
    std::vector<double> inner_;              // inner-integral tabulation
    std::optional<SampledFunction> operand_; // d/dt of inner, outer input
    std::optional<PrabhakarParams> outer_params_;
    std::optional<PreparedKernel> init_kernel_; // closed-form f(0+) image
};

double hp_derivative(const HilferOrder& h, const PrabhakarBase& b,
                     const SampledFunction& f, double t,
                     const QuadratureConfig& q = {});

/// Regularized (Caputo-flavored) derivative: the same outer kernel applied
/// to f' instead, E^(-gamma)_(rho,1-mu,omega) d/dt f.  Requires f marked
/// absolutely continuous (ac1).
class RegularizedHpDerivative {
public:
    RegularizedHpDerivative(double mu, const PrabhakarBase& b,
                            SampledFunction f, const QuadratureConfig& q = {});

    double operator()(double t) const;

private:
    double mu_;
    PrabhakarBase b_;
    QuadratureConfig q_;
    SampledFunction fprime_;
};

double hp_derivative_regularized(double mu, const PrabhakarBase& b,
                                 const SampledFunction& f, double t,
                                 const QuadratureConfig& q = {});

/// Weighted initial value K = lim_(t->0+) E^(-gamma(1-nu))_(rho,(1-nu)(1-mu))
/// f(t): the inner integral is evaluated at the three smallest positive grid
/// points and extrapolated through the power model I = K + c t^eta.  Smooth
/// bounded f gives K = 0; the limit is nonzero exactly when f carries the
/// conjugate kernel singularity.  Throws extrapolation_error (with the three
/// samples) when the model cannot be fitted.
double initial_weighted_limit(const HilferOrder& h, const PrabhakarBase& b,
                              const SampledFunction& f,
                              const QuadratureConfig& q = {});

} // namespace prabhakar

#endif
