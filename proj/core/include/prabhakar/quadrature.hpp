#ifndef PRABHAKAR_QUADRATURE_HPP
#define PRABHAKAR_QUADRATURE_HPP

#include <vector>

namespace prabhakar {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [-1, 1] for weight (1-x)^a (1+x)^b,
/// a, b > -1.  Nodes/weights come from the Golub-Welsch eigenproblem of the
/// monic three-term recurrence, solved in long double.
QuadratureRule gauss_jacobi(int n, double a, double b);

/// n-point Gauss-Laguerre rule on [0, inf) for weight e^{-x}.
QuadratureRule gauss_laguerre(int n);

/// Gauss-Legendre transplanted to [lo, hi].
QuadratureRule gauss_legendre_on(double lo, double hi, int n);

/// Gauss-Jacobi transplanted to [0, 1] for weight (1-s)^a s^b.  The weights
/// absorb the Jacobian, so  integral = sum w_i g(s_i)  approximates
/// int_0^1 (1-s)^a s^b g(s) ds.
QuadratureRule gauss_jacobi_01(int n, double a, double b);

} // namespace prabhakar

#endif
