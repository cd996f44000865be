#include "prabhakar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "prabhakar/errors.hpp"

namespace prabhakar {

namespace {

using ld = long double;

// Implicit-shift QL iteration for a symmetric tridiagonal matrix
// (diagonal d, subdiagonal e), accumulating only the first row of the
// eigenvector matrix in z.  EISPACK tql2 restricted to that row.
void tridiag_eigen_first_row(std::vector<ld>& d, std::vector<ld>& e,
                             std::vector<ld>& z)
{
    const int n = static_cast<int>(d.size());
    const ld eps = 1e-19L;
    e.push_back(0.0L);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                ld dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw envelope_error(
                        "quadrature: tridiagonal QL failed to converge");
                ld g = (d[l + 1] - d[l]) / (2.0L * e[l]);
                ld r = std::hypot(g, 1.0L);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                ld s = 1.0L, c = 1.0L, p = 0.0L;
                int i;
                for (i = m - 1; i >= l; --i) {
                    ld f = s * e[i];
                    ld b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0L) {
                        d[i + 1] -= p;
                        e[m] = 0.0L;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0L * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;

                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0L && i >= l)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0L;
            }
        } while (m != l);
    }
}

struct Recurrence {
    std::vector<ld> a; // diagonal of the Jacobi matrix
    std::vector<ld> b; // b_k, k = 1..n-1 (squares of the subdiagonal)
    ld mu0;            // zeroth moment of the weight
};

Recurrence jacobi_recurrence(int n, ld al, ld be)
{
    Recurrence rc;
    rc.a.resize(n);
    rc.b.resize(n > 1 ? n - 1 : 0);

    ld apb = al + be;
    rc.a[0] = (be - al) / (apb + 2.0L);
    for (int k = 1; k < n; ++k) {
        ld den = (2.0L * k + apb) * (2.0L * k + apb + 2.0L);
        rc.a[k] = (be * be - al * al) / den;
    }
    if (n > 1)
        rc.b[0] = 4.0L * (al + 1.0L) * (be + 1.0L) /
                  ((apb + 2.0L) * (apb + 2.0L) * (apb + 3.0L));
    for (int k = 2; k < n; ++k) {
        ld t = 2.0L * k + apb;
        rc.b[k - 1] = 4.0L * k * (k + al) * (k + be) * (k + apb) /
                      (t * t * (t + 1.0L) * (t - 1.0L));
    }
    rc.mu0 = std::exp2(apb + 1.0L) *
             std::exp(std::lgamma(al + 1.0L) + std::lgamma(be + 1.0L) -
                      std::lgamma(apb + 2.0L));
    return rc;
}

Recurrence laguerre_recurrence(int n)
{
    Recurrence rc;
    rc.a.resize(n);
    rc.b.resize(n > 1 ? n - 1 : 0);
    for (int k = 0; k < n; ++k)
        rc.a[k] = 2.0L * k + 1.0L;
    for (int k = 1; k < n; ++k)
        rc.b[k - 1] = static_cast<ld>(k) * static_cast<ld>(k);
    rc.mu0 = 1.0L;
    return rc;
}

QuadratureRule golub_welsch(const Recurrence& rc)
{
    const int n = static_cast<int>(rc.a.size());
    std::vector<ld> d = rc.a;
    std::vector<ld> e(n, 0.0L);
    for (int k = 0; k + 1 < n; ++k)
        e[k] = std::sqrt(rc.b[k]);
    std::vector<ld> z(n, 0.0L);
    z[0] = 1.0L;

    tridiag_eigen_first_row(d, e, z);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&d](int i, int j) { return d[i] < d[j]; });

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = static_cast<double>(d[idx[i]]);
        rule.weights[i] = static_cast<double>(rc.mu0 * z[idx[i]] * z[idx[i]]);
    }
    return rule;
}

void check_n(int n)
{
    if (n < 1)
        throw validation_error("quadrature: need at least one node");
    if (n > 512)
        throw validation_error("quadrature: node count capped at 512");
}

} // namespace

QuadratureRule gauss_legendre(int n)
{
    check_n(n);
    return golub_welsch(jacobi_recurrence(n, 0.0L, 0.0L));
}

QuadratureRule gauss_jacobi(int n, double a, double b)
{
    check_n(n);
    if (!(a > -1.0) || !(b > -1.0))
        throw validation_error("gauss_jacobi: weight exponents must be > -1, "
                               "got a=" + std::to_string(a) +
                               " b=" + std::to_string(b));
    return golub_welsch(jacobi_recurrence(n, a, b));
}

QuadratureRule gauss_laguerre(int n)
{
    check_n(n);
    return golub_welsch(laguerre_recurrence(n));
}

QuadratureRule gauss_legendre_on(double lo, double hi, int n)
{
    QuadratureRule r = gauss_legendre(n);
    double mid = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = mid + half * r.nodes[i];
        r.weights[i] *= half;
    }
    return r;
}

QuadratureRule gauss_jacobi_01(int n, double a, double b)
{
    // x = 2s - 1 maps [0,1] to [-1,1]; (1-x)^a (1+x)^b dx becomes
    // 2^(a+b+1) (1-s)^a s^b ds.
    QuadratureRule r = gauss_jacobi(n, a, b);
    double scale = std::exp2(-(a + b + 1.0));
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = 0.5 * (r.nodes[i] + 1.0);
        r.weights[i] *= scale;
    }
    return r;
}

} // namespace prabhakar
